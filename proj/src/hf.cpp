#include "omset/hf.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>

namespace omset {

Hf::Hf(std::vector<Hf> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

Hf Hf::parse(const std::string& text) {
  size_t pos = 0;
  auto skipWs = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  std::function<Hf()> parseSet = [&]() -> Hf {
    skipWs();
    if (pos >= text.size() || text[pos] != '{')
      throw std::invalid_argument("HF literal: expected '{' at position " +
                                  std::to_string(pos));
    ++pos;
    std::vector<Hf> members;
    skipWs();
    if (pos < text.size() && text[pos] == '}') {
      ++pos;
      return Hf(std::move(members));
    }
    while (true) {
      members.push_back(parseSet());
      skipWs();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == '}') {
        ++pos;
        return Hf(std::move(members));
      }
      throw std::invalid_argument("HF literal: expected ',' or '}' at position " +
                                  std::to_string(pos));
    }
  };
  Hf out = parseSet();
  skipWs();
  if (pos != text.size())
    throw std::invalid_argument("HF literal: trailing characters");
  return out;
}

std::strong_ordering Hf::operator<=>(const Hf& other) const {
  const size_t n = std::min(members_.size(), other.members_.size());
  for (size_t i = 0; i < n; ++i)
    if (auto cmp = members_[i] <=> other.members_[i]; cmp != 0) return cmp;
  return members_.size() <=> other.members_.size();
}

bool Hf::operator==(const Hf& other) const {
  return (*this <=> other) == 0;
}

Hf Hf::natural(int n) {
  Hf cur;
  for (int i = 0; i < n; ++i) {
    std::vector<Hf> next = cur.members();
    next.push_back(cur);
    cur = Hf(std::move(next));
  }
  return cur;
}

bool Hf::contains(const Hf& x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool Hf::subsetOf(const Hf& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

int Hf::hereditarySize() const {
  int total = 1;
  for (const Hf& m : members_) total += m.hereditarySize();
  return total;
}

std::string Hf::toString() const {
  std::string s = "{";
  for (size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ",";
    s += members_[i].toString();
  }
  return s + "}";
}

std::vector<Hf> hfUniverse(int maxHsize) {
  if (maxHsize < 1 || maxHsize > 6)
    throw std::invalid_argument("hfUniverse supports hereditary size 1..6");
  std::set<Hf> known = {Hf::empty()};
  // Grow by powerset steps until no new set fits the size budget. The pool
  // stays below 16 sets for the supported budgets.
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Hf> pool(known.begin(), known.end());
    const size_t k = pool.size();
    for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
      std::vector<Hf> members;
      for (size_t i = 0; i < k; ++i)
        if ((mask >> i) & 1ul) members.push_back(pool[i]);
      Hf candidate(std::move(members));
      if (candidate.hereditarySize() <= maxHsize &&
          known.insert(candidate).second)
        grew = true;
    }
  }
  std::vector<Hf> out(known.begin(), known.end());
  return out;
}

}  // namespace omset
