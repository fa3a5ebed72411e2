#include "omset/generators.hpp"

#include <stdexcept>

namespace omset {

namespace {

std::string atomSetName(unsigned mask, int k) {
  if (mask == 0) return "0";
  if (mask + 1 == (1u << k)) return "1";
  std::string s;
  for (int i = 0; i < k; ++i)
    if (mask & (1u << i)) s += static_cast<char>('a' + i);
  return s;
}

}  // namespace

Logic booleanAlgebra(int k) {
  if (k < 1 || k > 6)
    throw std::invalid_argument("booleanAlgebra: k must be in [1,6]");
  RawLattice raw;
  raw.n = 1 << k;
  for (int i = 0; i < raw.n; ++i) {
    raw.ortho.push_back((raw.n - 1) ^ i);
    raw.names.push_back(atomSetName(static_cast<unsigned>(i), k));
    for (int j = 0; j < raw.n; ++j)
      if ((i & j) == i) raw.leqPairs.push_back({i, j});
  }
  return Logic::fromRaw(raw);
}

Logic moLattice(int k) {
  if (k < 1 || k > 31)
    throw std::invalid_argument("moLattice: k must be in [1,31]");
  RawLattice raw;
  raw.n = 2 * k + 2;
  raw.names = {"0", "1"};
  raw.ortho = {1, 0};
  for (int i = 0; i < k; ++i) {
    std::string base = k <= 13 ? std::string(1, static_cast<char>('a' + i))
                               : "x" + std::to_string(i + 1);
    raw.names.push_back(base);
    raw.names.push_back(base + "'");
    raw.ortho.push_back(3 + 2 * i);
    raw.ortho.push_back(2 + 2 * i);
  }
  for (int e = 0; e < raw.n; ++e) {
    raw.leqPairs.push_back({0, e});
    raw.leqPairs.push_back({e, 1});
  }
  return Logic::fromRaw(raw);
}

Logic product(const Logic& a, const Logic& b) {
  if (a.size() * b.size() > kMaxCarrier)
    throw std::invalid_argument("product: carrier would exceed " +
                                std::to_string(kMaxCarrier));
  RawLattice raw;
  raw.n = a.size() * b.size();
  auto enc = [&](Elem x, Elem y) { return x * b.size() + y; };
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < b.size(); ++y) {
      raw.names.push_back("(" + a.name(x) + "," + b.name(y) + ")");
      raw.ortho.push_back(enc(a.ocompl(x), b.ocompl(y)));
      for (Elem x2 = 0; x2 < a.size(); ++x2)
        for (Elem y2 = 0; y2 < b.size(); ++y2)
          if (a.le(x, x2) && b.le(y, y2))
            raw.leqPairs.push_back({enc(x, y), enc(x2, y2)});
    }
  return Logic::fromRaw(raw);
}

Logic horizontalSum(const Logic& a, const Logic& b) {
  std::vector<Elem> propA, propB;
  for (Elem x = 0; x < a.size(); ++x)
    if (x != a.bot() && x != a.top()) propA.push_back(x);
  for (Elem x = 0; x < b.size(); ++x)
    if (x != b.bot() && x != b.top()) propB.push_back(x);
  const int n = 2 + static_cast<int>(propA.size() + propB.size());
  if (n > kMaxCarrier)
    throw std::invalid_argument("horizontalSum: carrier would exceed " +
                                std::to_string(kMaxCarrier));
  std::vector<Elem> idxA(a.size(), -1), idxB(b.size(), -1);
  RawLattice raw;
  raw.n = n;
  raw.names = {"0", "1"};
  raw.ortho = {1, 0};
  idxA[a.bot()] = 0;
  idxA[a.top()] = 1;
  idxB[b.bot()] = 0;
  idxB[b.top()] = 1;
  for (Elem x : propA) {
    idxA[x] = static_cast<int>(raw.names.size());
    raw.names.push_back("L." + a.name(x));
    raw.ortho.push_back(-1);
  }
  for (Elem x : propB) {
    idxB[x] = static_cast<int>(raw.names.size());
    raw.names.push_back("R." + b.name(x));
    raw.ortho.push_back(-1);
  }
  for (Elem x : propA) raw.ortho[idxA[x]] = idxA[a.ocompl(x)];
  for (Elem x : propB) raw.ortho[idxB[x]] = idxB[b.ocompl(x)];
  for (int e = 0; e < n; ++e) {
    raw.leqPairs.push_back({0, e});
    raw.leqPairs.push_back({e, 1});
  }
  for (Elem x : propA)
    for (Elem y : propA)
      if (a.le(x, y)) raw.leqPairs.push_back({idxA[x], idxA[y]});
  for (Elem x : propB)
    for (Elem y : propB)
      if (b.le(x, y)) raw.leqPairs.push_back({idxB[x], idxB[y]});
  return Logic::fromRaw(raw);
}

namespace {

Logic parseGenSpec(const std::string& s, size_t& pos) {
  auto fail = [&]() -> Logic {
    throw std::invalid_argument(
        "bad generator spec '" + s +
        "' (expected boolean:k | mo:k | prod:A,B | hsum:A,B)");
  };
  size_t colon = s.find(':', pos);
  if (colon == std::string::npos) return fail();
  std::string head = s.substr(pos, colon - pos);
  pos = colon + 1;
  if (head == "boolean" || head == "mo") {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) return fail();
    int k = std::stoi(s.substr(start, pos - start));
    return head == "boolean" ? booleanAlgebra(k) : moLattice(k);
  }
  if (head == "prod" || head == "hsum") {
    Logic lhs = parseGenSpec(s, pos);
    if (pos >= s.size() || s[pos] != ',') return fail();
    ++pos;
    Logic rhs = parseGenSpec(s, pos);
    return head == "prod" ? product(lhs, rhs) : horizontalSum(lhs, rhs);
  }
  return fail();
}

}  // namespace

Logic fromGenSpec(const std::string& spec) {
  size_t pos = 0;
  Logic out = parseGenSpec(spec, pos);
  if (pos != spec.size())
    throw std::invalid_argument("trailing characters in generator spec '" +
                                spec + "'");
  return out;
}

std::vector<NamedLogic> sweepLogics() {
  std::vector<NamedLogic> out;
  out.push_back({"boolean:1", booleanAlgebra(1)});
  out.push_back({"boolean:2", booleanAlgebra(2)});
  out.push_back({"boolean:3", booleanAlgebra(3)});
  out.push_back({"mo:2", moLattice(2)});
  out.push_back({"mo:3", moLattice(3)});
  out.push_back({"prod:boolean:1,mo:2", product(booleanAlgebra(1), moLattice(2))});
  out.push_back({"hsum:boolean:2,boolean:2",
                 horizontalSum(booleanAlgebra(2), booleanAlgebra(2))});
  return out;
}

}  // namespace omset
