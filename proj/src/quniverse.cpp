#include "omset/quniverse.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "omset/commutator.hpp"

namespace omset {

std::string Universe::keyOf(const std::vector<std::pair<NodeId, Elem>>& e) {
  std::string key;
  key.reserve(e.size() * 8);
  for (auto [c, v] : e) {
    key.append(reinterpret_cast<const char*>(&c), sizeof c);
    key.append(reinterpret_cast<const char*>(&v), sizeof v);
  }
  return key;
}

NodeId Universe::intern(std::vector<std::pair<NodeId, Elem>> entries) {
  std::sort(entries.begin(), entries.end());
  const std::string key = keyOf(entries);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  NodeData data;
  data.rank = 1;
  for (auto [c, v] : entries) {
    if (c < 0 || c >= size())
      throw std::out_of_range("child node id out of range");
    if (v < 0 || v >= logic_->size())
      throw std::out_of_range("entry value out of range");
    data.rank = std::max(data.rank, nodes_[c].rank + 1);
    data.support |= nodes_[c].support;
    data.support = subsetWith(data.support, v);
  }
  data.entries = std::move(entries);
  nodes_.push_back(std::move(data));
  const NodeId id = size() - 1;
  index_.emplace(key, id);
  return id;
}

NodeId Universe::restrictNode(NodeId u, Elem p) {
  const std::uint64_t memoKey =
      (static_cast<std::uint64_t>(u) << 8) | static_cast<std::uint64_t>(p);
  if (auto it = restrictMemo_.find(memoKey); it != restrictMemo_.end())
    return it->second;
  std::vector<std::pair<NodeId, Elem>> entries;
  entries.reserve(node(u).entries.size());
  for (auto [c, v] : node(u).entries)
    entries.push_back({restrictNode(c, p), logic_->meet(v, p)});
  const NodeId id = intern(std::move(entries));
  restrictMemo_.emplace(memoKey, id);
  return id;
}

NodeId Universe::checkEmbed(const Hf& set) {
  std::vector<std::pair<NodeId, Elem>> entries;
  for (const Hf& m : set.members())
    entries.push_back({checkEmbed(m), logic_->top()});
  return intern(std::move(entries));
}

NodeId Universe::makeUb(Elem b) { return intern({{emptyNode(), b}}); }

Subset Universe::supportOfAll(const std::vector<NodeId>& nodes) const {
  Subset s = 0;
  for (NodeId id : nodes) s |= support(id);
  return s;
}

Elem Universe::qsetCommutator(const std::vector<NodeId>& nodes) const {
  return commutator(*logic_, supportOfAll(nodes));
}

Subset Universe::generatedLogic(const std::vector<NodeId>& nodes) const {
  return logic_->sublogicGenerated(supportOfAll(nodes));
}

std::string Universe::toString(NodeId id) const {
  const NodeData& d = node(id);
  if (d.entries.empty()) return "{}";
  std::string s = "{";
  for (size_t i = 0; i < d.entries.size(); ++i) {
    if (i) s += ", ";
    s += toString(d.entries[i].first) + ": " +
         logic_->name(d.entries[i].second);
  }
  return s + "}";
}

Fragment buildFragment(Universe& u, int rankBound, int domCap,
                       long nodeBudget) {
  if (rankBound < 1) throw std::invalid_argument("rankBound must be >= 1");
  if (domCap < 0) throw std::invalid_argument("domCap must be >= 0");
  const int n = u.logic().size();
  Fragment frag;
  frag.rankBound = rankBound;
  frag.domCap = domCap;
  frag.nodes.push_back(u.emptyNode());
  std::vector<char> seen(1, 1);
  auto noteSeen = [&](NodeId id) {
    if (id >= static_cast<int>(seen.size())) seen.resize(id + 1, 0);
    if (seen[id]) return false;
    seen[id] = 1;
    return true;
  };

  for (int stratum = 2; stratum <= rankBound; ++stratum) {
    const std::vector<NodeId> pool = frag.nodes;  // strata are cumulative
    // Enumerate domains: subsets of the pool of size <= domCap, by size then
    // lexicographic position, then all value assignments in carrier order.
    std::vector<int> pick;
    std::vector<NodeId> added;
    auto emit = [&](const std::vector<int>& dom) {
      const int k = static_cast<int>(dom.size());
      std::vector<int> val(k, 0);
      while (true) {
        std::vector<std::pair<NodeId, Elem>> entries;
        entries.reserve(k);
        for (int i = 0; i < k; ++i) entries.push_back({pool[dom[i]], val[i]});
        const NodeId id = u.intern(std::move(entries));
        if (noteSeen(id)) {
          added.push_back(id);
          if (static_cast<long>(frag.nodes.size() + added.size()) > nodeBudget)
            throw FragmentLimitError(
                "fragment enumeration exceeds node budget of " +
                std::to_string(nodeBudget));
        }
        int i = k - 1;
        while (i >= 0 && val[i] == n - 1) val[i--] = 0;
        if (i < 0) break;
        ++val[i];
      }
    };
    std::function<void(size_t, int)> chooseDom = [&](size_t start, int left) {
      if (left == 0) return;
      for (size_t i = start; i < pool.size(); ++i) {
        pick.push_back(static_cast<int>(i));
        emit(pick);
        chooseDom(i + 1, left - 1);
        pick.pop_back();
      }
    };
    chooseDom(0, domCap);
    // Enumeration order (domain DFS, then value counter) is deterministic,
    // so node ids and fragment order are stable run to run.
    frag.nodes.insert(frag.nodes.end(), added.begin(), added.end());
  }
  return frag;
}

NodeId mapNode(const Universe& from, NodeId id, Universe& to,
               const std::vector<Elem>& elemMap) {
  std::vector<std::pair<NodeId, Elem>> entries;
  for (auto [c, v] : from.node(id).entries) {
    const Elem mapped = elemMap[v];
    if (mapped < 0)
      throw std::invalid_argument("node value not representable in target");
    entries.push_back({mapNode(from, c, to, elemMap), mapped});
  }
  return to.intern(std::move(entries));
}

namespace {

struct LiteralParser {
  Universe& u;
  const std::string& text;
  size_t pos = 0;

  void skipWs() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("node literal: " + what + " at position " +
                                std::to_string(pos) + " in '" + text + "'");
  }

  bool eat(char c) {
    skipWs();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string ident() {
    skipWs();
    size_t start = pos;
    while (pos < text.size() && text[pos] != ':' && text[pos] != ',' &&
           text[pos] != '}' && text[pos] != ')' &&
           !std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected a name");
    return text.substr(start, pos - start);
  }

  Elem elemByName(const std::string& name) {
    for (Elem e = 0; e < u.logic().size(); ++e)
      if (u.logic().name(e) == name) return e;
    throw std::invalid_argument("unknown element name '" + name + "'");
  }

  NodeId parseNode() {
    skipWs();
    if (pos + 5 <= text.size() && text.compare(pos, 5, "check") == 0) {
      pos += 5;
      if (!eat('(')) fail("expected '(' after check");
      size_t depth = 0, start = pos;
      while (pos < text.size()) {
        if (text[pos] == '{') ++depth;
        if (text[pos] == '}') --depth;
        if (text[pos] == ')' && depth == 0) break;
        ++pos;
      }
      if (pos >= text.size()) fail("unterminated check(...)");
      Hf set = Hf::parse(text.substr(start, pos - start));
      ++pos;  // ')'
      return u.checkEmbed(set);
    }
    if (pos + 2 <= text.size() && text.compare(pos, 2, "ub") == 0) {
      pos += 2;
      if (!eat('(')) fail("expected '(' after ub");
      std::string name = ident();
      if (!eat(')')) fail("expected ')' after ub element");
      return u.makeUb(elemByName(name));
    }
    if (!eat('{')) fail("expected '{', check(...) or ub(...)");
    std::vector<std::pair<NodeId, Elem>> entries;
    skipWs();
    if (eat('}')) return u.intern(std::move(entries));
    while (true) {
      NodeId child = parseNode();
      if (!eat(':')) fail("expected ':' after child literal");
      entries.push_back({child, elemByName(ident())});
      if (eat(',')) continue;
      if (eat('}')) return u.intern(std::move(entries));
      fail("expected ',' or '}'");
    }
  }
};

}  // namespace

NodeId parseNodeLiteral(Universe& u, const std::string& text) {
  LiteralParser p{u, text};
  NodeId id = p.parseNode();
  p.skipWs();
  if (p.pos != text.size()) p.fail("trailing characters");
  return id;
}

}  // namespace omset
