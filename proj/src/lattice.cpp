#include "omset/lattice.hpp"

#include <algorithm>

namespace omset {

std::vector<Elem> subsetElems(Subset s) {
  std::vector<Elem> out;
  for (Elem e = 0; s; ++e, s >>= 1)
    if (s & 1u) out.push_back(e);
  return out;
}

namespace {

std::string describe(const std::vector<std::string>& names, Elem e) {
  return e >= 0 && e < static_cast<int>(names.size()) ? names[e]
                                                      : std::to_string(e);
}

}  // namespace

Logic Logic::fromRaw(const RawLattice& raw) {
  using VE = ValidationError;
  const int n = raw.n;
  if (n < 1 || n > kMaxCarrier)
    throw VE(VE::Kind::BadDescription,
             "carrier size must be in [1," + std::to_string(kMaxCarrier) +
                 "], got " + std::to_string(n));
  if (static_cast<int>(raw.ortho.size()) != n)
    throw VE(VE::Kind::BadDescription, "ortho map must list all " +
                                           std::to_string(n) + " elements");
  for (int v : raw.ortho)
    if (v < 0 || v >= n)
      throw VE(VE::Kind::BadDescription, "ortho value out of range");

  Logic L;
  L.n_ = n;
  L.names_ = raw.names;
  if (static_cast<int>(L.names_.size()) != n) {
    L.names_.resize(n);
    for (int i = 0; i < n; ++i)
      if (L.names_[i].empty()) L.names_[i] = "e" + std::to_string(i);
  }

  // Reflexive-transitive closure of the given pairs.
  L.up_.assign(n, 0);
  for (int i = 0; i < n; ++i) L.up_[i] = Subset{1} << i;
  for (auto [a, b] : raw.leqPairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw VE(VE::Kind::BadDescription, "leq pair index out of range");
    L.up_[a] |= Subset{1} << b;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < n; ++a)
      for (Elem b : subsetElems(L.up_[a])) {
        Subset merged = L.up_[a] | L.up_[b];
        if (merged != L.up_[a]) L.up_[a] = merged, changed = true;
      }
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (L.le(a, b) && L.le(b, a))
        throw VE(VE::Kind::NotAPartialOrder,
                 "antisymmetry fails: " + describe(L.names_, a) + " and " +
                     describe(L.names_, b) + " are order-equivalent",
                 a, b);
  L.down_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (L.le(a, b)) L.down_[b] |= Subset{1} << a;

  // Global bounds.
  const Subset all = fullSubset(n);
  Elem bot = -1, top = -1;
  for (int i = 0; i < n; ++i) {
    if (L.up_[i] == all) bot = i;
    if (L.down_[i] == all) top = i;
  }
  if (bot < 0 || top < 0)
    throw VE(VE::Kind::NotAPartialOrder, "order has no global bottom or top");
  L.bot_ = bot;
  L.top_ = top;

  // Binary meets/joins by brute-force glb/lub; existence+uniqueness checked.
  L.meet_.assign(static_cast<size_t>(n) * n, -1);
  L.join_.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Subset lower = L.down_[a] & L.down_[b];
      Elem glb = -1;
      for (Elem x : subsetElems(lower))
        if ((L.down_[x] & lower) == lower) {  // every lower bound is <= x
          glb = x;
          break;
        }
      Subset upper = L.up_[a] & L.up_[b];
      Elem lub = -1;
      for (Elem x : subsetElems(upper))
        if ((L.up_[x] & upper) == upper) {
          lub = x;
          break;
        }
      if (glb < 0 || lub < 0)
        throw VE(VE::Kind::NoMeet,
                 "no unique meet/join for (" + describe(L.names_, a) + ", " +
                     describe(L.names_, b) + ")",
                 a, b);
      L.meet_[a * n + b] = glb;
      L.join_[a * n + b] = lub;
    }

  // Orthocomplementation axioms (C1)-(C3).
  L.ortho_ = raw.ortho;
  for (int a = 0; a < n; ++a) {
    if (L.ortho_[L.ortho_[a]] != a)
      throw VE(VE::Kind::BadOrtho,
               "ortho not involutive at " + describe(L.names_, a), a);
    if (L.join(a, L.ortho_[a]) != top || L.meet(a, L.ortho_[a]) != bot)
      throw VE(VE::Kind::BadOrtho,
               "complement laws fail at " + describe(L.names_, a), a);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (L.le(a, b) && !L.le(L.ortho_[b], L.ortho_[a]))
        throw VE(VE::Kind::BadOrtho,
                 "ortho not antitone at (" + describe(L.names_, a) + ", " +
                     describe(L.names_, b) + ")",
                 a, b);

  // Orthomodular law: x <= y implies x v (x' ^ y) = y.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (L.le(x, y) && L.join(x, L.meet(L.ortho_[x], y)) != y)
        throw VE(VE::Kind::OrthomodularLaw,
                 "orthomodular law fails at (" + describe(L.names_, x) + ", " +
                     describe(L.names_, y) + ")",
                 x, y);

  // Commutation table via the Marsden identity.
  L.comm_.assign(n, 0);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (L.join(L.meet(p, q), L.meet(p, L.ortho_[q])) == p)
        L.comm_[p] |= Subset{1} << q;
  L.boolean_ = true;
  for (int p = 0; p < n && L.boolean_; ++p)
    if (L.comm_[p] != all) L.boolean_ = false;
  return L;
}

Elem Logic::bigMeet(Subset s) const {
  Elem r = top_;
  for (Elem e : subsetElems(s)) r = meet(r, e);
  return r;
}

Elem Logic::bigJoin(Subset s) const {
  Elem r = bot_;
  for (Elem e : subsetElems(s)) r = join(r, e);
  return r;
}

Subset Logic::commutant(Subset a) const {
  Subset out = fullSubset(n_);
  for (Elem q : subsetElems(a)) out &= comm_[q];
  return out;
}

Subset Logic::sublogicGenerated(Subset a) const {
  return commutant(commutant(a));
}

Subset Logic::center(Subset a) const {
  return commutant(a) & sublogicGenerated(a);
}

Subset Logic::subalgebraGenerated(Subset a) const {
  Subset s = a | (Subset{1} << bot_) | (Subset{1} << top_);
  for (bool grew = true; grew;) {
    grew = false;
    auto elems = subsetElems(s);
    for (Elem x : elems) {
      Subset next = subsetWith(s, ocompl(x));
      for (Elem y : elems) {
        next = subsetWith(next, meet(x, y));
        next = subsetWith(next, join(x, y));
      }
      if (next != s) s = next, grew = true;
    }
  }
  return s;
}

bool Logic::isBooleanSubset(Subset s) const {
  for (Elem p : subsetElems(s))
    if ((comm_[p] & s) != s) return false;
  return true;
}

Subset Logic::maximalBooleanSublogicContaining(Subset seed) const {
  if (!isBooleanSubset(seed))
    throw std::invalid_argument("seed is not pairwise commuting");
  Subset b = seed;
  for (Elem x = 0; x < n_; ++x)
    if (!subsetHas(b, x) && (comm_[x] & b) == b) b = subsetWith(b, x);
  return b;
}

namespace {

void bronKerbosch(const std::vector<Subset>& adj, Subset r, Subset p, Subset x,
                  std::vector<Subset>& out) {
  if (!p && !x) {
    out.push_back(r);
    return;
  }
  Subset pivotCands = p | x;
  Elem pivot = subsetElems(pivotCands).front();
  Subset cand = p & ~adj[pivot];
  for (Elem v : subsetElems(cand)) {
    bronKerbosch(adj, subsetWith(r, v), p & adj[v], x & adj[v], out);
    p &= ~(Subset{1} << v);
    x = subsetWith(x, v);
  }
}

}  // namespace

std::vector<Subset> Logic::maximalBooleanSublogics() const {
  // Maximal pairwise-commuting subsets are exactly the B with B = B^{!}.
  std::vector<Subset> adj(n_);
  for (int i = 0; i < n_; ++i) adj[i] = comm_[i] & ~(Subset{1} << i);
  std::vector<Subset> out;
  bronKerbosch(adj, 0, fullSubset(n_), 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

Subset Logic::interval(Elem p, Elem q, Subset a) const {
  return up_[p] & down_[q] & a;
}

bool Logic::isOpClosed(Subset s) const {
  for (Elem x : subsetElems(s)) {
    if (!subsetHas(s, ocompl(x))) return false;
    for (Elem y : subsetElems(s))
      if (!subsetHas(s, meet(x, y)) || !subsetHas(s, join(x, y))) return false;
  }
  return true;
}

std::string Logic::subsetToString(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (Elem e : subsetElems(s)) {
    if (!first) out += ", ";
    out += names_[e];
    first = false;
  }
  return out + "}";
}

SublogicView extractSublogic(const Logic& parent, Subset members) {
  if (!parent.isOpClosed(members))
    throw std::invalid_argument("subset is not closed under meet/join/ortho");
  std::vector<Elem> fromSub = subsetElems(members);
  std::vector<Elem> toSub(parent.size(), -1);
  for (int i = 0; i < static_cast<int>(fromSub.size()); ++i)
    toSub[fromSub[i]] = i;
  RawLattice raw;
  raw.n = static_cast<int>(fromSub.size());
  for (int i = 0; i < raw.n; ++i) {
    raw.names.push_back(parent.name(fromSub[i]));
    raw.ortho.push_back(toSub[parent.ocompl(fromSub[i])]);
    for (int j = 0; j < raw.n; ++j)
      if (parent.le(fromSub[i], fromSub[j])) raw.leqPairs.push_back({i, j});
  }
  return SublogicView{Logic::fromRaw(raw), std::move(toSub),
                      std::move(fromSub)};
}

}  // namespace omset
