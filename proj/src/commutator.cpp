#include "omset/commutator.hpp"

#include <stdexcept>

namespace omset {

Elem marsdenCom(const Logic& L, Elem p, Elem q) {
  Elem po = L.ocompl(p), qo = L.ocompl(q);
  return L.join(L.join(L.meet(p, q), L.meet(p, qo)),
                L.join(L.meet(po, q), L.meet(po, qo)));
}

Elem finiteCom(const Logic& L, Subset f) {
  auto elems = subsetElems(f);
  const int k = static_cast<int>(elems.size());
  Elem out = L.bot();
  for (unsigned signs = 0; signs < (1u << k); ++signs) {
    Elem m = L.top();
    for (int i = 0; i < k; ++i)
      m = L.meet(m, (signs >> i) & 1u ? L.ocompl(elems[i]) : elems[i]);
    out = L.join(out, m);
  }
  return out;
}

Subset subcommutators(const Logic& L, Subset a) {
  Subset z = L.center(a);
  Subset out = 0;
  for (Elem e : subsetElems(z)) {
    bool ok = true;
    for (Elem p : subsetElems(a))
      if (!subsetHas(z, L.meet(p, e))) {
        ok = false;
        break;
      }
    if (ok) out = subsetWith(out, e);
  }
  return out;
}

Elem commutator(const Logic& L, Subset a) {
  return L.bigJoin(subcommutators(L, a));
}

Elem takeutiCom(const Logic& L, Subset a) {
  auto members = subsetElems(a);
  Elem out = L.bot();
  for (Elem e : subsetElems(L.commutant(a))) {
    bool ok = true;
    for (Elem p1 : members) {
      for (Elem p2 : members)
        if (!L.commutes(L.meet(p1, e), L.meet(p2, e))) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) out = L.join(out, e);
  }
  return out;
}

Elem pulmannovaCom(const Logic& L, Subset a) {
  auto elems = subsetElems(a);
  const int k = static_cast<int>(elems.size());
  if (k > 16)
    throw std::invalid_argument("pulmannovaCom: |A| <= 16 enforced");
  Elem out = L.top();
  for (unsigned pick = 0; pick < (1u << k); ++pick) {
    Subset f = 0;
    for (int i = 0; i < k; ++i)
      if ((pick >> i) & 1u) f = subsetWith(f, elems[i]);
    out = L.meet(out, finiteCom(L, f));
  }
  return out;
}

CommutatorReport verifyCommutatorEquivalence(const Logic& L, Subset a) {
  CommutatorReport r;
  r.subcommutatorSet = subcommutators(L, a);
  r.viaSubcommutators = L.bigJoin(r.subcommutatorSet);
  r.viaTakeuti = takeutiCom(L, a);
  r.viaPulmannova = pulmannovaCom(L, a);
  Subset gamma = L.subalgebraGenerated(a);
  Elem pm = L.top();
  for (Elem p : subsetElems(gamma))
    for (Elem q : subsetElems(gamma)) pm = L.meet(pm, marsdenCom(L, p, q));
  r.viaPairwiseMeet = pm;
  return r;
}

std::pair<Elem, Elem> bnDecompose(const Logic& L, Subset a, Elem x) {
  Subset la = L.sublogicGenerated(a);
  if (!subsetHas(la, x))
    throw std::invalid_argument("bnDecompose: element outside L(A)");
  Elem cm = commutator(L, a);
  Elem xb = L.meet(x, cm), xn = L.meet(x, L.ocompl(cm));
  if (L.join(xb, xn) != x)
    throw std::logic_error("bnDecompose: parts do not rejoin");
  return {xb, xn};
}

bool directProductCheck(const Logic& L, Subset a) {
  Elem cm = commutator(L, a);
  Elem cmo = L.ocompl(cm);
  Subset la = L.sublogicGenerated(a);
  Subset lower = L.interval(L.bot(), cm, la);
  Subset upper = L.interval(L.bot(), cmo, la);
  if (!L.isBooleanSubset(lower)) return false;

  // x -> (x^cm, x^cm') must be an order isomorphism L(A) -> lower x upper.
  for (Elem x : subsetElems(la)) {
    Elem xb = L.meet(x, cm), xn = L.meet(x, cmo);
    if (!subsetHas(lower, xb) || !subsetHas(upper, xn)) return false;
    if (L.join(xb, xn) != x) return false;  // injectivity via reconstruction
    for (Elem y : subsetElems(la)) {
      bool compwise = L.le(xb, L.meet(y, cm)) && L.le(xn, L.meet(y, cmo));
      if (L.le(x, y) != compwise) return false;
    }
  }
  for (Elem b : subsetElems(lower))  // surjectivity
    for (Elem m : subsetElems(upper)) {
      Elem x = L.join(b, m);
      if (!subsetHas(la, x) || L.meet(x, cm) != b || L.meet(x, cmo) != m)
        return false;
    }

  // com(A) lands in every maximal Boolean sublogic contained in A, and the
  // interval [0,com]_A stays inside it.
  for (Subset b : L.maximalBooleanSublogics()) {
    if ((b & a) != b) continue;
    if (!subsetHas(b, cm)) return false;
    if ((L.interval(L.bot(), cm, a) & ~b) != 0) return false;
  }
  return true;
}

}  // namespace omset
