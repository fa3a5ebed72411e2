#include <doctest.h>

#include "omset/commutator.hpp"
#include "omset/generators.hpp"

using namespace omset;

namespace {

constexpr Elem A = 2, AO = 3, B = 4;

Subset s(std::initializer_list<Elem> xs) {
  Subset out = 0;
  for (Elem x : xs) out = subsetWith(out, x);
  return out;
}

// Oracle for S(A) straight from the defining condition, independent of the
// meets-into-center characterization used by the implementation.
Subset subcommutatorsByDefinition(const Logic& L, Subset a) {
  Subset out = 0;
  for (Elem e : subsetElems(L.center(a))) {
    bool ok = true;
    for (Elem p1 : subsetElems(a)) {
      for (Elem p2 : subsetElems(a))
        if (!L.commutes(L.meet(p1, e), L.meet(p2, e))) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) out = subsetWith(out, e);
  }
  return out;
}

}  // namespace

TEST_CASE("Marsden commutator on MO2 and Boolean logics") {
  const Logic mo2 = moLattice(2);
  CHECK(marsdenCom(mo2, A, B) == mo2.bot());
  for (Elem p = 0; p < mo2.size(); ++p)
    CHECK(marsdenCom(mo2, p, p) == mo2.top());
  const Logic b2 = booleanAlgebra(2);
  for (Elem p = 0; p < b2.size(); ++p)
    for (Elem q = 0; q < b2.size(); ++q)
      CHECK(marsdenCom(b2, p, q) == b2.top());
}

TEST_CASE("finite commutator") {
  const Logic mo2 = moLattice(2);
  CHECK(finiteCom(mo2, s({A})) == mo2.top());
  CHECK(finiteCom(mo2, s({A, B})) == marsdenCom(mo2, A, B));
  CHECK(finiteCom(mo2, 0) == mo2.top());  // empty sign map, empty meet
  const Logic b3 = booleanAlgebra(3);
  for (Subset f = 0; f < 256; ++f) CHECK(finiteCom(b3, f) == b3.top());
}

TEST_CASE("subcommutators on MO2") {
  const Logic mo2 = moLattice(2);
  CHECK(subcommutators(mo2, s({A, B})) == s({0}));
  CHECK(subcommutators(mo2, s({A})) == s({0, 1, A, AO}));
  for (Subset a = 0; a < 64; ++a)
    CHECK(subcommutators(mo2, a) == subcommutatorsByDefinition(mo2, a));
}

TEST_CASE("commutator values and empty-set convention") {
  const Logic mo2 = moLattice(2);
  CHECK(commutator(mo2, s({A, B})) == mo2.bot());
  CHECK(commutator(mo2, s({A})) == mo2.top());
  // A = {}: S({}) is the center of the whole logic, so all four routes give 1.
  CHECK(commutator(mo2, 0) == mo2.top());
  CHECK(takeutiCom(mo2, 0) == mo2.top());
  CHECK(pulmannovaCom(mo2, 0) == mo2.top());
  const Logic b2 = booleanAlgebra(2);
  for (Subset a = 0; a < 16; ++a) CHECK(commutator(b2, a) == b2.top());
}

TEST_CASE("four-way equality, exhaustively over the sweep") {
  for (const auto& [name, L] : sweepLogics()) {
    CAPTURE(name);
    const Subset all = fullSubset(L.size());
    const int sizeCap = L.size() > 8 ? 2 : 3;
    for (Subset a = 0; a <= all; ++a) {
      if (subsetSize(a) > sizeCap) continue;
      const CommutatorReport r = verifyCommutatorEquivalence(L, a);
      CAPTURE(a);
      CHECK(r.allEqual());
      CHECK(subsetHas(r.subcommutatorSet, r.viaSubcommutators));
      CHECK(r.subcommutatorSet ==
            L.interval(L.bot(), r.viaSubcommutators, L.sublogicGenerated(a)));
    }
  }
}

TEST_CASE("pairwise-meet route uses the generated subalgebra") {
  const Logic mo2 = moLattice(2);
  const CommutatorReport r = verifyCommutatorEquivalence(mo2, s({A, B}));
  CHECK(r.viaPairwiseMeet == mo2.bot());
  CHECK(r.viaTakeuti == mo2.bot());
  CHECK(r.viaPulmannova == mo2.bot());
}

TEST_CASE("B/N decomposition") {
  const Logic mo2 = moLattice(2);
  SUBCASE("com = 0 pushes everything into the N part") {
    auto [xb, xn] = bnDecompose(mo2, s({A, B}), A);
    CHECK(xb == mo2.bot());
    CHECK(xn == A);
  }
  SUBCASE("com = 1 pushes everything into the B part") {
    const Logic b2 = booleanAlgebra(2);
    auto [xb, xn] = bnDecompose(b2, s({1, 2}), 1);
    CHECK(xb == 1);
    CHECK(xn == b2.bot());
  }
  SUBCASE("x = com(A) decomposes as (com, 0)") {
    const Elem cm = commutator(mo2, s({A}));
    auto [xb, xn] = bnDecompose(mo2, s({A}), cm);
    CHECK(xb == cm);
    CHECK(xn == mo2.bot());
  }
  SUBCASE("element outside L(A) is rejected") {
    CHECK_THROWS_AS(bnDecompose(mo2, s({A}), B), std::invalid_argument);
  }
  SUBCASE("bounds hold across a sweep") {
    for (const auto& [name, L] : sweepLogics()) {
      for (Elem p = 0; p < L.size(); ++p)
        for (Elem q = 0; q < L.size(); ++q) {
          const Subset a = s({p, q});
          const Elem cm = commutator(L, a);
          for (Elem x : subsetElems(L.sublogicGenerated(a))) {
            auto [xb, xn] = bnDecompose(L, a, x);
            CHECK(L.le(xb, cm));
            CHECK(L.le(xn, L.ocompl(cm)));
            CHECK(L.join(xb, xn) == x);
          }
        }
    }
  }
}

TEST_CASE("direct product decomposition across the sweep") {
  for (const auto& [name, L] : sweepLogics()) {
    CAPTURE(name);
    for (Elem p = 0; p < L.size(); ++p)
      for (Elem q = 0; q < L.size(); ++q) CHECK(directProductCheck(L, s({p, q})));
    CHECK(directProductCheck(L, fullSubset(L.size())));
  }
  // componentwise commutator in a product: the MO2 atoms inside B1 x MO2
  const Logic prod = product(booleanAlgebra(1), moLattice(2));
  // elements are encoded (x, y) -> x * 6 + y with MO2 atoms at y = 2, 4
  const Elem pa = 1 * 6 + 2, pb = 1 * 6 + 4;
  const Elem cm = commutator(prod, s({pa, pb}));
  CHECK(prod.name(cm) == "(1,0)");
  CHECK(directProductCheck(prod, s({pa, pb})));
}

TEST_CASE("subcommutator lemma across the sweep") {
  for (const auto& [name, L] : sweepLogics()) {
    for (Elem p1 = 0; p1 < L.size(); ++p1)
      for (Elem p2 = 0; p2 < L.size(); ++p2) {
        const Subset a = s({p1, p2});
        for (Elem e : subsetElems(L.commutant(a)))
          CHECK(L.commutes(L.meet(p1, e), L.meet(p2, e)) ==
                L.commutes(L.meet(p1, e), p2));
      }
  }
}
