#include <doctest.h>

#include <string>

#include "omset/generators.hpp"
#include "omset/lattice.hpp"

using namespace omset;

namespace {

// Independent oracle: glb/lub recomputed from the order relation alone,
// without touching the cached meet/join tables.
Elem bruteGlb(const Logic& L, Elem a, Elem b) {
  Elem best = -1;
  for (Elem x = 0; x < L.size(); ++x) {
    if (!L.le(x, a) || !L.le(x, b)) continue;
    if (best < 0 || L.le(best, x)) best = x;
  }
  // confirm it dominates every lower bound
  for (Elem x = 0; x < L.size(); ++x)
    if (L.le(x, a) && L.le(x, b) && !L.le(x, best)) return -1;
  return best;
}

Elem bruteLub(const Logic& L, Elem a, Elem b) {
  Elem best = -1;
  for (Elem x = 0; x < L.size(); ++x) {
    if (!L.le(a, x) || !L.le(b, x)) continue;
    if (best < 0 || L.le(x, best)) best = x;
  }
  for (Elem x = 0; x < L.size(); ++x)
    if (L.le(a, x) && L.le(b, x) && !L.le(best, x)) return -1;
  return best;
}

bool bruteCommutes(const Logic& L, Elem p, Elem q) {
  return p == L.join(L.meet(p, q), L.meet(p, L.ocompl(q)));
}

RawLattice mo2Raw() {
  RawLattice raw;
  raw.n = 6;
  raw.names = {"0", "1", "a", "a'", "b", "b'"};
  raw.ortho = {1, 0, 3, 2, 5, 4};
  for (int e = 0; e < 6; ++e) {
    raw.leqPairs.push_back({0, e});
    raw.leqPairs.push_back({e, 1});
  }
  return raw;
}

constexpr Elem A = 2, AO = 3, B = 4, BO = 5;

}  // namespace

TEST_CASE("two-element chain is the smallest logic") {
  RawLattice raw;
  raw.n = 2;
  raw.leqPairs = {{0, 1}};
  raw.ortho = {1, 0};
  const Logic L = Logic::fromRaw(raw);
  CHECK(L.bot() == 0);
  CHECK(L.top() == 1);
  CHECK(L.isBoolean());
}

TEST_CASE("MO2 validates and matches brute-force order algebra") {
  const Logic L = Logic::fromRaw(mo2Raw());
  CHECK(L.size() == 6);
  CHECK_FALSE(L.isBoolean());
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b) {
      CHECK(L.meet(a, b) == bruteGlb(L, a, b));
      CHECK(L.join(a, b) == bruteLub(L, a, b));
    }
  CHECK(L.meet(A, B) == 0);
  CHECK(L.join(A, B) == 1);
  CHECK(L.meet(A, 1) == A);
  CHECK(L.bigJoin(0) == L.bot());
  CHECK(L.bigMeet(0) == L.top());
}

TEST_CASE("every generated logic matches brute-force glb/lub") {
  for (const auto& [name, L] : sweepLogics()) {
    CAPTURE(name);
    for (Elem a = 0; a < L.size(); ++a)
      for (Elem b = 0; b < L.size(); ++b) {
        CHECK(L.meet(a, b) == bruteGlb(L, a, b));
        CHECK(L.join(a, b) == bruteLub(L, a, b));
      }
  }
}

TEST_CASE("hexagon O6 fails exactly the orthomodular law") {
  // 0 < a < b < 1 and 0 < b' < a' < 1
  RawLattice raw;
  raw.n = 6;
  raw.names = {"0", "1", "a", "b", "b'", "a'"};
  raw.ortho = {1, 0, 5, 4, 3, 2};
  for (int e = 0; e < 6; ++e) {
    raw.leqPairs.push_back({0, e});
    raw.leqPairs.push_back({e, 1});
  }
  raw.leqPairs.push_back({2, 3});
  raw.leqPairs.push_back({4, 5});
  try {
    Logic::fromRaw(raw);
    FAIL("O6 must be rejected");
  } catch (const ValidationError& e) {
    CHECK(e.kind == ValidationError::Kind::OrthomodularLaw);
    // witness (a, b): a v (a' ^ b) = a v 0 = a != b
    CHECK(e.x == 2);
    CHECK(e.y == 3);
  }
}

TEST_CASE("other axiom violations are reported distinctly") {
  SUBCASE("non-involutive ortho") {
    RawLattice raw;
    raw.n = 4;  // diamond 0 < a, b < 1 with a rotated complement map
    raw.leqPairs = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}};
    raw.ortho = {3, 2, 0, 1};
    try {
      Logic::fromRaw(raw);
      FAIL("expected BadOrtho");
    } catch (const ValidationError& e) {
      CHECK(e.kind == ValidationError::Kind::BadOrtho);
      CHECK(std::string(e.what()).find("involutive") != std::string::npos);
    }
  }
  SUBCASE("complement laws fail") {
    RawLattice raw;
    raw.n = 3;  // chain 0 < m < 1 cannot carry an orthocomplement
    raw.leqPairs = {{0, 2}, {2, 1}, {0, 1}};
    raw.ortho = {1, 0, 2};
    CHECK_THROWS_AS(Logic::fromRaw(raw), ValidationError);
    try {
      Logic::fromRaw(raw);
    } catch (const ValidationError& e) {
      CHECK(e.kind == ValidationError::Kind::BadOrtho);
    }
  }
  SUBCASE("missing meet") {
    RawLattice bad;
    bad.n = 6;
    bad.ortho = {1, 0, 3, 2, 5, 4};
    // 0 < {a, a'} < {b, b'} < 1 diamond where a,a' have two minimal upper
    // bounds b, b' -> no unique join
    bad.leqPairs = {{0, 2}, {0, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5},
                    {4, 1}, {5, 1}, {0, 1}};
    try {
      Logic::fromRaw(bad);
      FAIL("expected NoMeet");
    } catch (const ValidationError& e) {
      CHECK(e.kind == ValidationError::Kind::NoMeet);
    }
  }
  SUBCASE("complemented but not antitone") {
    // hexagon with the ortho pairing swapped: involutive, complement laws
    // hold, but a <= b while b' is not below a'
    RawLattice raw;
    raw.n = 6;
    raw.names = {"0", "1", "a", "b", "p", "q"};
    raw.ortho = {1, 0, 4, 5, 2, 3};  // a<->p, b<->q with p <= q
    for (int e = 0; e < 6; ++e) {
      raw.leqPairs.push_back({0, e});
      raw.leqPairs.push_back({e, 1});
    }
    raw.leqPairs.push_back({2, 3});
    raw.leqPairs.push_back({4, 5});
    try {
      Logic::fromRaw(raw);
      FAIL("expected BadOrtho");
    } catch (const ValidationError& e) {
      CHECK(e.kind == ValidationError::Kind::BadOrtho);
    }
  }
  SUBCASE("cycle in the order") {
    RawLattice raw;
    raw.n = 3;
    raw.leqPairs = {{0, 1}, {1, 2}, {2, 1}, {0, 2}};
    raw.ortho = {2, 1, 0};
    try {
      Logic::fromRaw(raw);
      FAIL("expected NotAPartialOrder");
    } catch (const ValidationError& e) {
      CHECK(e.kind == ValidationError::Kind::NotAPartialOrder);
    }
  }
}

TEST_CASE("commutation relation on MO2") {
  const Logic L = Logic::fromRaw(mo2Raw());
  CHECK_FALSE(L.commutes(A, B));
  CHECK(L.join(L.meet(A, B), L.meet(A, L.ocompl(B))) == 0);  // = 0 != a
  for (Elem p = 0; p < 6; ++p) CHECK(L.commutes(p, p));
  // the five equivalent forms
  for (Elem p = 0; p < 6; ++p)
    for (Elem q = 0; q < 6; ++q) {
      const bool c = L.commutes(p, q);
      CHECK(c == L.commutes(q, p));
      CHECK(c == L.commutes(L.ocompl(p), q));
      CHECK(c == L.commutes(p, L.ocompl(q)));
      CHECK(c == L.commutes(L.ocompl(p), L.ocompl(q)));
      CHECK(c == bruteCommutes(L, p, q));
    }
}

TEST_CASE("commutants, sublogics, centers on MO2") {
  const Logic L = Logic::fromRaw(mo2Raw());
  const Subset sA = subsetWith(0, A);
  const Subset sAB = subsetWith(sA, B);
  CHECK(L.commutant(sA) == (subsetWith(subsetWith(subsetWith(subsetWith(
                                0, 0), 1), A), AO)));
  CHECK(L.commutant(0) == fullSubset(6));
  CHECK(L.sublogicGenerated(sAB) == fullSubset(6));
  CHECK(L.center(sAB) == subsetWith(subsetWith(0, 0), 1));
  CHECK(L.center(sA) == L.commutant(sA));
  // commutants are closed under the operations
  for (Subset a = 0; a < 64; ++a) CHECK(L.isOpClosed(L.commutant(a)));
  // closure properties of the double commutant
  for (Subset a = 0; a < 64; ++a) {
    const Subset gen = L.sublogicGenerated(a);
    CHECK((a & gen) == a);
    CHECK(L.sublogicGenerated(gen) == gen);
  }
}

TEST_CASE("maximal Boolean sublogics") {
  const Logic L = Logic::fromRaw(mo2Raw());
  CHECK(L.maximalBooleanSublogicContaining(subsetWith(0, A)) ==
        subsetWith(subsetWith(subsetWith(subsetWith(0, 0), 1), A), AO));
  CHECK_THROWS_AS(
      L.maximalBooleanSublogicContaining(subsetWith(subsetWith(0, A), B)),
      std::invalid_argument);
  const auto blocks = L.maximalBooleanSublogics();
  CHECK(blocks.size() == 2);
  for (Subset b : blocks) {
    CHECK(L.isBooleanSubset(b));
    CHECK(L.commutant(b) == b);
  }
  const Logic B2 = booleanAlgebra(2);
  CHECK(B2.maximalBooleanSublogicContaining(0) == fullSubset(4));
}

TEST_CASE("focusing distributivity and commuting infinite distributivity") {
  for (const auto& [name, L] : sweepLogics()) {
    CAPTURE(name);
    // If p1, p2 commute with q, the sublattice they generate with q is
    // distributive: check all six identities on the triple.
    for (Elem p1 = 0; p1 < L.size(); ++p1)
      for (Elem p2 = 0; p2 < L.size(); ++p2)
        for (Elem q = 0; q < L.size(); ++q) {
          if (!L.commutes(p1, q) || !L.commutes(p2, q)) continue;
          CHECK(L.meet(q, L.join(p1, p2)) ==
                L.join(L.meet(q, p1), L.meet(q, p2)));
          CHECK(L.join(q, L.meet(p1, p2)) ==
                L.meet(L.join(q, p1), L.join(q, p2)));
          CHECK(L.meet(p1, L.join(p2, q)) ==
                L.join(L.meet(p1, p2), L.meet(p1, q)));
          CHECK(L.join(p1, L.meet(p2, q)) ==
                L.meet(L.join(p1, p2), L.join(p1, q)));
          CHECK(L.meet(p2, L.join(p1, q)) ==
                L.join(L.meet(p2, p1), L.meet(p2, q)));
          CHECK(L.join(p2, L.meet(p1, q)) ==
                L.meet(L.join(p2, p1), L.join(p2, q)));
        }
    // q ^ (join S) = join (q ^ s) over any subset of the commutant, and
    // dually; exhaustive for small carriers, sampled otherwise.
    for (Elem q = 0; q < L.size(); ++q) {
      const Subset comm = L.commutant(subsetWith(0, q));
      const auto elems = subsetElems(comm);
      const int k = static_cast<int>(elems.size());
      const bool exhaustive = L.size() <= 8 && k <= 12;
      const unsigned long limit = exhaustive ? (1ul << k) : 4096;
      for (unsigned long mask = 0; mask < limit; ++mask) {
        const unsigned long bits =
            exhaustive ? mask : (mask * 2654435761ul) % (1ul << k);
        Subset s = 0;
        for (int i = 0; i < k; ++i)
          if ((bits >> i) & 1ul) s = subsetWith(s, elems[i]);
        Elem joinMeet = L.bot(), meetJoin = L.top();
        for (Elem e : subsetElems(s)) {
          joinMeet = L.join(joinMeet, L.meet(q, e));
          meetJoin = L.meet(meetJoin, L.join(q, e));
        }
        CHECK(L.meet(q, L.bigJoin(s)) == joinMeet);
        CHECK(L.join(q, L.bigMeet(s)) == meetJoin);
        CHECK(L.commutes(L.bigJoin(s), q));
        CHECK(L.commutes(L.bigMeet(s), q));
      }
    }
  }
}

TEST_CASE("interval and sublogic extraction") {
  const Logic L = Logic::fromRaw(mo2Raw());
  CHECK(L.interval(0, A, fullSubset(6)) == subsetWith(subsetWith(0, 0), A));
  const Subset block = L.maximalBooleanSublogicContaining(subsetWith(0, A));
  const SublogicView view = extractSublogic(L, block);
  CHECK(view.logic.size() == 4);
  CHECK(view.logic.isBoolean());
  for (Elem e : subsetElems(block)) {
    CHECK(view.fromSub[view.toSub[e]] == e);
    CHECK(view.fromSub[view.logic.ocompl(view.toSub[e])] == L.ocompl(e));
  }
  CHECK_THROWS_AS(extractSublogic(L, subsetWith(0, A)), std::invalid_argument);
}
