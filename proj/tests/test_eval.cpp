#include <doctest.h>

#include "omset/eval.hpp"
#include "omset/generators.hpp"

using namespace omset;

namespace {
constexpr Elem A = 2, AO = 3, B = 4, BO = 5;
}

TEST_CASE("atom truth values, hand-computed on MO2 with the Sasaki arrow") {
  const Logic mo2 = moLattice(2);
  Universe u(mo2);
  EvalContext ctx(u, ImplSpec::poly(3));
  const NodeId ua = u.makeUb(A);
  const NodeId ub = u.makeUb(B);
  // [[u = v]] = (a =>3 b) ^ (b =>3 a) = a' ^ b' = 0
  CHECK(ctx.valEquals(ua, ub) == mo2.bot());
  CHECK(ctx.valEquals(ua, ua) == mo2.top());
  // [[x in u]] >= u(x), here with equality: [[empty in ub(a)]] = a
  CHECK(ctx.valMemberOf(u.emptyNode(), ua) == A);
  // subset values: [[ua sub ub]] = a =>3 [[empty in ub]] = a =>3 b = a'
  CHECK(ctx.valSubsetOf(ua, ub) == AO);
}

TEST_CASE("truth evaluation through formulas") {
  const Logic mo2 = moLattice(2);
  Universe u(mo2);
  Fragment frag = buildFragment(u, 2, 2);
  EvalContext ctx(u, ImplSpec::poly(3), &frag);
  const NodeId ua = u.makeUb(A);
  const NodeId ub = u.makeUb(B);
  auto eval = [&](const char* text,
                  std::vector<std::pair<std::string, NodeId>> env) {
    return ctx.truthValue(instantiate(parseFormula(text), env));
  };
  CHECK(eval("u = u", {{"u", ua}}) == mo2.top());
  CHECK(eval("not (u = u)", {{"u", ua}}) == mo2.bot());
  CHECK(eval("com(u, v)", {{"u", ua}, {"v", ub}}) == mo2.bot());
  CHECK(eval("com(u)", {{"u", ua}}) == mo2.top());
  CHECK(eval("u = v", {{"u", ua}, {"v", ub}}) == mo2.bot());
  CHECK(eval("u sub v", {{"u", ua}, {"v", ub}}) == AO);
  CHECK(eval("u in v", {{"u", u.emptyNode()}, {"v", ua}}) == A);
  // connectives evaluate through the lattice and the implication
  CHECK(eval("u sub v or v sub u", {{"u", ua}, {"v", ub}}) ==
        mo2.join(AO, BO));
  CHECK(eval("u sub v -> v sub u", {{"u", ua}, {"v", ub}}) ==
        kotasPoly(mo2, 3, AO, BO));
  // unbounded quantifiers range over the fragment
  CHECK(eval("exists x (x = u)", {{"u", ua}}) == mo2.top());
  CHECK(eval("forall x (x = u)", {{"u", ua}}) == mo2.bot());
  // free variables and missing fragments are errors
  CHECK_THROWS_AS(ctx.truthValue(parseFormula("x = x")),
                  std::invalid_argument);
  Universe u2(mo2);
  EvalContext noFrag(u2, ImplSpec::poly(3));
  CHECK_THROWS_AS(noFrag.truthValue(parseFormula("forall x (x = x)")),
                  std::invalid_argument);
}

TEST_CASE("full equality matrix on the MO2 rank-2 fragment") {
  // Frozen from an independent reference evaluation. Fragment order: the
  // empty node, then single-entry nodes with values 0, 1, a, a', b, b'.
  const Elem poly0Expected[7][7] = {
      {1, 1, 0, 3, 2, 5, 4}, {1, 1, 0, 3, 2, 5, 4}, {0, 0, 1, 2, 3, 4, 5},
      {3, 3, 2, 1, 0, 1, 1}, {2, 2, 3, 0, 1, 1, 1}, {5, 5, 4, 1, 1, 1, 0},
      {4, 4, 5, 1, 1, 0, 1}};
  const Elem poly3Expected[7][7] = {
      {1, 1, 0, 3, 2, 5, 4}, {1, 1, 0, 3, 2, 5, 4}, {0, 0, 1, 2, 3, 4, 5},
      {3, 3, 2, 1, 0, 0, 0}, {2, 2, 3, 0, 1, 0, 0}, {5, 5, 4, 0, 0, 1, 0},
      {4, 4, 5, 0, 0, 0, 1}};
  const Logic mo2 = moLattice(2);
  for (int j : {0, 3, 5}) {
    Universe u(mo2);
    const Fragment frag = buildFragment(u, 2, 2);
    REQUIRE(frag.nodes.size() == 7);
    EvalContext ctx(u, ImplSpec::poly(j));
    for (int r = 0; r < 7; ++r)
      for (int c = 0; c < 7; ++c) {
        // poly5 agrees with poly3 on this fragment
        const Elem expected =
            j == 0 ? poly0Expected[r][c] : poly3Expected[r][c];
        CAPTURE(j);
        CAPTURE(r);
        CAPTURE(c);
        CHECK(ctx.valEquals(frag.nodes[r], frag.nodes[c]) == expected);
      }
  }
}

TEST_CASE("equality recursion is rank-directed and memoized") {
  const Logic mo2 = moLattice(2);
  Universe u(mo2);
  Fragment frag = buildFragment(u, 3, 2);
  EvalContext ctx(u, ImplSpec::poly(3), &frag);
  // evaluate a quadratic number of pairs; would blow up without memoization
  Elem acc = 0;
  for (size_t i = 0; i < frag.nodes.size(); i += 11)
    for (size_t j = 0; j < frag.nodes.size(); j += 13)
      acc ^= ctx.valEquals(frag.nodes[i], frag.nodes[j]);
  CHECK(acc >= 0);
}

TEST_CASE("de Morgan laws (i) and (ii) hold for every implication") {
  const Logic mo2 = moLattice(2);
  for (int j = 0; j < 6; ++j) {
    Universe u(mo2);
    Fragment frag = buildFragment(u, 2, 2);
    EvalContext ctx(u, ImplSpec::poly(j), &frag);
    const DeMorganReport rep = deMorganChecks(ctx);
    CAPTURE(j);
    CHECK(rep.connectiveFailed == 0);
    CHECK(rep.unboundedFailed == 0);
  }
}

TEST_CASE("bounded de Morgan dichotomy on MO2") {
  const Logic mo2 = moLattice(2);
  SUBCASE("poly0 satisfies law (iii) everywhere") {
    Universe u(mo2);
    Fragment frag = buildFragment(u, 2, 2);
    EvalContext ctx(u, ImplSpec::poly(0), &frag);
    CHECK(deMorganChecks(ctx).boundedFailed == 0);
  }
  SUBCASE("the Sasaki arrow admits a counterexample") {
    Universe u(mo2);
    Fragment frag = buildFragment(u, 2, 2);
    EvalContext ctx(u, ImplSpec::poly(3), &frag);
    const DeMorganReport rep = deMorganChecks(ctx);
    CHECK(rep.boundedFailed > 0);
    REQUIRE(rep.boundedWitness.has_value());
    // the documented witness shape: u = ub(a), phi(x) = x in ub(b)
    Universe v(mo2);
    EvalContext vctx(v, ImplSpec::poly(3));
    const NodeId ua = v.makeUb(A);
    const NodeId ub = v.makeUb(B);
    const Elem lhs = v.logic().ocompl(
        v.logic().meet(A, vctx.valMemberOf(v.emptyNode(), ub)));
    const Elem rhs = kotasPoly(mo2, 3, A,
                               mo2.ocompl(vctx.valMemberOf(v.emptyNode(), ub)));
    CHECK(lhs == mo2.top());
    CHECK(rhs == AO);
    CHECK(lhs != rhs);
    CHECK(v.rank(ua) == 2);
  }
}

TEST_CASE("Boolean bounded/unbounded equivalence") {
  for (const char* spec : {"boolean:1", "boolean:2"}) {
    const Logic L = fromGenSpec(spec);
    Universe u(L);
    Fragment frag = buildFragment(u, 2, 2);
    EvalContext ctx(u, ImplSpec::poly(0), &frag);
    CHECK(booleanBoundedEquivalenceFailures(ctx) == 0);
  }
  const Logic mo2 = moLattice(2);
  Universe u(mo2);
  Fragment frag = buildFragment(u, 2, 2);
  EvalContext ctx(u, ImplSpec::poly(0), &frag);
  CHECK_THROWS_AS(booleanBoundedEquivalenceFailures(ctx),
                  std::invalid_argument);
}

TEST_CASE("monotone truncation bounds") {
  // Enlarging the fragment can only shrink universal values and grow
  // existential ones.
  const Logic mo2 = moLattice(2);
  Universe u(mo2);
  Fragment small = buildFragment(u, 2, 2);
  Fragment large = buildFragment(u, 3, 2);
  REQUIRE(small.nodes.size() < large.nodes.size());
  for (int j : {0, 3, 5}) {
    EvalContext smallCtx(u, ImplSpec::poly(j), &small);
    EvalContext largeCtx(u, ImplSpec::poly(j), &large);
    for (NodeId c : small.nodes) {
      const FormulaPtr phi = Formula::memberOf(Term::v("x"), Term::c(c));
      const FormulaPtr all = Formula::forall("x", phi);
      const FormulaPtr some = Formula::exists("x", phi);
      CHECK(mo2.le(largeCtx.truthValue(all), smallCtx.truthValue(all)));
      CHECK(mo2.le(smallCtx.truthValue(some), largeCtx.truthValue(some)));
    }
  }
}
