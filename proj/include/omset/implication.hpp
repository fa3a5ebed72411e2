#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omset/lattice.hpp"

namespace omset {

// A choice of implication connective. Poly(j) is one of the six Kotas
// polynomials; Table is an explicit n x n value table; Twisted(j, theta, i)
// only resolves on the matrix backend (see matrixlogic.hpp) and is rejected
// by lattice-side evaluation.
struct ImplSpec {
  enum class Kind { Poly, Table, Twisted };
  Kind kind = Kind::Poly;
  int j = 3;                 // Poly / Twisted index
  double theta = 0.0;        // Twisted
  int i = 0;                 // Twisted
  std::vector<Elem> table;   // Table, row-major [p][q]

  static ImplSpec poly(int j);
  static ImplSpec fromTable(std::vector<Elem> t);
  static ImplSpec twisted(int j, double theta, int i);
  // "poly0".."poly5", "sasaki" (= poly3), "table:<path>"
  static ImplSpec parse(const std::string& text, const Logic& forLogic);

  std::string describe() const;
};

// The six Kotas polynomials, j in 0..5.
Elem kotasPoly(const Logic& L, int j, Elem p, Elem q);

// Evaluates an ImplSpec on a lattice. Throws std::invalid_argument for Twisted
// specs or malformed tables.
Elem implEval(const Logic& L, const ImplSpec& spec, Elem p, Elem q);

// p <=> q derived from the chosen implication: (p => q) ^ (q => p).
Elem logicalEquiv(const Logic& L, const ImplSpec& spec, Elem p, Elem q);

struct Counterexample {
  Elem p = -1, q = -1, e = -1;
  std::string render(const Logic& L) const;
};

// Per-axiom verdicts from an exhaustive scan of the finite carrier, with the
// first counterexample for each failed axiom. (I2)'s witness E is restricted
// to elements commuting with both arguments, as stated.
struct AxiomReport {
  bool i1 = true, i2 = true, lb = true;
  bool e = true, mp = true, mt = true, ng = true, le = true;
  std::optional<Counterexample> i1W, i2W, lbW, eW, mpW, mtW, ngW, leW;
  bool generalizedImplication() const { return i1 && i2 && lb; }
};

AxiomReport checkAxioms(const Logic& L, const ImplSpec& spec);

// The four equivalent conditions on a binary operation satisfying (I1)+(I2):
// (i) (LB), (ii) B-part equals poly5, (iii) join with com' equals poly0,
// (iv) sandwich poly5 <= spec <= poly0.
struct EquivalenceBlock {
  bool lb = true, bPart = true, joinForm = true, sandwich = true;
  Counterexample witness;  // first failing pair, if any condition fails
  bool allHold() const { return lb && bPart && joinForm && sandwich; }
  // The proposition itself: under (I1)+(I2) the four verdicts coincide.
  bool verdictsAgree() const {
    return lb == bPart && bPart == joinForm && joinForm == sandwich;
  }
};

EquivalenceBlock implicationEquivalenceBlock(const Logic& L,
                                             const ImplSpec& spec);

// True iff all four conditions hold.
bool verifyImplicationEquivalences(const Logic& L, const ImplSpec& spec,
                                   Counterexample* witness = nullptr);

// The five identities expressing poly0..poly4 via poly5 and com(P,Q)'.
bool verifySixRelations(const Logic& L, Counterexample* witness = nullptr);

// (MP holds) <=> (P ^ (P=>Q)_N = 0 for all pairs) for a generalized
// implication; plus, for the six polynomials, the displayed N-part values
// (so MP holds exactly for j in {2,3,4,5}).
bool mpCharacterization(const Logic& L, const ImplSpec& spec);
bool mpPolynomialClassification(const Logic& L);

// Residuation/maximum characterizations of poly3/poly4/poly5.
bool sasakiCharacterizations(const Logic& L);

// Deduction theorem: (i) X in {P,Q}^! with P^X <= Q implies X <= P=>Q;
// (ii) com^P^X <= Q iff com^X <= P=>Q; (iii) com ^ P ^ (P=>Q) <= Q.
bool deductionChecks(const Logic& L, const ImplSpec& spec);

// (LE) <=> max-characterization <=> (P<=>Q) <= com(P,Q); consequences (iv)
// substitution and (v) transitivity when LE holds.
bool leChecks(const Logic& L, const ImplSpec& spec);
bool lePolynomialClassification(const Logic& L);

}  // namespace omset
