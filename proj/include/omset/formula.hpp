#pragma once

#include <memory>
#include <string>
#include <vector>

#include "omset/quniverse.hpp"

namespace omset {

// AST for the language over membership, equality and the n-ary commutator
// predicate, with bounded and unbounded quantifiers. "t1 sub t2" desugars at
// parse time into a bounded universal, as in the defining convention.
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// A term is a variable or a node constant (resolved against a Universe).
struct Term {
  std::string var;       // nonempty for variables
  NodeId constant = -1;  // >= 0 for constants

  static Term v(std::string name) { return Term{std::move(name), -1}; }
  static Term c(NodeId id) { return Term{{}, id}; }
  bool isVar() const { return constant < 0; }
};

struct Formula {
  enum class Kind {
    MemberOf,   // terms[0] in terms[1]
    Equals,     // terms[0] = terms[1]
    Commutator, // com(terms...)
    Not,
    And,
    Or,
    Implies,
    Iff,
    ForallIn,   // forall var in terms[0] . sub[0]
    ExistsIn,
    Forall,     // forall var . sub[0]
    Exists,
  };

  Kind kind;
  std::vector<Term> terms;
  std::vector<FormulaPtr> sub;
  std::string var;

  static FormulaPtr memberOf(Term a, Term b);
  static FormulaPtr equals(Term a, Term b);
  static FormulaPtr subsetOf(Term a, Term b);  // desugars
  static FormulaPtr commutatorOf(std::vector<Term> ts);
  static FormulaPtr negation(FormulaPtr f);
  static FormulaPtr conj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr disj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
  static FormulaPtr iff(FormulaPtr a, FormulaPtr b);
  static FormulaPtr forallIn(std::string var, Term bound, FormulaPtr f);
  static FormulaPtr existsIn(std::string var, Term bound, FormulaPtr f);
  static FormulaPtr forall(std::string var, FormulaPtr f);
  static FormulaPtr exists(std::string var, FormulaPtr f);
};

// True iff the formula has no unbounded quantifier.
bool isDelta0(const FormulaPtr& f);

// Free variables in order of first occurrence.
std::vector<std::string> freeVars(const FormulaPtr& f);

// Substitutes constants for (some of the) free variables.
FormulaPtr instantiate(const FormulaPtr& f,
                       const std::vector<std::pair<std::string, NodeId>>& env);

std::string printFormula(const FormulaPtr& f);
std::string printFormula(const FormulaPtr& f, const Universe& u);

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(std::string msg, size_t pos)
      : std::runtime_error(std::move(msg)), position(pos) {}
};

// Grammar (ASCII operators & | ! -> <-> accepted alongside keywords):
//   formula  := iff
//   iff      := impl ('<->' impl)*
//   impl     := or ('->' or)*            (right associative)
//   or       := and (('or'|'|') and)*
//   and      := unary (('and'|'&') unary)*
//   unary    := ('not'|'!') unary | quantifier | '(' formula ')' | atom
//   quant    := ('forall'|'exists') VAR ('in' term)? unary
//   atom     := term ('in'|'='|'sub') term | 'com' '(' term {',' term} ')'
//   term     := VAR | node-literal
// Node literals are resolved against the given universe when provided;
// without one, any non-variable token is a parse error.
FormulaPtr parseFormula(const std::string& text, Universe* universe = nullptr);

}  // namespace omset
