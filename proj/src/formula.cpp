#include "omset/formula.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstring>

namespace omset {

namespace {

FormulaPtr make(Formula f) { return std::make_shared<Formula>(std::move(f)); }

std::atomic<int> freshCounter{0};

std::string freshVar() { return "$" + std::to_string(freshCounter++); }

}  // namespace

FormulaPtr Formula::memberOf(Term a, Term b) {
  return make({Kind::MemberOf, {std::move(a), std::move(b)}, {}, {}});
}

FormulaPtr Formula::equals(Term a, Term b) {
  return make({Kind::Equals, {std::move(a), std::move(b)}, {}, {}});
}

FormulaPtr Formula::subsetOf(Term a, Term b) {
  // "a sub b" is shorthand for: forall t in a (t in b)
  std::string t = freshVar();
  return forallIn(t, std::move(a), memberOf(Term::v(t), std::move(b)));
}

FormulaPtr Formula::commutatorOf(std::vector<Term> ts) {
  return make({Kind::Commutator, std::move(ts), {}, {}});
}

FormulaPtr Formula::negation(FormulaPtr f) {
  return make({Kind::Not, {}, {std::move(f)}, {}});
}

FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) {
  return make({Kind::And, {}, {std::move(a), std::move(b)}, {}});
}

FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b) {
  return make({Kind::Or, {}, {std::move(a), std::move(b)}, {}});
}

FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b) {
  return make({Kind::Implies, {}, {std::move(a), std::move(b)}, {}});
}

FormulaPtr Formula::iff(FormulaPtr a, FormulaPtr b) {
  return make({Kind::Iff, {}, {std::move(a), std::move(b)}, {}});
}

FormulaPtr Formula::forallIn(std::string var, Term bound, FormulaPtr f) {
  return make({Kind::ForallIn, {std::move(bound)}, {std::move(f)},
               std::move(var)});
}

FormulaPtr Formula::existsIn(std::string var, Term bound, FormulaPtr f) {
  return make({Kind::ExistsIn, {std::move(bound)}, {std::move(f)},
               std::move(var)});
}

FormulaPtr Formula::forall(std::string var, FormulaPtr f) {
  return make({Kind::Forall, {}, {std::move(f)}, std::move(var)});
}

FormulaPtr Formula::exists(std::string var, FormulaPtr f) {
  return make({Kind::Exists, {}, {std::move(f)}, std::move(var)});
}

bool isDelta0(const FormulaPtr& f) {
  if (f->kind == Formula::Kind::Forall || f->kind == Formula::Kind::Exists)
    return false;
  return std::all_of(f->sub.begin(), f->sub.end(),
                     [](const FormulaPtr& s) { return isDelta0(s); });
}

namespace {

void collectFree(const FormulaPtr& f, std::vector<std::string>& bound,
                 std::vector<std::string>& out) {
  auto noteVar = [&](const Term& t) {
    if (!t.isVar()) return;
    if (std::find(bound.begin(), bound.end(), t.var) != bound.end()) return;
    if (std::find(out.begin(), out.end(), t.var) == out.end())
      out.push_back(t.var);
  };
  for (const Term& t : f->terms) noteVar(t);
  const bool binds = !f->var.empty();
  if (binds) bound.push_back(f->var);
  for (const FormulaPtr& s : f->sub) collectFree(s, bound, out);
  if (binds) bound.pop_back();
}

}  // namespace

std::vector<std::string> freeVars(const FormulaPtr& f) {
  std::vector<std::string> bound, out;
  collectFree(f, bound, out);
  return out;
}

FormulaPtr instantiate(
    const FormulaPtr& f,
    const std::vector<std::pair<std::string, NodeId>>& env) {
  Formula out = *f;
  // Terms attached to this node (atom arguments, quantifier bounds) are all
  // outer scope; the binder shadows names only inside the subformulas.
  for (Term& t : out.terms) {
    if (!t.isVar()) continue;
    for (const auto& [name, id] : env)
      if (t.var == name) {
        t = Term::c(id);
        break;
      }
  }
  // Do not substitute under a binder that shadows the name.
  std::vector<std::pair<std::string, NodeId>> inner;
  for (const auto& kv : env)
    if (kv.first != f->var || f->var.empty()) inner.push_back(kv);
  for (FormulaPtr& s : out.sub) s = instantiate(s, inner);
  return make(std::move(out));
}

namespace {

std::string termToString(const Term& t, const Universe* u) {
  if (t.isVar()) return t.var;
  if (u) return u->toString(t.constant);
  return "#" + std::to_string(t.constant);
}

std::string printRec(const FormulaPtr& f, const Universe* u) {
  using K = Formula::Kind;
  switch (f->kind) {
    case K::MemberOf:
      return "(" + termToString(f->terms[0], u) + " in " +
             termToString(f->terms[1], u) + ")";
    case K::Equals:
      return "(" + termToString(f->terms[0], u) + " = " +
             termToString(f->terms[1], u) + ")";
    case K::Commutator: {
      std::string s = "com(";
      for (size_t i = 0; i < f->terms.size(); ++i) {
        if (i) s += ", ";
        s += termToString(f->terms[i], u);
      }
      return s + ")";
    }
    case K::Not:
      return "not " + printRec(f->sub[0], u);
    case K::And:
      return "(" + printRec(f->sub[0], u) + " and " + printRec(f->sub[1], u) +
             ")";
    case K::Or:
      return "(" + printRec(f->sub[0], u) + " or " + printRec(f->sub[1], u) +
             ")";
    case K::Implies:
      return "(" + printRec(f->sub[0], u) + " -> " + printRec(f->sub[1], u) +
             ")";
    case K::Iff:
      return "(" + printRec(f->sub[0], u) + " <-> " + printRec(f->sub[1], u) +
             ")";
    case K::ForallIn:
      return "forall " + f->var + " in " + termToString(f->terms[0], u) + " " +
             printRec(f->sub[0], u);
    case K::ExistsIn:
      return "exists " + f->var + " in " + termToString(f->terms[0], u) + " " +
             printRec(f->sub[0], u);
    case K::Forall:
      return "forall " + f->var + " " + printRec(f->sub[0], u);
    case K::Exists:
      return "exists " + f->var + " " + printRec(f->sub[0], u);
  }
  return "?";
}

struct Parser {
  const std::string& text;
  Universe* universe;
  size_t pos = 0;

  void skipWs() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(pos), pos);
  }

  bool peekWord(const char* w) {
    skipWs();
    const size_t len = std::strlen(w);
    if (text.compare(pos, len, w) != 0) return false;
    if (std::isalpha(static_cast<unsigned char>(w[0]))) {
      const size_t end = pos + len;
      if (end < text.size() &&
          (std::isalnum(static_cast<unsigned char>(text[end])) ||
           text[end] == '_' || text[end] == '\''))
        return false;  // identifier continues
    }
    return true;
  }

  bool eatWord(const char* w) {
    if (!peekWord(w)) return false;
    pos += std::strlen(w);
    return true;
  }

  std::string ident() {
    skipWs();
    size_t start = pos;
    // '$' appears in generated fresh variables; accepting it keeps printed
    // formulas re-parseable.
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_' || text[pos] == '\'' || text[pos] == '$'))
      ++pos;
    if (pos == start) fail("expected an identifier");
    return text.substr(start, pos - start);
  }

  Term term() {
    skipWs();
    if (pos < text.size() &&
        (text[pos] == '{' || peekWord("check") || peekWord("ub"))) {
      if (!universe) fail("node literal not allowed here (no universe bound)");
      // Hand the literal to the node-literal parser; find its extent by
      // bracket matching.
      size_t start = pos;
      int depth = 0;
      while (pos < text.size()) {
        char c = text[pos];
        if (c == '{' || c == '(') ++depth;
        if (c == '}' || c == ')') {
          --depth;
          if (depth == 0) {
            ++pos;
            break;
          }
        }
        ++pos;
      }
      if (depth != 0) fail("unterminated node literal");
      return Term::c(parseNodeLiteral(*universe,
                                      text.substr(start, pos - start)));
    }
    return Term::v(ident());
  }

  FormulaPtr atomOrUnary() {
    skipWs();
    if (eatWord("not") || eatWord("!")) return Formula::negation(atomOrUnary());
    if (eatWord("forall")) return quantifier(true);
    if (eatWord("exists")) return quantifier(false);
    if (eatWord("com")) {
      skipWs();
      if (pos >= text.size() || text[pos] != '(')
        fail("expected '(' after com");
      ++pos;
      std::vector<Term> ts;
      while (true) {
        ts.push_back(term());
        skipWs();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        fail("expected ',' or ')' in com(...)");
      }
      return Formula::commutatorOf(std::move(ts));
    }
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      FormulaPtr f = formula();
      skipWs();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
      return f;
    }
    Term lhs = term();
    skipWs();
    if (eatWord("in")) return Formula::memberOf(lhs, term());
    if (eatWord("sub")) return Formula::subsetOf(lhs, term());
    if (pos < text.size() && text[pos] == '=') {
      ++pos;
      return Formula::equals(lhs, term());
    }
    fail("expected 'in', 'sub' or '=' after term");
  }

  FormulaPtr quantifier(bool universal) {
    std::string var = ident();
    skipWs();
    if (eatWord("in")) {
      Term bound = term();
      FormulaPtr body = atomOrUnary();
      return universal ? Formula::forallIn(var, bound, body)
                       : Formula::existsIn(var, bound, body);
    }
    FormulaPtr body = atomOrUnary();
    return universal ? Formula::forall(var, body)
                     : Formula::exists(var, body);
  }

  FormulaPtr conjunction() {
    FormulaPtr f = atomOrUnary();
    while (eatWord("and") || eatWord("&")) f = Formula::conj(f, atomOrUnary());
    return f;
  }

  FormulaPtr disjunction() {
    FormulaPtr f = conjunction();
    while (eatWord("or") || eatWord("|")) f = Formula::disj(f, conjunction());
    return f;
  }

  FormulaPtr implication() {
    FormulaPtr f = disjunction();
    skipWs();
    if (eatWord("->")) return Formula::implies(f, implication());
    return f;
  }

  FormulaPtr formula() {
    FormulaPtr f = implication();
    while (eatWord("<->")) f = Formula::iff(f, implication());
    return f;
  }
};

}  // namespace

std::string printFormula(const FormulaPtr& f) { return printRec(f, nullptr); }

std::string printFormula(const FormulaPtr& f, const Universe& u) {
  return printRec(f, &u);
}

FormulaPtr parseFormula(const std::string& text, Universe* universe) {
  Parser p{text, universe};
  FormulaPtr f = p.formula();
  p.skipWs();
  if (p.pos != text.size()) p.fail("trailing characters");
  return f;
}

}  // namespace omset
