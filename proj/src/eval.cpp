#include "omset/eval.hpp"

#include <stdexcept>

#include "omset/commutator.hpp"

namespace omset {

namespace {

std::uint64_t pairKey(NodeId a, NodeId b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

}  // namespace

EvalContext::EvalContext(Universe& u, ImplSpec spec, const Fragment* fragment)
    : u_(&u), spec_(std::move(spec)), fragment_(fragment) {
  if (spec_.kind == ImplSpec::Kind::Twisted)
    throw std::invalid_argument(
        "twisted implications resolve only on matrix-backed logics");
}

Elem EvalContext::valEquals(NodeId a, NodeId b) {
  const std::uint64_t key = pairKey(a, b);
  if (auto it = eqMemo_.find(key); it != eqMemo_.end()) return it->second;
  const Logic& L = logic();
  Elem r = L.top();
  for (auto [c, v] : u_->node(a).entries)
    r = L.meet(r, impl(v, valMemberOf(c, b)));
  for (auto [c, v] : u_->node(b).entries)
    r = L.meet(r, impl(v, valMemberOf(c, a)));
  eqMemo_.emplace(key, r);
  return r;
}

Elem EvalContext::valMemberOf(NodeId a, NodeId b) {
  const std::uint64_t key = pairKey(a, b);
  if (auto it = inMemo_.find(key); it != inMemo_.end()) return it->second;
  const Logic& L = logic();
  Elem r = L.bot();
  for (auto [c, v] : u_->node(b).entries)
    r = L.join(r, L.meet(v, valEquals(a, c)));
  inMemo_.emplace(key, r);
  return r;
}

Elem EvalContext::valSubsetOf(NodeId a, NodeId b) {
  const Logic& L = logic();
  Elem r = L.top();
  for (auto [c, v] : u_->node(a).entries)
    r = L.meet(r, impl(v, valMemberOf(c, b)));
  return r;
}

NodeId EvalContext::resolve(
    const Term& t,
    const std::vector<std::pair<std::string, NodeId>>& env) const {
  if (!t.isVar()) return t.constant;
  for (auto it = env.rbegin(); it != env.rend(); ++it)
    if (it->first == t.var) return it->second;
  throw std::invalid_argument("free variable '" + t.var +
                              "' in sentence evaluation");
}

Elem EvalContext::evalRec(const FormulaPtr& f,
                          std::vector<std::pair<std::string, NodeId>>& env) {
  using K = Formula::Kind;
  const Logic& L = logic();
  switch (f->kind) {
    case K::MemberOf:
      return valMemberOf(resolve(f->terms[0], env), resolve(f->terms[1], env));
    case K::Equals:
      return valEquals(resolve(f->terms[0], env), resolve(f->terms[1], env));
    case K::Commutator: {
      std::vector<NodeId> nodes;
      for (const Term& t : f->terms) nodes.push_back(resolve(t, env));
      return u_->qsetCommutator(nodes);
    }
    case K::Not:
      return L.ocompl(evalRec(f->sub[0], env));
    case K::And:
      return L.meet(evalRec(f->sub[0], env), evalRec(f->sub[1], env));
    case K::Or:
      return L.join(evalRec(f->sub[0], env), evalRec(f->sub[1], env));
    case K::Implies:
      return impl(evalRec(f->sub[0], env), evalRec(f->sub[1], env));
    case K::Iff:
      return equiv(evalRec(f->sub[0], env), evalRec(f->sub[1], env));
    case K::ForallIn: {
      const NodeId bound = resolve(f->terms[0], env);
      Elem r = L.top();
      for (auto [c, v] : u_->node(bound).entries) {
        env.push_back({f->var, c});
        r = L.meet(r, impl(v, evalRec(f->sub[0], env)));
        env.pop_back();
      }
      return r;
    }
    case K::ExistsIn: {
      const NodeId bound = resolve(f->terms[0], env);
      Elem r = L.bot();
      for (auto [c, v] : u_->node(bound).entries) {
        env.push_back({f->var, c});
        r = L.join(r, L.meet(v, evalRec(f->sub[0], env)));
        env.pop_back();
      }
      return r;
    }
    case K::Forall: {
      if (!fragment_)
        throw std::invalid_argument(
            "unbounded quantifier requires a fragment");
      Elem r = L.top();
      for (NodeId w : fragment_->nodes) {
        env.push_back({f->var, w});
        r = L.meet(r, evalRec(f->sub[0], env));
        env.pop_back();
      }
      return r;
    }
    case K::Exists: {
      if (!fragment_)
        throw std::invalid_argument(
            "unbounded quantifier requires a fragment");
      Elem r = L.bot();
      for (NodeId w : fragment_->nodes) {
        env.push_back({f->var, w});
        r = L.join(r, evalRec(f->sub[0], env));
        env.pop_back();
      }
      return r;
    }
  }
  throw std::logic_error("unreachable");
}

Elem EvalContext::truthValue(const FormulaPtr& sentence) {
  std::vector<std::pair<std::string, NodeId>> env;
  return evalRec(sentence, env);
}

DeMorganReport deMorganChecks(EvalContext& ctx) {
  DeMorganReport rep;
  const Logic& L = ctx.logic();
  const Fragment* frag = ctx.fragment();
  if (!frag) throw std::invalid_argument("deMorganChecks needs a fragment");

  // Scheduled sentences: atomic and one-connective sentences over fragment
  // node pairs. Enough to exercise every recursion path of the laws.
  std::vector<FormulaPtr> sentences;
  const size_t cap = frag->nodes.size() < 8 ? frag->nodes.size() : 8;
  for (size_t i = 0; i < cap; ++i)
    for (size_t j = 0; j < cap; ++j) {
      const Term a = Term::c(frag->nodes[i]), b = Term::c(frag->nodes[j]);
      sentences.push_back(Formula::memberOf(a, b));
      sentences.push_back(Formula::equals(a, b));
    }

  // (i) connective laws
  for (const FormulaPtr& phi : sentences)
    for (const FormulaPtr& psi : sentences) {
      const Elem vp = ctx.truthValue(phi), vq = ctx.truthValue(psi);
      ++rep.connectiveChecked;
      if (L.ocompl(L.join(vp, vq)) != L.meet(L.ocompl(vp), L.ocompl(vq)) ||
          L.ocompl(L.meet(vp, vq)) != L.join(L.ocompl(vp), L.ocompl(vq)))
        ++rep.connectiveFailed;
    }

  // (ii) unbounded-quantifier laws over the fragment
  {
    std::vector<FormulaPtr> open;
    for (size_t i = 0; i < cap; ++i) {
      open.push_back(Formula::memberOf(Term::v("x"), Term::c(frag->nodes[i])));
      open.push_back(Formula::memberOf(Term::c(frag->nodes[i]), Term::v("x")));
      open.push_back(Formula::equals(Term::v("x"), Term::c(frag->nodes[i])));
    }
    for (const FormulaPtr& phi : open) {
      ++rep.unboundedChecked;
      const Elem notEx =
          ctx.truthValue(Formula::negation(Formula::exists("x", phi)));
      const Elem allNot =
          ctx.truthValue(Formula::forall("x", Formula::negation(phi)));
      const Elem notAll =
          ctx.truthValue(Formula::negation(Formula::forall("x", phi)));
      const Elem exNot =
          ctx.truthValue(Formula::exists("x", Formula::negation(phi)));
      if (notEx != allNot || notAll != exNot) ++rep.unboundedFailed;
    }
  }

  // (iii) bounded-quantifier laws, over every fragment u and atomic phi
  for (NodeId un : frag->nodes) {
    std::vector<FormulaPtr> open;
    for (NodeId c : frag->nodes) {
      open.push_back(Formula::memberOf(Term::v("x"), Term::c(c)));
      open.push_back(Formula::memberOf(Term::c(c), Term::v("x")));
      open.push_back(Formula::equals(Term::v("x"), Term::c(c)));
    }
    open.push_back(Formula::equals(Term::v("x"), Term::v("x")));
    for (const FormulaPtr& phi : open) {
      ++rep.boundedChecked;
      const Term ut = Term::c(un);
      const Elem lhs = ctx.truthValue(
          Formula::negation(Formula::existsIn("x", ut, phi)));
      const Elem rhs = ctx.truthValue(
          Formula::forallIn("x", ut, Formula::negation(phi)));
      const Elem lhs2 = ctx.truthValue(
          Formula::negation(Formula::forallIn("x", ut, phi)));
      const Elem rhs2 = ctx.truthValue(
          Formula::existsIn("x", ut, Formula::negation(phi)));
      if (lhs != rhs || lhs2 != rhs2) {
        ++rep.boundedFailed;
        if (!rep.boundedWitness)
          rep.boundedWitness = "u=" + ctx.universe().toString(un) +
                               ", phi=" + printFormula(phi);
      }
    }
  }
  return rep;
}

long booleanBoundedEquivalenceFailures(EvalContext& ctx) {
  const Logic& L = ctx.logic();
  if (!L.isBoolean())
    throw std::invalid_argument("bounded-equivalence check needs a Boolean logic");
  const Fragment* frag = ctx.fragment();
  if (!frag) throw std::invalid_argument("needs a fragment");
  long failures = 0;
  std::vector<FormulaPtr> open;
  const size_t cap = frag->nodes.size() < 8 ? frag->nodes.size() : 8;
  for (size_t i = 0; i < cap; ++i) {
    open.push_back(Formula::memberOf(Term::v("x"), Term::c(frag->nodes[i])));
    open.push_back(Formula::equals(Term::v("x"), Term::c(frag->nodes[i])));
  }
  open.push_back(Formula::equals(Term::v("x"), Term::v("x")));
  for (NodeId un : frag->nodes)
    for (const FormulaPtr& phi : open) {
      const Term ut = Term::c(un);
      const FormulaPtr inU = Formula::memberOf(Term::v("x"), ut);
      const Elem bAll = ctx.truthValue(Formula::forallIn("x", ut, phi));
      const Elem uAll = ctx.truthValue(
          Formula::forall("x", Formula::implies(inU, phi)));
      const Elem bEx = ctx.truthValue(Formula::existsIn("x", ut, phi));
      const Elem uEx =
          ctx.truthValue(Formula::exists("x", Formula::conj(inU, phi)));
      if (bAll != uAll || bEx != uEx) ++failures;
    }
  return failures;
}

}  // namespace omset
