#pragma once

#include <optional>
#include <unordered_map>

#include "omset/formula.hpp"
#include "omset/implication.hpp"
#include "omset/quniverse.hpp"

namespace omset {

// Evaluates truth values over one universe under a chosen implication.
// Atom values are memoized per (node, node) pair; the recursion only ever
// descends into strictly lower-rank pairs. Unbounded quantifiers range over
// the supplied fragment and every such evaluation is fragment-relative by
// construction; callers that report on them must say so.
class EvalContext {
 public:
  EvalContext(Universe& u, ImplSpec spec, const Fragment* fragment = nullptr);

  const Universe& universe() const { return *u_; }
  Universe& universe() { return *u_; }
  const Logic& logic() const { return u_->logic(); }
  const ImplSpec& implSpec() const { return spec_; }
  const Fragment* fragment() const { return fragment_; }

  Elem impl(Elem a, Elem b) const { return implEval(logic(), spec_, a, b); }
  Elem equiv(Elem a, Elem b) const {
    return logic().meet(impl(a, b), impl(b, a));
  }

  Elem valEquals(NodeId a, NodeId b);
  Elem valMemberOf(NodeId a, NodeId b);
  Elem valSubsetOf(NodeId a, NodeId b);

  // Closed sentences only; throws std::invalid_argument when a free variable
  // remains or an unbounded quantifier is hit without a fragment.
  Elem truthValue(const FormulaPtr& sentence);

 private:
  Elem evalRec(const FormulaPtr& f,
               std::vector<std::pair<std::string, NodeId>>& env);
  NodeId resolve(const Term& t,
                 const std::vector<std::pair<std::string, NodeId>>& env) const;

  Universe* u_;
  ImplSpec spec_;
  const Fragment* fragment_;
  std::unordered_map<std::uint64_t, Elem> eqMemo_, inMemo_;
};

struct DeMorganReport {
  long connectiveChecked = 0, connectiveFailed = 0;   // law (i)
  long unboundedChecked = 0, unboundedFailed = 0;     // law (ii)
  long boundedChecked = 0, boundedFailed = 0;         // law (iii)
  std::optional<std::string> boundedWitness;  // first (u, phi) breaking (iii)
};

// Laws (i) and (ii) must hold for any implication; law (iii) is recorded,
// not judged: the caller decides whether failures are expected (they are,
// for anything but poly0).
DeMorganReport deMorganChecks(EvalContext& ctx);

// On a Boolean logic: bounded quantification agrees with relativized
// unbounded quantification over the fragment, for a curated schedule.
// Returns the number of disagreements (0 expected).
long booleanBoundedEquivalenceFailures(EvalContext& ctx);

}  // namespace omset
