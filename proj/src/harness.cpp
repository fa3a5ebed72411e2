#include "omset/harness.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "omset/commutator.hpp"

namespace omset {

namespace {

struct Partial {
  long checked = 0;
  long failed = 0;
  std::vector<std::string> witnesses;

  void fail(std::string w) {
    ++failed;
    if (witnesses.size() < 50) witnesses.push_back(std::move(w));
  }
};

VerificationReport baseReport(const HarnessConfig& cfg, std::string suite) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.addParam("logic", cfg.logicName);
  std::string impls;
  for (const auto& s : cfg.impls) {
    if (!impls.empty()) impls += ",";
    impls += s.describe();
  }
  r.addParam("impl", impls);
  r.addParam("rank", std::to_string(cfg.rankBound));
  r.addParam("domCap", std::to_string(cfg.domCap));
  r.addParam("seed", std::to_string(cfg.seed));
  return r;
}

void mergeParts(VerificationReport& rep, const std::vector<Partial>& parts) {
  for (const Partial& p : parts) {
    rep.checked += p.checked;
    rep.failed += p.failed;
    rep.witnesses.insert(rep.witnesses.end(), p.witnesses.begin(),
                         p.witnesses.end());
  }
}

// All arity-sized tuples over [0, count), lexicographic.
bool nextTuple(std::vector<int>& t, int count) {
  int i = static_cast<int>(t.size()) - 1;
  while (i >= 0 && t[i] + 1 == count) t[i--] = 0;
  if (i < 0) return false;
  ++t[i];
  return true;
}

// Tuple source for the sweeps: exhaustive while the full product fits the
// cap, seeded uniform samples otherwise.
class TupleStream {
 public:
  TupleStream(int count, int arity, long cap, std::uint64_t seed)
      : count_(count), tuple_(arity, 0), rng_(seed) {
    double total = 1;
    for (int i = 0; i < arity; ++i) total *= count;
    sampled_ = cap > 0 && total > static_cast<double>(cap);
    remaining_ = sampled_ ? cap : 0;
    if (sampled_) draw();
  }

  const std::vector<int>& tuple() const { return tuple_; }

  bool advance() {
    if (!sampled_) return nextTuple(tuple_, count_);
    if (--remaining_ <= 0) return false;
    draw();
    return true;
  }

  bool sampled() const { return sampled_; }

 private:
  void draw() {
    std::uniform_int_distribution<int> pick(0, count_ - 1);
    for (int& x : tuple_) x = pick(rng_);
  }

  int count_;
  bool sampled_ = false;
  long remaining_ = 0;
  std::vector<int> tuple_;
  std::mt19937_64 rng_;
};

std::string tupleLabel(const Universe& u, const std::vector<NodeId>& nodes) {
  std::string s = "(";
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (i) s += ", ";
    s += u.toString(nodes[i]);
  }
  return s + ")";
}

// Instantiates a template on a node tuple, in free-variable order.
FormulaPtr onTuple(const FormulaPtr& tmpl, const std::vector<std::string>& vars,
                   const std::vector<NodeId>& nodes) {
  std::vector<std::pair<std::string, NodeId>> env;
  for (size_t i = 0; i < vars.size(); ++i) env.push_back({vars[i], nodes[i]});
  return instantiate(tmpl, env);
}

ImplSpec specForSublogic(const ImplSpec& spec, const SublogicView& view,
                         const Logic& parent) {
  if (spec.kind == ImplSpec::Kind::Poly) return spec;
  if (spec.kind != ImplSpec::Kind::Table)
    throw std::invalid_argument("cannot restrict this implication spec");
  const int m = view.logic.size();
  std::vector<Elem> t(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const Elem big =
          spec.table[static_cast<size_t>(view.fromSub[a]) * parent.size() +
                     view.fromSub[b]];
      const Elem mapped = view.toSub[big];
      if (mapped < 0)
        throw std::invalid_argument(
            "implication table leaves the sublogic; (I1) fails");
      t[static_cast<size_t>(a) * m + b] = mapped;
    }
  return ImplSpec::fromTable(std::move(t));
}

}  // namespace

// --- commutator equivalence --------------------------------------------------

VerificationReport commutatorEquivalenceSuite(const HarnessConfig& cfg,
                                              int maxExhaustive,
                                              int seededTriples) {
  const Logic& L = *cfg.logic;
  VerificationReport rep = baseReport(cfg, "commutator");
  // Exhaustive subsets of size <= maxExhaustive, then seeded size-3 samples.
  std::vector<Subset> sets;
  sets.push_back(0);
  std::vector<Elem> elems(L.size());
  for (int i = 0; i < L.size(); ++i) elems[i] = i;
  if (maxExhaustive >= 1)
    for (Elem a : elems) sets.push_back(subsetWith(0, a));
  if (maxExhaustive >= 2)
    for (Elem a : elems)
      for (Elem b = a + 1; b < L.size(); ++b)
        sets.push_back(subsetWith(subsetWith(0, a), b));
  if (maxExhaustive >= 3)
    for (Elem a : elems)
      for (Elem b = a + 1; b < L.size(); ++b)
        for (Elem c = b + 1; c < L.size(); ++c)
          sets.push_back(subsetWith(subsetWith(subsetWith(0, a), b), c));
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> pick(0, L.size() - 1);
  if (L.size() > 3 && maxExhaustive < 3)  // smaller carriers are exhaustive
    for (int s = 0; s < seededTriples; ++s) {
      Subset a = 0;
      while (subsetSize(a) < 3) a = subsetWith(a, pick(rng));
      sets.push_back(a);
    }

  auto parts = mapIndex<Partial>(
      cfg.exec, static_cast<long>(sets.size()), [&](long i) {
        Partial p;
        const Subset a = sets[i];
        const CommutatorReport r = verifyCommutatorEquivalence(L, a);
        ++p.checked;
        if (!r.allEqual())
          p.fail("A=" + L.subsetToString(a) + " routes " +
                 L.name(r.viaSubcommutators) + "/" + L.name(r.viaTakeuti) +
                 "/" + L.name(r.viaPulmannova) + "/" +
                 L.name(r.viaPairwiseMeet));
        // Structural facts behind the definition: com(A) is itself a
        // subcommutator and S(A) = [0, com(A)]_{L(A)}.
        const Elem cm = r.viaSubcommutators;
        ++p.checked;
        if (!subsetHas(r.subcommutatorSet, cm))
          p.fail("com(A) not a subcommutator for A=" + L.subsetToString(a));
        ++p.checked;
        if (r.subcommutatorSet !=
            L.interval(L.bot(), cm, L.sublogicGenerated(a)))
          p.fail("S(A) != [0,com]_{L(A)} for A=" + L.subsetToString(a));
        // Subcommutator lemma: for E in A^!, meets commute with and without E.
        for (Elem e : subsetElems(L.commutant(a)))
          for (Elem p1 : subsetElems(a))
            for (Elem p2 : subsetElems(a)) {
              ++p.checked;
              if (L.commutes(L.meet(p1, e), L.meet(p2, e)) !=
                  L.commutes(L.meet(p1, e), p2))
                p.fail("subcommutator lemma at E=" + L.name(e));
            }
        ++p.checked;
        if (!directProductCheck(L, a))
          p.fail("direct-product decomposition fails for A=" +
                 L.subsetToString(a));
        return p;
      });
  mergeParts(rep, parts);
  return rep;
}

// --- implication propositions -------------------------------------------------

VerificationReport implicationSuite(const HarnessConfig& cfg) {
  const Logic& L = *cfg.logic;
  VerificationReport rep = baseReport(cfg, "implication");
  auto parts = mapIndex<Partial>(cfg.exec, 6, [&](long j) {
    Partial p;
    const ImplSpec spec = ImplSpec::poly(static_cast<int>(j));
    const AxiomReport ax = checkAxioms(L, spec);
    ++p.checked;
    if (!ax.generalizedImplication())
      p.fail("poly" + std::to_string(j) + " fails (I1)/(I2)/(LB)");
    // Kotas classification relative to this logic.
    const bool boolean = L.isBoolean();
    const bool expectE = j >= 1 || boolean;
    const bool expectMpMtNg = j >= 2 || boolean;  // MT/NG come with MP range
    ++p.checked;
    if (ax.e != expectE)
      p.fail("poly" + std::to_string(j) + " (E) = " +
             (ax.e ? "true" : "false"));
    ++p.checked;
    if (ax.mp != expectMpMtNg)
      p.fail("poly" + std::to_string(j) + " (MP) = " +
             (ax.mp ? "true" : "false"));
    ++p.checked;
    if (j >= 3 && !(ax.e && ax.mp && ax.mt && ax.ng && ax.lb))
      p.fail("poly" + std::to_string(j) + " must satisfy (E)(MP)(MT)(NG)(LB)");
    ++p.checked;
    if (ax.le != (j >= 1 || boolean))
      p.fail("poly" + std::to_string(j) + " (LE) = " +
             (ax.le ? "true" : "false"));
    ++p.checked;
    if (!verifyImplicationEquivalences(L, spec))
      p.fail("B/N equivalence block fails for poly" + std::to_string(j));
    ++p.checked;
    if (!mpCharacterization(L, spec))
      p.fail("MP <-> N-part characterization fails for poly" +
             std::to_string(j));
    ++p.checked;
    if (!leChecks(L, spec))
      p.fail("LE equivalence block fails for poly" + std::to_string(j));
    if (j == 0) {  // logic-level one-shot checks, run once
      ++p.checked;
      if (!verifySixRelations(L)) p.fail("poly-via-poly5 relations fail");
      ++p.checked;
      if (!sasakiCharacterizations(L)) p.fail("max-characterizations fail");
      ++p.checked;
      if (!mpPolynomialClassification(L)) p.fail("MP classification fails");
      ++p.checked;
      if (!lePolynomialClassification(L)) p.fail("LE classification fails");
    }
    return p;
  });
  mergeParts(rep, parts);
  return rep;
}

VerificationReport deductionSuite(const HarnessConfig& cfg) {
  const Logic& L = *cfg.logic;
  VerificationReport rep = baseReport(cfg, "deduction");
  auto parts = mapIndex<Partial>(
      cfg.exec, static_cast<long>(cfg.impls.size()), [&](long i) {
        Partial p;
        ++p.checked;
        if (!deductionChecks(L, cfg.impls[i]))
          p.fail("deduction theorem fails for " + cfg.impls[i].describe());
        return p;
      });
  mergeParts(rep, parts);
  return rep;
}

// --- equality gate -------------------------------------------------------------

VerificationReport equalitySuite(const HarnessConfig& cfg) {
  VerificationReport rep = baseReport(cfg, "equality");
  auto parts = mapIndex<Partial>(
      cfg.exec, static_cast<long>(cfg.impls.size()), [&](long k) {
        Partial p;
        Universe universe(*cfg.logic);
        Fragment frag =
            buildFragment(universe, cfg.rankBound, cfg.domCap, cfg.nodeBudget);
        EvalContext ctx(universe, cfg.impls[k], &frag);
        for (NodeId u : frag.nodes) {
          ++p.checked;
          if (ctx.valEquals(u, u) != cfg.logic->top())
            p.fail("[[u=u]] != 1 at u=" + universe.toString(u));
          for (auto [child, value] : universe.node(u).entries) {
            ++p.checked;
            if (!cfg.logic->le(value, ctx.valMemberOf(child, u)))
              p.fail("u(x) <= [[x in u]] fails at u=" + universe.toString(u));
          }
          for (NodeId v : frag.nodes) {
            ++p.checked;
            if (ctx.valEquals(u, v) != ctx.valEquals(v, u))
              p.fail("equality symmetry fails at " +
                     tupleLabel(universe, {u, v}));
          }
        }
        return p;
      });
  mergeParts(rep, parts);
  return rep;
}

// --- elementary equivalence ------------------------------------------------------

VerificationReport elementaryEquivalenceSuite(const HarnessConfig& cfg,
                                              int maxHsize) {
  VerificationReport rep = baseReport(cfg, "elementary-equivalence");
  const std::vector<Hf> hfU = hfUniverse(maxHsize);
  std::vector<const ScheduleItem*> items;
  for (const ScheduleItem& it : delta0Schedule())
    if (!it.usesCommutatorAtom) items.push_back(&it);

  const long tasks = static_cast<long>(cfg.impls.size() * items.size());
  auto parts = mapIndex<Partial>(cfg.exec, tasks, [&](long t) {
    Partial p;
    const ImplSpec& spec = cfg.impls[t / items.size()];
    const ScheduleItem& item = *items[t % items.size()];
    Universe universe(*cfg.logic);
    EvalContext ctx(universe, spec);
    const auto vars = freeVars(item.formula);
    std::vector<int> tup(item.arity, 0);
    do {
      std::vector<std::pair<std::string, Hf>> hfEnv;
      std::vector<NodeId> nodes;
      for (int i = 0; i < item.arity; ++i) {
        hfEnv.push_back({vars[i], hfU[tup[i]]});
        nodes.push_back(universe.checkEmbed(hfU[tup[i]]));
      }
      const bool classical = hfEval(item.formula, hfEnv);
      const Elem value = ctx.truthValue(onTuple(item.formula, vars, nodes));
      ++p.checked;
      if (classical != (value == cfg.logic->top())) {
        std::string tupleText;
        for (const auto& [n, h] : hfEnv) tupleText += " " + h.toString();
        p.fail(item.name + " with" + tupleText + ": HF says " +
               (classical ? "true" : "false") + ", value " +
               cfg.logic->name(value));
      }
    } while (nextTuple(tup, static_cast<int>(hfU.size())));
    return p;
  });
  mergeParts(rep, parts);
  rep.addParam("hfUniverse", std::to_string(hfU.size()));
  return rep;
}

// --- absoluteness ---------------------------------------------------------------

namespace {

// Canonical family of sublogics: the closures of the empty set, singletons
// and pairs (deduplicated).
std::vector<Subset> sublogicFamily(const Logic& L) {
  std::vector<Subset> out;
  auto add = [&](Subset s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  add(L.sublogicGenerated(0));
  for (Elem a = 0; a < L.size(); ++a) add(L.sublogicGenerated(subsetWith(0, a)));
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = a + 1; b < L.size(); ++b)
      add(L.sublogicGenerated(subsetWith(subsetWith(0, a), b)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

VerificationReport absolutenessSuite(const HarnessConfig& cfg) {
  const Logic& L = *cfg.logic;
  VerificationReport rep = baseReport(cfg, "absoluteness");
  const std::vector<Subset> subs = sublogicFamily(L);
  rep.addParam("sublogics", std::to_string(subs.size()));

  const long tasks = static_cast<long>(cfg.impls.size() * subs.size());
  auto parts = mapIndex<Partial>(cfg.exec, tasks, [&](long t) {
    Partial p;
    const ImplSpec& spec = cfg.impls[t / subs.size()];
    const Subset member = subs[t % subs.size()];
    const SublogicView view = extractSublogic(L, member);
    ImplSpec subSpec;
    try {
      subSpec = specForSublogic(spec, view, L);
    } catch (const std::invalid_argument&) {
      return p;  // spec not restrictable; nothing to compare
    }

    // Build the sublogic fragment, map into the parent universe, evaluate
    // both ways.
    Universe subU(view.logic);
    Fragment subFrag =
        buildFragment(subU, cfg.rankBound, cfg.domCap, cfg.nodeBudget);
    Universe bigU(L);
    EvalContext subCtx(subU, subSpec);
    EvalContext bigCtx(bigU, spec);
    std::vector<NodeId> mapped;
    mapped.reserve(subFrag.nodes.size());
    for (NodeId id : subFrag.nodes)
      mapped.push_back(mapNode(subU, id, bigU, view.fromSub));

    for (const ScheduleItem& item : delta0Schedule()) {
      const auto vars = freeVars(item.formula);
      TupleStream tuples(static_cast<int>(subFrag.nodes.size()), item.arity,
                         cfg.tupleCap, cfg.seed + t);
      do {
        const auto& tup = tuples.tuple();
        std::vector<NodeId> subNodes, bigNodes;
        for (int i = 0; i < item.arity; ++i) {
          subNodes.push_back(subFrag.nodes[tup[i]]);
          bigNodes.push_back(mapped[tup[i]]);
        }
        const Elem inner =
            subCtx.truthValue(onTuple(item.formula, vars, subNodes));
        const Elem outer =
            bigCtx.truthValue(onTuple(item.formula, vars, bigNodes));
        ++p.checked;
        if (view.fromSub[inner] != outer)
          p.fail(item.name + " on " + L.subsetToString(member) + " at " +
                 tupleLabel(bigU, bigNodes) + ": inner " +
                 view.logic.name(inner) + " vs outer " + L.name(outer));
      } while (tuples.advance());
    }
    return p;
  });
  mergeParts(rep, parts);
  return rep;
}

// --- restriction -----------------------------------------------------------------

VerificationReport restrictionSuite(const HarnessConfig& cfg) {
  const Logic& L = *cfg.logic;
  VerificationReport rep = baseReport(cfg, "restriction");
  std::vector<const ScheduleItem*> items;
  for (const ScheduleItem& it : delta0Schedule())
    if (!it.usesCommutatorAtom) items.push_back(&it);

  const long tasks = static_cast<long>(cfg.impls.size() * items.size());
  auto parts = mapIndex<Partial>(cfg.exec, tasks, [&](long t) {
    Partial p;
    const ImplSpec& spec = cfg.impls[t / items.size()];
    const ScheduleItem& item = *items[t % items.size()];
    Universe universe(*cfg.logic);
    Fragment frag =
        buildFragment(universe, cfg.rankBound, cfg.domCap, cfg.nodeBudget);
    EvalContext ctx(universe, spec, &frag);
    const auto vars = freeVars(item.formula);
    const int count = static_cast<int>(frag.nodes.size());
    TupleStream tuples(count, item.arity, cfg.tupleCap, cfg.seed + t);
    do {
      const auto& tup = tuples.tuple();
      std::vector<NodeId> nodes;
      for (int i = 0; i < item.arity; ++i) nodes.push_back(frag.nodes[tup[i]]);
      const Elem plain = ctx.truthValue(onTuple(item.formula, vars, nodes));
      for (Elem pe : subsetElems(L.commutant(universe.supportOfAll(nodes)))) {
        std::vector<NodeId> restricted;
        for (NodeId id : nodes)
          restricted.push_back(universe.restrictNode(id, pe));
        const Elem value =
            ctx.truthValue(onTuple(item.formula, vars, restricted));
        ++p.checked;
        if (L.meet(plain, pe) != L.meet(value, pe))
          p.fail(item.name + " at " + tupleLabel(universe, nodes) + ", p=" +
                 L.name(pe));
      }
    } while (tuples.advance());

    // Atom-level identities; (i) is an equality without the trailing meet.
    if (&item == items[0]) {
      TupleStream pairs(static_cast<int>(frag.nodes.size()), 2, cfg.tupleCap,
                        cfg.seed + 7919 * (t + 1));
      do {
        const NodeId u = frag.nodes[pairs.tuple()[0]];
        const NodeId v = frag.nodes[pairs.tuple()[1]];
        {
          const Subset supports =
              universe.support(u) | universe.support(v);
          for (Elem pe : subsetElems(L.commutant(supports))) {
            const NodeId up = universe.restrictNode(u, pe);
            const NodeId vp = universe.restrictNode(v, pe);
            ++p.checked;
            if (ctx.valMemberOf(up, vp) != L.meet(ctx.valMemberOf(u, v), pe))
              p.fail("atom (i) at " + tupleLabel(universe, {u, v}) + ", p=" +
                     L.name(pe));
            ++p.checked;
            if (L.meet(ctx.valSubsetOf(up, vp), pe) !=
                L.meet(ctx.valSubsetOf(u, v), pe))
              p.fail("atom (ii) at " + tupleLabel(universe, {u, v}) + ", p=" +
                     L.name(pe));
            ++p.checked;
            if (L.meet(ctx.valEquals(up, vp), pe) !=
                L.meet(ctx.valEquals(u, v), pe))
              p.fail("atom (iii) at " + tupleLabel(universe, {u, v}) + ", p=" +
                     L.name(pe));
            // composition law and support law for the restriction itself
            for (Elem qe : subsetElems(L.downSet(pe))) {
              ++p.checked;
              if (universe.restrictNode(up, qe) != universe.restrictNode(u, qe))
                p.fail("(u|p)|q != u|q at u=" + universe.toString(u));
            }
            Subset expect = 0;
            for (Elem s : subsetElems(universe.support(u)))
              expect = subsetWith(expect, L.meet(s, pe));
            ++p.checked;
            if (universe.support(up) != expect)
              p.fail("L(u|p) != L(u)^p at u=" + universe.toString(u));
          }
        }
      } while (pairs.advance());
    }
    return p;
  });
  mergeParts(rep, parts);
  return rep;
}

// --- range / commutation -----------------------------------------------------------

VerificationReport rangeCommutationSuite(const HarnessConfig& cfg) {
  const Logic& L = *cfg.logic;
  VerificationReport rep = baseReport(cfg, "range-commutation");
  std::vector<const ScheduleItem*> items;
  for (const ScheduleItem& it : delta0Schedule())
    if (!it.usesCommutatorAtom) items.push_back(&it);

  const long tasks = static_cast<long>(cfg.impls.size() * items.size());
  auto parts = mapIndex<Partial>(cfg.exec, tasks, [&](long t) {
    Partial p;
    const ImplSpec& spec = cfg.impls[t / items.size()];
    const ScheduleItem& item = *items[t % items.size()];
    Universe universe(*cfg.logic);
    Fragment frag =
        buildFragment(universe, cfg.rankBound, cfg.domCap, cfg.nodeBudget);
    EvalContext ctx(universe, spec, &frag);
    const auto vars = freeVars(item.formula);
    TupleStream tuples(static_cast<int>(frag.nodes.size()), item.arity,
                       cfg.tupleCap, cfg.seed + t);
    do {
      const auto& tup = tuples.tuple();
      std::vector<NodeId> nodes;
      for (int i = 0; i < item.arity; ++i) nodes.push_back(frag.nodes[tup[i]]);
      const Elem value = ctx.truthValue(onTuple(item.formula, vars, nodes));
      ++p.checked;
      if (!subsetHas(universe.generatedLogic(nodes), value))
        p.fail(item.name + " value outside Q(tuple) at " +
               tupleLabel(universe, nodes));
      for (Elem pe : subsetElems(L.commutant(universe.supportOfAll(nodes)))) {
        std::vector<NodeId> restricted;
        for (NodeId id : nodes)
          restricted.push_back(universe.restrictNode(id, pe));
        const Elem rvalue =
            ctx.truthValue(onTuple(item.formula, vars, restricted));
        ++p.checked;
        if (!L.commutes(pe, value) || !L.commutes(pe, rvalue))
          p.fail(item.name + " commutation at " + tupleLabel(universe, nodes) +
                 ", p=" + L.name(pe));
      }
    } while (tuples.advance());
    return p;
  });
  mergeParts(rep, parts);
  return rep;
}

// --- transfer corollary ---------------------------------------------------------------

VerificationReport transferCorollarySuite(const HarnessConfig& cfg) {
  const Logic& L = *cfg.logic;
  VerificationReport rep = baseReport(cfg, "transfer");
  rep.notes.push_back(
      "per-tuple corollary inequality; the unrestricted transfer principle "
      "is not asserted over truncated fragments");
  std::vector<const CorpusItem*> items;
  for (const CorpusItem& it : vettedCorpus())
    if (!it.pi2) items.push_back(&it);

  const long tasks = static_cast<long>(cfg.impls.size() * items.size());
  auto parts = mapIndex<Partial>(cfg.exec, tasks, [&](long t) {
    Partial p;
    const ImplSpec& spec = cfg.impls[t / items.size()];
    const CorpusItem& item = *items[t % items.size()];
    Universe universe(*cfg.logic);
    Fragment frag =
        buildFragment(universe, cfg.rankBound, cfg.domCap, cfg.nodeBudget);
    EvalContext ctx(universe, spec, &frag);
    const auto vars = freeVars(item.formula);
    TupleStream tuples(static_cast<int>(frag.nodes.size()), item.arity,
                       cfg.tupleCap, cfg.seed + t);
    do {
      const auto& tup = tuples.tuple();
      std::vector<NodeId> nodes;
      for (int i = 0; i < item.arity; ++i) nodes.push_back(frag.nodes[tup[i]]);
      const Elem cm = universe.qsetCommutator(nodes);
      const Elem value = ctx.truthValue(onTuple(item.formula, vars, nodes));
      ++p.checked;
      if (!L.le(cm, value))
        p.fail(item.name + " at " + tupleLabel(universe, nodes) + ": com " +
               L.name(cm) + " not below " + L.name(value));
    } while (tuples.advance());
    return p;
  });
  mergeParts(rep, parts);
  return rep;
}

// --- bounded de Morgan dichotomy --------------------------------------------------------

VerificationReport deMorganBoundedSuite(const HarnessConfig& cfg) {
  VerificationReport rep = baseReport(cfg, "demorgan-bounded");
  auto parts = mapIndex<Partial>(
      cfg.exec, static_cast<long>(cfg.impls.size()), [&](long k) {
        Partial p;
        const ImplSpec& spec = cfg.impls[k];
        Universe universe(*cfg.logic);
        Fragment frag =
            buildFragment(universe, cfg.rankBound, cfg.domCap, cfg.nodeBudget);
        EvalContext ctx(universe, spec, &frag);
        const DeMorganReport r = deMorganChecks(ctx);
        p.checked += r.connectiveChecked + r.unboundedChecked;
        if (r.connectiveFailed || r.unboundedFailed)
          p.fail("laws (i)/(ii) fail under " + spec.describe());
        bool maxImplication = true;  // extensionally equal to poly0?
        for (Elem a = 0; a < cfg.logic->size() && maxImplication; ++a)
          for (Elem b = 0; b < cfg.logic->size(); ++b)
            if (implEval(*cfg.logic, spec, a, b) !=
                kotasPoly(*cfg.logic, 0, a, b)) {
              maxImplication = false;
              break;
            }
        ++p.checked;
        if (maxImplication) {
          if (r.boundedFailed > 0)
            p.fail("law (iii) must hold for poly0; " + *r.boundedWitness);
        } else if (!cfg.logic->isBoolean()) {
          if (r.boundedFailed == 0)
            p.fail("expected a bounded de Morgan counterexample under " +
                   spec.describe());
        } else if (r.boundedFailed > 0) {
          p.fail("law (iii) must hold on a Boolean logic");
        }
        return p;
      });
  mergeParts(rep, parts);
  return rep;
}

// --- Boolean maximum principle ------------------------------------------------------------

MaximumWitness booleanMaximumWitness(EvalContext& ctx, const FormulaPtr& phi,
                                     const std::string& var) {
  const Fragment* frag = ctx.fragment();
  if (!frag) throw std::invalid_argument("maximum witness needs a fragment");
  MaximumWitness w;
  w.supremum = ctx.truthValue(Formula::exists(var, phi));
  for (NodeId u : frag->nodes) {
    const Elem value = ctx.truthValue(instantiate(phi, {{var, u}}));
    if (value == w.supremum) {
      w.attained = true;
      w.witness = u;
      return w;
    }
  }
  return w;
}

VerificationReport booleanMaximumSuite(const HarnessConfig& cfg) {
  VerificationReport rep = baseReport(cfg, "maximum");
  rep.notes.push_back("fragment-relative: suprema range over the fragment");
  if (!cfg.logic->isBoolean()) {
    rep.notes.push_back("skipped: logic is not Boolean");
    return rep;
  }
  auto parts = mapIndex<Partial>(
      cfg.exec, static_cast<long>(cfg.impls.size()), [&](long k) {
        Partial p;
        Universe universe(*cfg.logic);
        Fragment frag =
            buildFragment(universe, cfg.rankBound, cfg.domCap, cfg.nodeBudget);
        EvalContext ctx(universe, cfg.impls[k], &frag);
        std::vector<FormulaPtr> schedule;
        schedule.push_back(Formula::equals(Term::v("x"), Term::v("x")));
        schedule.push_back(Formula::memberOf(
            Term::v("x"), Term::c(universe.checkEmbed(Hf::natural(1)))));
        schedule.push_back(Formula::memberOf(
            Term::v("x"), Term::c(universe.checkEmbed(Hf::natural(2)))));
        for (Elem b = 0; b < cfg.logic->size(); ++b)
          schedule.push_back(
              Formula::equals(Term::v("x"), Term::c(universe.makeUb(b))));
        for (const FormulaPtr& phi : schedule) {
          ++p.checked;
          const MaximumWitness w = booleanMaximumWitness(ctx, phi, "x");
          if (!w.attained)
            p.fail("supremum " + cfg.logic->name(w.supremum) +
                   " not attained for " + printFormula(phi));
        }
        return p;
      });
  mergeParts(rep, parts);
  return rep;
}

// --- Pi2 demonstrator ------------------------------------------------------------------------

TransferTrace transferDemonstrator(Universe& universe, const ImplSpec& spec,
                                   const CorpusItem& item, NodeId u,
                                   int rankBound, int domCap,
                                   long nodeBudget) {
  if (!item.pi2) throw std::invalid_argument("demonstrator needs a Pi2 item");
  const Logic& L = universe.logic();
  TransferTrace tr;
  const auto vars = freeVars(item.formula);  // (x, y)

  const Subset lu = universe.support(u);
  tr.p = commutator(L, lu);
  tr.steps.push_back("p = com(u) = " + L.name(tr.p));

  const Subset z = L.center(lu);
  const Subset block = L.maximalBooleanSublogicContaining(z);
  tr.booleanBlock = block;
  tr.steps.push_back("B = maximal Boolean block containing Z(L(u)) = " +
                     L.subsetToString(block));
  for (Elem s : subsetElems(lu))
    if (!subsetHas(block, L.meet(s, tr.p)))
      throw std::logic_error("L(u)^p escapes the Boolean block");

  const NodeId up = universe.restrictNode(u, tr.p);
  tr.uRestricted = up;
  tr.steps.push_back("u|p = " + universe.toString(up));

  // Witness search in the block fragment, one rank deeper than u's bound.
  const SublogicView view = extractSublogic(L, block);
  Universe blockU(view.logic);
  Fragment blockFrag = buildFragment(blockU, rankBound + 1, domCap, nodeBudget);
  std::vector<Elem> toSubMap = view.toSub;
  const NodeId upSub = mapNode(universe, up, blockU, toSubMap);
  // Inside the Boolean block every generalized implication collapses to the
  // classical one by (LB), so the block evaluation can fix poly0.
  EvalContext blockCtx(blockU, ImplSpec::poly(0));
  NodeId witnessSub = -1;
  for (NodeId cand : blockFrag.nodes) {
    const Elem val = blockCtx.truthValue(
        onTuple(item.formula, vars, {upSub, cand}));
    if (val == view.logic.top()) {
      witnessSub = cand;
      break;
    }
  }
  if (witnessSub < 0) {
    tr.outcome = "witness-beyond-fragment";
    tr.steps.push_back("no block-fragment witness for " + item.name);
    return tr;
  }
  tr.witness = mapNode(blockU, witnessSub, universe, view.fromSub);
  tr.steps.push_back("witness v = " + universe.toString(tr.witness) +
                     " with [[psi(u|p, v)]]_B = 1");

  EvalContext ctx(universe, spec);
  if (ctx.truthValue(onTuple(item.formula, vars, {up, tr.witness})) != L.top()) {
    tr.outcome = "absoluteness-mismatch";
    return tr;
  }
  tr.steps.push_back("[[psi(u|p, v)]] = 1 (absoluteness)");

  // Pad the witness so its support is the whole block: dom(v~) = dom(v) u
  // {u_b : b in B}, v~(x) = [[x in v]]_B.
  std::vector<NodeId> dom;
  for (auto [c, val] : universe.node(tr.witness).entries) dom.push_back(c);
  for (Elem b : subsetElems(block)) dom.push_back(universe.makeUb(b));
  std::sort(dom.begin(), dom.end());
  dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
  std::vector<std::pair<NodeId, Elem>> entries;
  for (NodeId c : dom) {
    const NodeId cSub = mapNode(universe, c, blockU, toSubMap);
    entries.push_back(
        {c, view.fromSub[blockCtx.valMemberOf(cSub, witnessSub)]});
  }
  tr.padded = universe.intern(std::move(entries));
  tr.steps.push_back("padded v~ = " + universe.toString(tr.padded));

  const NodeId vtSub = mapNode(universe, tr.padded, blockU, toSubMap);
  if (blockCtx.valEquals(vtSub, witnessSub) != view.logic.top()) {
    tr.outcome = "padding-not-equal";
    return tr;
  }
  tr.steps.push_back("[[v~ = v]]_B = 1");

  if (universe.support(tr.padded) != block) {
    tr.outcome = "padding-support-mismatch";
    return tr;
  }
  const Elem puv = universe.qsetCommutator({u, tr.padded});
  if (puv != tr.p) {
    tr.outcome = "commutator-shift";
    return tr;
  }
  tr.steps.push_back("com(u, v~) = com(u) = p");

  const Elem full =
      ctx.truthValue(onTuple(item.formula, vars, {u, tr.padded}));
  if (!L.le(tr.p, full)) {
    tr.outcome = "final-inequality-fails";
    return tr;
  }
  tr.steps.push_back("p <= [[psi(u, v~)]] = " + L.name(full) +
                     " (restriction + composition)");
  tr.steps.push_back(
      "p <= com(u, v~) ^ [[psi(u, v~)]], hence com(u) => (exists-part) = 1 "
      "(deduction theorem)");
  tr.ok = true;
  tr.outcome = "ok";
  return tr;
}

VerificationReport demonstratorSuite(const HarnessConfig& cfg) {
  const Logic& L = *cfg.logic;
  VerificationReport rep = baseReport(cfg, "demonstrator");
  rep.notes.push_back(
      "guided Pi2 instances of the transfer principle; witness search in the "
      "Boolean block fragment at rank+1");
  std::vector<const CorpusItem*> items;
  for (const CorpusItem& it : vettedCorpus())
    if (it.pi2) items.push_back(&it);

  const long tasks = static_cast<long>(cfg.impls.size() * items.size());
  auto parts = mapIndex<Partial>(cfg.exec, tasks, [&](long t) {
    Partial p;
    const ImplSpec& spec = cfg.impls[t / items.size()];
    const CorpusItem& item = *items[t % items.size()];
    Universe universe(L);
    Fragment frag =
        buildFragment(universe, cfg.rankBound, cfg.domCap, cfg.nodeBudget);
    for (NodeId u : frag.nodes) {
      ++p.checked;
      const TransferTrace tr = transferDemonstrator(
          universe, spec, item, u, cfg.rankBound, cfg.domCap, cfg.nodeBudget);
      if (!tr.ok)
        p.fail(item.name + " at u=" + universe.toString(u) + ": " +
               tr.outcome);
    }
    return p;
  });
  mergeParts(rep, parts);
  return rep;
}

// --- dispatch ----------------------------------------------------------------------------------

std::vector<std::string> suiteNames() {
  return {"commutator",  "implication", "deduction",
          "equality",    "ee",          "absoluteness",
          "restriction", "range",       "transfer",
          "demorgan-bounded", "maximum", "demonstrator"};
}

std::vector<VerificationReport> runSuites(const HarnessConfig& cfg,
                                          const std::string& suiteName) {
  std::vector<VerificationReport> out;
  auto want = [&](const char* name) {
    return suiteName == "all" || suiteName == name;
  };
  if (want("commutator")) out.push_back(commutatorEquivalenceSuite(cfg));
  if (want("implication")) out.push_back(implicationSuite(cfg));
  if (want("deduction")) out.push_back(deductionSuite(cfg));
  if (want("equality")) out.push_back(equalitySuite(cfg));
  if (want("ee")) out.push_back(elementaryEquivalenceSuite(cfg));
  if (want("absoluteness")) out.push_back(absolutenessSuite(cfg));
  if (want("restriction")) out.push_back(restrictionSuite(cfg));
  if (want("range")) out.push_back(rangeCommutationSuite(cfg));
  if (want("transfer")) out.push_back(transferCorollarySuite(cfg));
  if (want("demorgan-bounded")) out.push_back(deMorganBoundedSuite(cfg));
  if (want("maximum")) out.push_back(booleanMaximumSuite(cfg));
  if (want("demonstrator")) out.push_back(demonstratorSuite(cfg));
  if (out.empty())
    throw std::invalid_argument("unknown suite '" + suiteName + "'");
  return out;
}

}  // namespace omset
