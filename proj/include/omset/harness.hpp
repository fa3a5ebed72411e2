#pragma once

#include <cstdint>

#include "omset/corpus.hpp"
#include "omset/eval.hpp"
#include "omset/generators.hpp"
#include "omset/report.hpp"
#include "omset/sweep.hpp"

namespace omset {

// Shared configuration for the verification suites over one logic.
struct HarnessConfig {
  const Logic* logic = nullptr;
  std::string logicName;
  std::vector<ImplSpec> impls = {ImplSpec::poly(3)};
  int rankBound = 2;
  int domCap = 2;
  std::uint64_t seed = 0;
  long nodeBudget = 1000000;
  // 0 = enumerate every node tuple; otherwise suites draw this many seeded
  // samples per schedule item once the full product would exceed it (the
  // rank-3 configurations are checked sampled, rank 2 exhaustively).
  long tupleCap = 0;
  Exec exec = Exec::Parallel;
};

// --- commutator / implication algebra sweeps -------------------------------

// Four-way commutator equality: exhaustive over |A| <= maxExhaustive, plus
// seeded random |A| = 3 samples.
VerificationReport commutatorEquivalenceSuite(const HarnessConfig& cfg,
                                              int maxExhaustive = 2,
                                              int seededTriples = 500);

// Axiom classification and the implication propositions for the six
// polynomials on the configured logic.
VerificationReport implicationSuite(const HarnessConfig& cfg);

// Deduction theorem for every configured implication.
VerificationReport deductionSuite(const HarnessConfig& cfg);

// --- universe / metatheorem suites ------------------------------------------

// [[u=u]]=1, [[u=v]]=[[v=u]], u(x) <= [[x in u]] over the whole fragment.
// Precondition gate for everything below.
VerificationReport equalitySuite(const HarnessConfig& cfg);

// Delta0 schedule vs the HF oracle on check embeddings.
VerificationReport elementaryEquivalenceSuite(const HarnessConfig& cfg,
                                              int maxHsize = 4);

// Truth values computed inside canonical sublogics agree elementwise with
// the full-logic values.
VerificationReport absolutenessSuite(const HarnessConfig& cfg);

// [[phi(u|p)]] ^ p = [[phi(u)]] ^ p plus the atom-level identities.
VerificationReport restrictionSuite(const HarnessConfig& cfg);

// [[phi(u)]] in Q(u); p commutes with plain and restricted values.
VerificationReport rangeCommutationSuite(const HarnessConfig& cfg);

// com(u1..un) <= [[phi(u1..un)]] over the ZFC corpus.
VerificationReport transferCorollarySuite(const HarnessConfig& cfg);

// Bounded de Morgan dichotomy: poly0 satisfies law (iii) on the schedule;
// every other configured implication must admit a counterexample.
VerificationReport deMorganBoundedSuite(const HarnessConfig& cfg);

// Boolean maximum principle: the fragment supremum of a Sigma1 schedule is
// attained by a fragment witness (Boolean logics only).
VerificationReport booleanMaximumSuite(const HarnessConfig& cfg);

struct MaximumWitness {
  bool attained = false;
  NodeId witness = -1;
  Elem supremum = -1;
};

// Searches the fragment for a node attaining [[exists x phi(x)]].
MaximumWitness booleanMaximumWitness(EvalContext& ctx, const FormulaPtr& phi,
                                     const std::string& var);

// --- guided Pi2 transfer demonstrator ---------------------------------------

struct TransferTrace {
  bool ok = false;
  std::string outcome;  // "ok" or "witness-beyond-fragment"
  Elem p = -1;          // com(u)
  Subset booleanBlock = 0;
  NodeId uRestricted = -1;
  NodeId witness = -1;  // in the parent universe
  NodeId padded = -1;   // witness padded so its support is the whole block
  std::vector<std::string> steps;
};

// Follows the transfer-principle proof for one Pi2 item and one node:
// restricts u into a maximal Boolean block, finds a witness in the block
// fragment (built one rank deeper), pads it, and verifies the inequality
// chain ending in p <= [[com(u,v) and psi(u,v)]]-form.
TransferTrace transferDemonstrator(Universe& universe, const ImplSpec& spec,
                                   const CorpusItem& item, NodeId u,
                                   int rankBound, int domCap,
                                   long nodeBudget = 1000000);

// Both Pi2 corpus items over every fragment node.
VerificationReport demonstratorSuite(const HarnessConfig& cfg);

// Name -> suite dispatch used by the CLI; name "all" runs everything.
std::vector<VerificationReport> runSuites(const HarnessConfig& cfg,
                                          const std::string& suiteName);
std::vector<std::string> suiteNames();

}  // namespace omset
