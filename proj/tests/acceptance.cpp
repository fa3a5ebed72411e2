// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its thresholds in code; timings are printed
// for reference against the stated runtime targets.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "omset/harness.hpp"
#include "omset/matrixlogic.hpp"

using namespace omset;

namespace {

int failures = 0;

void criterion(int number, const std::string& label,
               const std::function<bool(std::string&)>& run) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = run(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL",
              number, label.c_str(), secs, detail.empty() ? "" : " -- ",
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

HarnessConfig configFor(const NamedLogic& nl, std::vector<ImplSpec> impls,
                        int rank = 2) {
  HarnessConfig cfg;
  cfg.logic = &nl.logic;
  cfg.logicName = nl.name;
  cfg.impls = std::move(impls);
  cfg.rankBound = rank;
  cfg.exec = Exec::Parallel;
  return cfg;
}

std::vector<ImplSpec> allPolys() {
  std::vector<ImplSpec> out;
  for (int j = 0; j < 6; ++j) out.push_back(ImplSpec::poly(j));
  return out;
}

bool reportOk(const VerificationReport& rep, std::string& detail) {
  if (rep.ok()) return true;
  detail = rep.suite + " on " + (rep.params.empty() ? "?" : rep.params[0].second) +
           ": " + std::to_string(rep.failed) + " failures";
  if (!rep.witnesses.empty()) detail += "; first: " + rep.witnesses.front();
  return false;
}

}  // namespace

int main() {
  const std::vector<NamedLogic> sweep = sweepLogics();
  std::printf("acceptance sweep: 7 logics, fragments are rank-bounded "
              "truncations (unbounded-quantifier results are "
              "fragment-relative by construction)\n");

  criterion(1, "commutator four-way equality, |A|<=2 exhaustive + 500 seeded "
               "triples, every sweep logic",
            [&](std::string& detail) {
              for (const NamedLogic& nl : sweep) {
                const VerificationReport rep = commutatorEquivalenceSuite(
                    configFor(nl, {ImplSpec::poly(3)}), 2, 500);
                if (!reportOk(rep, detail)) return false;
              }
              return true;
            });

  criterion(2, "Kotas classification on MO2: values at (a,b), (E), (MP), (LE)",
            [&](std::string& detail) {
              const Logic mo2 = moLattice(2);
              const Elem a = 2, ao = 3, b = 4, bo = 5;
              const Elem expected[6] = {1, a, bo, ao, b, 0};
              for (int j = 0; j < 6; ++j)
                if (kotasPoly(mo2, j, a, b) != expected[j]) {
                  detail = "poly" + std::to_string(j) + " value mismatch";
                  return false;
                }
              for (int j = 0; j < 6; ++j)
                for (int k = j + 1; k < 6; ++k)
                  if (kotasPoly(mo2, j, a, b) == kotasPoly(mo2, k, a, b)) {
                    detail = "values not pairwise distinct";
                    return false;
                  }
              for (int j = 0; j < 6; ++j) {
                const AxiomReport ax = checkAxioms(mo2, ImplSpec::poly(j));
                if (ax.e != (j >= 1)) {
                  detail = "(E) wrong for poly" + std::to_string(j);
                  return false;
                }
                if (ax.mp != (j >= 2)) {
                  detail = "(MP) wrong for poly" + std::to_string(j);
                  return false;
                }
                if (ax.le != (j >= 1)) {
                  detail = "(LE) wrong for poly" + std::to_string(j);
                  return false;
                }
              }
              return true;
            });

  criterion(3, "deduction theorem: all pairs, all X, poly0..5, every sweep "
               "logic",
            [&](std::string& detail) {
              for (const NamedLogic& nl : sweep) {
                const VerificationReport rep =
                    deductionSuite(configFor(nl, allPolys()));
                if (!reportOk(rep, detail)) return false;
              }
              return true;
            });

  criterion(4, "twisted relations (i)-(x) within 1e-9, 200 samples per dim "
               "2..4; witness inner products to 1e-12 at four angles",
            [&](std::string& detail) {
              using namespace omset::matrix;
              const TwistedRelationsReport rep =
                  verifyTwistedRelations({2, 3, 4}, 200, 0xC0FFEE, true);
              if (!rep.ok()) {
                detail = std::to_string(rep.failures.size()) +
                         " identity failures, worst residual " +
                         std::to_string(rep.worstResidual);
                return false;
              }
              for (double theta :
                   {M_PI / 4, M_PI / 2, M_PI, 3 * M_PI / 2}) {
                const WitnessReport w = nonPolynomialWitness(theta);
                const std::complex<double> ip =
                    (1.0 + 3.0 * std::exp(std::complex<double>(0, theta))) /
                    4.0;
                if (!w.ok || std::abs(w.ipOnePhi - std::sqrt(3.0) / 2.0) >
                                 1e-12 ||
                    std::abs(w.ipPhiPhiTheta - ip) > 1e-12) {
                  detail = "witness failed at theta=" + std::to_string(theta);
                  return false;
                }
              }
              return true;
            });

  criterion(5, "equality/atom semantics: rank 2 everywhere, rank 3 on "
               "|Q|<=4, poly0..5",
            [&](std::string& detail) {
              for (const NamedLogic& nl : sweep) {
                VerificationReport rep =
                    equalitySuite(configFor(nl, allPolys(), 2));
                if (!reportOk(rep, detail)) return false;
                if (nl.logic.size() <= 4) {
                  rep = equalitySuite(configFor(nl, allPolys(), 3));
                  if (!reportOk(rep, detail)) return false;
                }
              }
              return true;
            });

  criterion(6, "Delta0 absoluteness and restriction, rank 2 exhaustive over "
               "the schedule, poly0..5",
            [&](std::string& detail) {
              for (const NamedLogic& nl : sweep) {
                VerificationReport rep =
                    absolutenessSuite(configFor(nl, allPolys()));
                if (!reportOk(rep, detail)) return false;
                rep = restrictionSuite(configFor(nl, allPolys()));
                if (!reportOk(rep, detail)) return false;
              }
              return true;
            });

  criterion(7, "Delta0 elementary equivalence vs the HF oracle, full "
               "schedule, every sweep logic",
            [&](std::string& detail) {
              for (const NamedLogic& nl : sweep) {
                const VerificationReport rep =
                    elementaryEquivalenceSuite(configFor(nl, allPolys()));
                if (!reportOk(rep, detail)) return false;
              }
              return true;
            });

  criterion(8, "Delta0 transfer corollary: corpus x tuples x poly0..5 x "
               "every sweep logic, rank 2",
            [&](std::string& detail) {
              for (const NamedLogic& nl : sweep) {
                const VerificationReport rep =
                    transferCorollarySuite(configFor(nl, allPolys()));
                if (!reportOk(rep, detail)) return false;
              }
              return true;
            });

  criterion(9, "bounded de Morgan dichotomy: poly0 law holds everywhere; "
               "poly3 counterexample exists on MO2",
            [&](std::string& detail) {
              for (const NamedLogic& nl : sweep) {
                const VerificationReport rep =
                    deMorganBoundedSuite(configFor(nl, allPolys()));
                if (!reportOk(rep, detail)) return false;
              }
              // the MO2/poly3 counterexample, asserted directly
              const Logic mo2 = moLattice(2);
              Universe u(mo2);
              Fragment frag = buildFragment(u, 2, 2);
              EvalContext ctx(u, ImplSpec::poly(3), &frag);
              const DeMorganReport rep = deMorganChecks(ctx);
              if (rep.boundedFailed == 0) {
                detail = "no counterexample found for poly3 on MO2";
                return false;
              }
              return true;
            });

  criterion(10, "Pi2 transfer demonstrator: both corpus items, every sweep "
                "logic, rank 2 (witness search in the Boolean block)",
            [&](std::string& detail) {
              for (const NamedLogic& nl : sweep) {
                const VerificationReport rep =
                    demonstratorSuite(configFor(nl, allPolys()));
                if (!reportOk(rep, detail)) return false;
              }
              return true;
            });

  std::printf("%d/10 criteria passed\n", 10 - failures);
  if (failures == 0)
    std::printf("note: criteria 8 and 10 are the sound finite instances of "
                "the transfer principle; the unrestricted statement is not "
                "reproducible over truncated fragments\n");
  return failures == 0 ? 0 : 1;
}
