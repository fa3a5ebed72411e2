// Times the heavy verification sweeps serial vs OpenMP and prints the
// speedup table. Results must be identical between the two policies (the
// equality is asserted, not just timed).

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "omset/harness.hpp"
#include "omset/matrixlogic.hpp"

using namespace omset;

namespace {

double timeIt(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

HarnessConfig configFor(const Logic& L, const std::string& name, Exec exec,
                        int rank = 2) {
  HarnessConfig cfg;
  cfg.logic = &L;
  cfg.logicName = name;
  std::vector<ImplSpec> impls;
  for (int j = 0; j < 6; ++j) impls.push_back(ImplSpec::poly(j));
  cfg.impls = impls;
  cfg.rankBound = rank;
  cfg.exec = exec;
  return cfg;
}

void row(const std::string& label, const std::function<std::string(Exec)>& run) {
  std::string serialOut, parallelOut;
  const double serial = timeIt([&] { serialOut = run(Exec::Serial); });
  const double parallel = timeIt([&] { parallelOut = run(Exec::Parallel); });
  const bool same = serialOut == parallelOut;
  std::printf("%-38s %9.3fs %9.3fs %7.2fx  %s\n", label.c_str(), serial,
              parallel, serial / parallel, same ? "identical" : "MISMATCH");
  std::fflush(stdout);
}

}  // namespace

int main() {
  const Logic prod = fromGenSpec("prod:boolean:1,mo:2");
  const Logic mo3 = fromGenSpec("mo:3");
  const Logic b2 = fromGenSpec("boolean:2");

  std::printf("%-38s %10s %10s %8s  %s\n", "sweep", "serial", "omp", "speedup",
              "reports");

  row("commutator x2000 triples (12 elems)", [&](Exec e) {
    return commutatorEquivalenceSuite(configFor(prod, "prod:boolean:1,mo:2", e),
                                      2, 2000)
        .toJson();
  });
  row("restriction rank 2 (12 elems)", [&](Exec e) {
    return restrictionSuite(configFor(prod, "prod:boolean:1,mo:2", e)).toJson();
  });
  row("transfer corollary rank 2 (12 elems)", [&](Exec e) {
    return transferCorollarySuite(configFor(prod, "prod:boolean:1,mo:2", e))
        .toJson();
  });
  row("equality rank 3 (boolean:2)", [&](Exec e) {
    return equalitySuite(configFor(b2, "boolean:2", e, 3)).toJson();
  });
  row("demonstrator rank 2 (mo:3)", [&](Exec e) {
    return demonstratorSuite(configFor(mo3, "mo:3", e)).toJson();
  });
  row("twisted relations 200x{2,3,4}", [&](Exec e) {
    using namespace omset::matrix;
    const TwistedRelationsReport rep =
        verifyTwistedRelations({2, 3, 4}, 200, 0xC0FFEE, e == Exec::Parallel);
    return std::to_string(rep.checked) + "/" +
           std::to_string(rep.failures.size());
  });
  return 0;
}
