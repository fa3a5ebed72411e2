#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "omset/commutator.hpp"
#include "omset/harness.hpp"
#include "omset/lattice_io.hpp"
#include "omset/matrixlogic.hpp"

namespace {

using namespace omset;

struct CommonOpts {
  std::string latticeFile;
  std::string genSpec;
  std::string impl = "sasaki";
  int rank = 2;
  int domCap = 2;
  std::uint64_t seed = 0;
  std::string format = "text";
  long budget = 0;  // 0: use OMSET_BUDGET or the default
  std::string exec = "omp";

  long resolvedBudget() const {
    if (budget > 0) return budget;
    if (const char* env = std::getenv("OMSET_BUDGET")) return std::atol(env);
    return 1000000;
  }

  Logic loadLogic() const {
    if (!latticeFile.empty() && !genSpec.empty())
      throw CLI::ValidationError("--lattice and --gen are mutually exclusive");
    if (!latticeFile.empty()) return readLogicFile(latticeFile);
    if (!genSpec.empty()) return fromGenSpec(genSpec);
    throw CLI::ValidationError("one of --lattice or --gen is required");
  }

  std::string logicLabel() const {
    return latticeFile.empty() ? genSpec : latticeFile;
  }
};

void addCommon(CLI::App* cmd, CommonOpts& o, bool needLogic = true) {
  if (needLogic) {
    cmd->add_option("--lattice", o.latticeFile, "lattice JSON file");
    cmd->add_option("--gen", o.genSpec,
                    "generator spec: boolean:k | mo:k | prod:A,B | hsum:A,B");
  }
  cmd->add_option("--impl", o.impl,
                  "implication: poly0..poly5 | sasaki | table:<file>");
  cmd->add_option("--rank", o.rank, "fragment rank bound")->check(CLI::Range(1, 4));
  cmd->add_option("--dom-cap", o.domCap, "children per node cap")
      ->check(CLI::Range(0, 4));
  cmd->add_option("--seed", o.seed, "seed for sampled sweeps");
  cmd->add_option("--format", o.format, "output format: text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--budget", o.budget,
                  "node budget (default from OMSET_BUDGET or 1000000)");
  cmd->add_option("--exec", o.exec, "execution policy: serial | omp")
      ->check(CLI::IsMember({"serial", "omp"}));
}

int cmdLatticeCheck(const std::string& path, const std::string& format) {
  try {
    Logic logic = readLogicFile(path);
    if (format == "json") {
      std::cout << "{\"ok\": true, \"n\": " << logic.size() << "}\n";
    } else {
      std::cout << "ok: " << path << " is a logic with " << logic.size()
                << " elements (bottom " << logic.name(logic.bot()) << ", top "
                << logic.name(logic.top()) << ")\n";
    }
    return 0;
  } catch (const ValidationError& e) {
    std::cout << "invalid lattice: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmdImplTable(const CommonOpts& o) {
  Logic logic = o.loadLogic();
  ImplSpec spec = ImplSpec::parse(o.impl, logic);
  if (spec.kind == ImplSpec::Kind::Table) {
    const AxiomReport ax = checkAxioms(logic, spec);
    if (!ax.generalizedImplication()) {
      std::cout << "table rejected: fails (I1)/(I2)/(LB)\n";
      return 1;
    }
  }
  const int n = logic.size();
  size_t width = 2;
  for (Elem e = 0; e < n; ++e) width = std::max(width, logic.name(e).size());
  auto pad = [&](const std::string& s) {
    std::cout << s << std::string(width + 1 - s.size(), ' ');
  };
  pad("=>");
  for (Elem q = 0; q < n; ++q) pad(logic.name(q));
  std::cout << "\n";
  for (Elem p = 0; p < n; ++p) {
    pad(logic.name(p));
    for (Elem q = 0; q < n; ++q) pad(logic.name(implEval(logic, spec, p, q)));
    std::cout << "\n";
  }
  return 0;
}

int cmdEval(const CommonOpts& o, const std::vector<std::string>& lets,
            const std::string& formulaText) {
  Logic logic = o.loadLogic();
  ImplSpec spec = ImplSpec::parse(o.impl, logic);
  if (spec.kind == ImplSpec::Kind::Table &&
      !checkAxioms(logic, spec).generalizedImplication()) {
    std::cout << "implication table rejected: fails (I1)/(I2)/(LB)\n";
    return 1;
  }
  Universe universe(logic);
  Fragment frag = buildFragment(universe, o.rank, o.domCap, o.resolvedBudget());
  EvalContext ctx(universe, spec, &frag);

  // --let name=<literal> bindings become parser-visible constants by textual
  // substitution of the literal, resolved against the universe.
  std::string text = formulaText;
  std::vector<std::pair<std::string, NodeId>> env;
  for (const std::string& binding : lets) {
    const auto eq = binding.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--let expects name=<node literal>");
    env.push_back({binding.substr(0, eq),
                   parseNodeLiteral(universe, binding.substr(eq + 1))});
  }
  FormulaPtr f = parseFormula(text, &universe);
  f = instantiate(f, env);
  if (!freeVars(f).empty()) {
    std::cout << "error: free variables remain: ";
    for (const auto& v : freeVars(f)) std::cout << v << " ";
    std::cout << "\n";
    return 1;
  }
  const Elem value = ctx.truthValue(f);
  if (!isDelta0(f))
    std::cout << "note: fragment-relative (unbounded quantifiers range over "
                 "the rank-"
              << o.rank << " fragment, " << frag.nodes.size() << " nodes)\n";
  std::cout << logic.name(value) << "\n";
  return 0;
}

int cmdVerify(const CommonOpts& o, const std::string& suite, bool allImpls) {
  Logic logic = o.loadLogic();
  HarnessConfig cfg;
  cfg.logic = &logic;
  cfg.logicName = o.logicLabel();
  cfg.rankBound = o.rank;
  cfg.domCap = o.domCap;
  cfg.seed = o.seed;
  cfg.nodeBudget = o.resolvedBudget();
  cfg.exec = execFromString(o.exec);
  if (allImpls) {
    cfg.impls.clear();
    for (int j = 0; j <= 5; ++j) cfg.impls.push_back(ImplSpec::poly(j));
  } else {
    const ImplSpec spec = ImplSpec::parse(o.impl, logic);
    if (spec.kind == ImplSpec::Kind::Table &&
        !checkAxioms(logic, spec).generalizedImplication()) {
      std::cout << "implication table rejected: fails (I1)/(I2)/(LB)\n";
      return 1;
    }
    cfg.impls = {spec};
  }
  const std::vector<VerificationReport> reports = runSuites(cfg, suite);
  std::cout << (o.format == "json" ? reportsToJson(reports)
                                   : reportsToText(reports));
  for (const auto& r : reports)
    if (!r.ok()) return 1;
  return 0;
}

int cmdMatrix(double theta, int j, int i, int dim, std::uint64_t seed,
              int samples, bool relations, const std::string& format,
              const std::string& exec, const std::string& dumpCsv) {
  using namespace omset::matrix;
  if (relations) {
    std::vector<int> dims = dim > 0 ? std::vector<int>{dim}
                                    : std::vector<int>{2, 3, 4};
    const TwistedRelationsReport rep = verifyTwistedRelations(
        dims, samples, seed, execFromString(exec) == Exec::Parallel);
    if (format == "json") {
      std::cout << "{\"suite\": \"twisted-relations\", \"checked\": "
                << rep.checked << ", \"failed\": " << rep.failures.size()
                << ", \"worstResidual\": " << rep.worstResidual << "}\n";
    } else {
      std::cout << "twisted relations: " << (rep.ok() ? "PASS" : "FAIL")
                << " (" << rep.checked << " identities, worst residual "
                << rep.worstResidual << ")\n";
      for (const auto& f : rep.failures)
        std::cout << "  dim " << f.dim << " sample " << f.sampleIndex << " "
                  << f.relation << " residual " << f.residual << "\n";
    }
    return rep.ok() ? 0 : 1;
  }
  try {
    const WitnessReport w = nonPolynomialWitness(theta);
    std::cout << w.summary() << "\n";
    std::cout << "twisted value (j=" << j << ", i=" << i
              << ") differs from all six subalgebra elements\n";
    if (!dumpCsv.empty()) {
      std::ofstream out(dumpCsv);
      out << matrixToCsv(w.result);
      std::cout << "witness matrix written to " << dumpCsv << "\n";
    }
    return w.ok ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cout << "rejected: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite orthomodular-lattice algebra and orthomodular-valued "
               "set-theory model checker"};
  app.require_subcommand(1);

  // lattice-check
  auto* latticeCheck =
      app.add_subcommand("lattice-check", "validate a lattice JSON file");
  std::string checkPath, checkFormat = "text";
  latticeCheck->add_option("file", checkPath, "lattice JSON file")->required();
  latticeCheck->add_option("--format", checkFormat, "text | json");

  // impl-table
  auto* implTable = app.add_subcommand(
      "impl-table", "print the full P => Q table for an implication");
  CommonOpts tableOpts;
  addCommon(implTable, tableOpts);

  // eval
  auto* evalCmd =
      app.add_subcommand("eval", "evaluate a sentence's truth value");
  CommonOpts evalOpts;
  std::vector<std::string> lets;
  std::string formulaText;
  addCommon(evalCmd, evalOpts);
  evalCmd->add_option("--let", lets,
                      "bind a name to a node literal (name={...} | "
                      "name=check({...}) | name=ub(e))");
  evalCmd->add_option("formula", formulaText, "sentence text")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run verification suites");
  CommonOpts verifyOpts;
  std::string suite = "all";
  bool allImpls = false;
  addCommon(verify, verifyOpts);
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_flag("--all-impls", allImpls, "run with poly0..poly5");

  // matrix
  auto* matrixCmd = app.add_subcommand(
      "matrix", "projection-lattice backend: witness and twisted relations");
  double theta = M_PI / 2;
  int mj = 1, mi = 1, mdim = 0, msamples = 200;
  std::uint64_t mseed = 0xC0FFEE;
  bool relations = false;
  std::string mformat = "text", mexec = "omp", dumpCsv;
  matrixCmd->add_option("--theta", theta, "twist angle in (0, 2*pi)");
  matrixCmd->add_option("--j", mj, "polynomial index")->check(CLI::Range(0, 5));
  matrixCmd->add_option("--i", mi, "twist side")->check(CLI::Range(0, 1));
  matrixCmd->add_option("--dim", mdim, "restrict relations sweep to one dim");
  matrixCmd->add_option("--seed", mseed, "sample seed");
  matrixCmd->add_option("--samples", msamples, "samples per dimension");
  matrixCmd->add_flag("--relations", relations,
                      "run the ten-identity sample sweep instead of the witness");
  matrixCmd->add_option("--format", mformat, "text | json");
  matrixCmd->add_option("--exec", mexec, "serial | omp");
  matrixCmd->add_option("--dump-csv", dumpCsv,
                        "write the witness matrix as re/im CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (latticeCheck->parsed()) return cmdLatticeCheck(checkPath, checkFormat);
    if (implTable->parsed()) return cmdImplTable(tableOpts);
    if (evalCmd->parsed()) return cmdEval(evalOpts, lets, formulaText);
    if (verify->parsed()) return cmdVerify(verifyOpts, suite, allImpls);
    if (matrixCmd->parsed())
      return cmdMatrix(theta, mj, mi, mdim, mseed, msamples, relations,
                       mformat, mexec, dumpCsv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
