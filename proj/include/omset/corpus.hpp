#pragma once

#include <string>
#include <vector>

#include "omset/formula.hpp"
#include "omset/hf.hpp"

namespace omset {

// A ZFC-provable template over free variables x, y, z. Delta0 items feed the
// transfer corollary; the two Pi2 items feed the guided demonstrator, which
// works on their Delta0 matrix.
struct CorpusItem {
  std::string name;
  std::string text;        // source form of the Delta0 template / matrix
  FormulaPtr formula;      // parsed template (Delta0)
  int arity = 0;
  bool pi2 = false;        // item is forall x exists y <matrix>
  std::string provenance;  // why the universal closure is a ZFC theorem
};

// The built-in corpus. Every item is vetted against the HF oracle before any
// lattice suite consumes it (see vetCorpus).
const std::vector<CorpusItem>& corpus();

// corpus(), gated: runs the HF vetting once and throws std::logic_error if
// any item fails. The lattice suites go through this accessor.
const std::vector<CorpusItem>& vettedCorpus();

// Classical two-valued evaluation over hereditarily finite sets; the
// independent ground truth for the schedules. Rejects com-atoms and
// unbounded quantifiers (callers quantify explicitly over an HF universe).
bool hfEval(const FormulaPtr& f,
            const std::vector<std::pair<std::string, Hf>>& env);

// Checks every corpus item on all HF tuples (hereditary size <= maxHsize for
// Delta0 items; Pi2 items get a witness search over the size-6 universe).
// Returns the number of failing instances (0 expected).
long vetCorpus(int maxHsize = 4);

// Delta0 formula templates (theorems and non-theorems alike) shared by the
// elementary-equivalence, absoluteness and restriction schedules.
struct ScheduleItem {
  std::string name;
  std::string text;
  FormulaPtr formula;
  int arity;
  bool usesCommutatorAtom;
};

const std::vector<ScheduleItem>& delta0Schedule();

}  // namespace omset
