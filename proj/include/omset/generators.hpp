#pragma once

#include "omset/lattice.hpp"

namespace omset {

// Standard constructions used throughout the suites. Every result passes
// Logic::fromRaw validation.

// Power set of k atoms; 2^k elements named by their atom letters ("0", "a",
// "b", "ab", ..., "1").
Logic booleanAlgebra(int k);

// MO_k: 0, 1 and k incomparable atom/co-atom pairs ("a", "a'", ...). MO2 is
// the Chinese lantern.
Logic moLattice(int k);

// Componentwise order and ortho; names "(x,y)".
Logic product(const Logic& a, const Logic& b);

// Glues the two lattices at shared 0 and 1; proper elements of different
// summands are incomparable. Names get "L." / "R." prefixes.
Logic horizontalSum(const Logic& a, const Logic& b);

// Parses a generator spec: "boolean:k", "mo:k", "prod:<spec>,<spec>",
// "hsum:<spec>,<spec>". Throws std::invalid_argument on bad syntax.
Logic fromGenSpec(const std::string& spec);

struct NamedLogic {
  std::string name;
  Logic logic;
};

// The fixed family the verification suites sweep over.
std::vector<NamedLogic> sweepLogics();

}  // namespace omset
