#pragma once

#include <iosfwd>
#include <string>

#include "omset/lattice.hpp"

namespace omset {

// Lattice file format (JSON):
//   {"n": int, "names": [string...], "leq": [[i,j],...], "ortho": [int...]}
// Reflexive leq pairs may be omitted; reading normalizes to the
// reflexive-transitive order and validates all axioms.
RawLattice readRawLattice(std::istream& in);
RawLattice readRawLatticeFile(const std::string& path);

Logic readLogicFile(const std::string& path);

std::string writeLattice(const Logic& logic);

}  // namespace omset
