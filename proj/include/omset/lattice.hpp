#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace omset {

// Carrier elements are indices into a Logic; subsets of the carrier are
// bitmasks. Carrier size is capped at 64 so a subset fits in one word.
using Elem = int;
using Subset = std::uint64_t;

inline constexpr int kMaxCarrier = 64;

constexpr bool subsetHas(Subset s, Elem e) { return (s >> e) & 1u; }
constexpr Subset subsetWith(Subset s, Elem e) { return s | (Subset{1} << e); }
inline int subsetSize(Subset s) { return __builtin_popcountll(s); }
constexpr Subset fullSubset(int n) {
  return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}

std::vector<Elem> subsetElems(Subset s);

struct RawLattice {
  int n = 0;
  std::vector<std::pair<int, int>> leqPairs;  // reflexive pairs may be omitted
  std::vector<int> ortho;
  std::vector<std::string> names;  // optional
};

// First violated axiom found while constructing a Logic, with a witness.
struct ValidationError : std::runtime_error {
  enum class Kind {
    BadDescription,   // sizes/indices inconsistent
    NotAPartialOrder, // antisymmetry broken
    NoMeet,           // pair without a unique glb (dually for lub)
    BadOrtho,         // not involutive/antitone or complement laws fail
    OrthomodularLaw,  // OM fails at (x, y) with x <= y
  };
  Kind kind;
  Elem x = -1, y = -1;
  ValidationError(Kind k, std::string msg, Elem a = -1, Elem b = -1)
      : std::runtime_error(std::move(msg)), kind(k), x(a), y(b) {}
};

// A finite complete orthomodular lattice. Immutable after construction; all
// queries are O(1) table lookups and safe to use concurrently.
class Logic {
 public:
  // Validates the description (order, meets/joins, ortho axioms, OM) and
  // builds the query tables. Throws ValidationError naming the first
  // violated axiom with a concrete witness.
  static Logic fromRaw(const RawLattice& raw);

  int size() const { return n_; }
  Elem bot() const { return bot_; }
  Elem top() const { return top_; }
  const std::string& name(Elem e) const { return names_[e]; }
  const std::vector<std::string>& names() const { return names_; }

  bool le(Elem a, Elem b) const { return subsetHas(up_[a], b); }
  Elem meet(Elem a, Elem b) const { return meet_[a * n_ + b]; }
  Elem join(Elem a, Elem b) const { return join_[a * n_ + b]; }
  Elem ocompl(Elem a) const { return ortho_[a]; }

  Elem bigMeet(Subset s) const;  // bigMeet({}) = 1
  Elem bigJoin(Subset s) const;  // bigJoin({}) = 0

  // Up-set {b : a <= b} and down-set {b : b <= a} as bitmasks.
  Subset upSet(Elem a) const { return up_[a]; }
  Subset downSet(Elem a) const { return down_[a]; }

  // P and Q commute iff P = (P^Q)v(P^Q').
  bool commutes(Elem p, Elem q) const { return subsetHas(comm_[p], q); }

  Subset commutant(Subset a) const;
  Subset sublogicGenerated(Subset a) const;  // A^{!!}
  Subset center(Subset a) const;             // A^{!} n A^{!!}
  Subset subalgebraGenerated(Subset a) const;  // meet/join/ortho closure

  bool isBoolean() const { return boolean_; }
  // True iff all pairs of s commute.
  bool isBooleanSubset(Subset s) const;

  // Smallest B with seed <= B = B^{!}, grown greedily by ascending element
  // index (deterministic). Throws std::invalid_argument if the seed is not
  // pairwise commuting.
  Subset maximalBooleanSublogicContaining(Subset seed) const;

  // All maximal Boolean sublogics, i.e. maximal cliques of the commutation
  // graph, in lexicographic bitmask order.
  std::vector<Subset> maximalBooleanSublogics() const;

  // {x in a : p <= x <= q}
  Subset interval(Elem p, Elem q, Subset a) const;

  // Subset closure under meet, join and ortho?
  bool isOpClosed(Subset s) const;

  std::string subsetToString(Subset s) const;

 private:
  Logic() = default;

  int n_ = 0;
  Elem bot_ = 0, top_ = 0;
  bool boolean_ = false;
  std::vector<Subset> up_, down_, comm_;
  std::vector<Elem> meet_, join_;
  std::vector<Elem> ortho_;
  std::vector<std::string> names_;
};

// A standalone Logic built from an op-closed subset, with the index maps
// between the two carriers. Used by the absoluteness and transfer suites.
struct SublogicView {
  Logic logic;
  std::vector<Elem> toSub;    // size of parent carrier, -1 outside
  std::vector<Elem> fromSub;  // size of sub carrier
};

SublogicView extractSublogic(const Logic& parent, Subset members);

}  // namespace omset
