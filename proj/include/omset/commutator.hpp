#pragma once

#include "omset/lattice.hpp"

namespace omset {

// Commutator constructions on a finite logic. All take the generating set as
// a Subset bitmask and are pure queries over an immutable Logic.

// com(P,Q) = (P^Q) v (P^Q') v (P'^Q) v (P'^Q')
Elem marsdenCom(const Logic& L, Elem p, Elem q);

// com(F) = join over all sign maps F -> {id, ortho} of the signed meets.
// finiteCom({p,q}) == marsdenCom(p,q); finiteCom({}) == 1.
Elem finiteCom(const Logic& L, Subset f);

// S(A): the E in Z(A) with P1^E, P2^E commuting for all P1,P2 in A,
// computed via the characterization "P^E lands in Z(A) for every P in A".
Subset subcommutators(const Logic& L, Subset a);

// The commutator: join of S(A). For the empty set this evaluates to
// join(Z(Q)) = 1.
Elem commutator(const Logic& L, Subset a);

// Takeuti's construction: join of the E in A^{!} with the pairwise
// commuting-meets condition.
Elem takeutiCom(const Logic& L, Subset a);

// Pulmannova's construction: meet of finiteCom over all finite subsets of A.
// (Antitone in the subset, so on a finite A the meet equals finiteCom(A).)
// Enumerates all 2^|A| subsets; |A| <= 16 enforced.
Elem pulmannovaCom(const Logic& L, Subset a);

struct CommutatorReport {
  Elem viaSubcommutators;
  Elem viaTakeuti;
  Elem viaPulmannova;
  Elem viaPairwiseMeet;  // meet of marsdenCom over the generated subalgebra
  Subset subcommutatorSet;
  bool allEqual() const {
    return viaSubcommutators == viaTakeuti &&
           viaTakeuti == viaPulmannova && viaPulmannova == viaPairwiseMeet;
  }
};

// Computes all four routes; disagreement is reported, not thrown.
CommutatorReport verifyCommutatorEquivalence(const Logic& L, Subset a);

// X = (X ^ com(A)) v (X ^ com(A)') for X in the sublogic generated by A.
// Throws std::invalid_argument if x lies outside L(A).
std::pair<Elem, Elem> bnDecompose(const Logic& L, Subset a, Elem x);

// Checks Proposition-level structure around com(A): the lower interval
// [0,com]_{L(A)} is Boolean and x -> (x^com, x^com') is an order isomorphism
// onto the product of the two intervals; also com(A) membership in every
// maximal Boolean sublogic contained in A.
bool directProductCheck(const Logic& L, Subset a);

}  // namespace omset
