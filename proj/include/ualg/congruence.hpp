#ifndef UALG_CONGRUENCE_HPP_
#define UALG_CONGRUENCE_HPP_

#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/partition.hpp"

namespace ualg {

// Smallest congruence of a relating x and y, computed by pair propagation
// over the unary expansion of a's operations.  Normalized.
Partition principal_congruence(const Algebra& a, int x, int y);

// Deduplicated, canonically sorted principal congruences over all pairs
// x < y.  Pair computations are independent; `threads` workers may share
// them, the merge is deterministic.
std::vector<Partition> all_principal_congruences(const Algebra& a,
                                                 int threads = 1);

// Join closure of the principal congruences plus the identity congruence,
// deduplicated and canonically sorted.
std::vector<Partition> all_congruences(const Algebra& a, int threads = 1);

// True when a single congruence survives mutual-containment elimination
// over the principal congruences, i.e. there is a unique minimal
// nontrivial congruence below all others.  Throws SizeTooSmall for
// one-element algebras.
bool is_monolithic(const Algebra& a);

}  // namespace ualg

#endif  // UALG_CONGRUENCE_HPP_
