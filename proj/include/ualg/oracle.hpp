#ifndef UALG_ORACLE_HPP_
#define UALG_ORACLE_HPP_

#include <utility>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/mapping.hpp"
#include "ualg/partition.hpp"

namespace ualg {

// Brute-force reference implementations.  Everything here quantifies
// directly over the defining conditions, so outputs are definitionally
// correct and serve as the ground truth for the main algorithms on small
// inputs.  The oracles are compiled into the library so that the CLI's
// --check mode and the test suites share one binary.

// All set partitions of {1..n}, normalized, in generation order.
std::vector<Partition> all_set_partitions(int n);

// Every partition of the carrier that all operations respect.  n <= 7.
std::vector<Partition> oracle_congruences(const Algebra& a);

// Meet of all congruences relating x and y.  n <= 7.
Partition oracle_principal_congruence(const Algebra& a, int x, int y);

enum class MapKind { endomorphism, monomorphism, epimorphism, automorphism };

// Filters all size(b)^size(a) total maps by the homomorphism law and the
// kind predicate.  size(b)^size(a) <= 10^7.
std::vector<Mapping> oracle_maps(const Algebra& a, const Algebra& b,
                                 MapKind kind);

// All non-empty closed subsets by filtering every subset.  n <= 16.
std::vector<std::vector<int>> oracle_subuniverses(const Algebra& a);

// Directly-reducible pairs computed from the oracle congruence list.
std::vector<std::pair<Partition, Partition>> oracle_directly_reducible(
    const Algebra& a);

// Componentwise direct product; element (x, y) gets index
// (x-1)*size(b) + y.  Used to verify decomposition witnesses.
Algebra direct_product(const Algebra& a, const Algebra& b);

// Representatives of all associative tables of size n up to isomorphism
// and anti-isomorphism (relabelling orbits plus transposition), each as a
// single-binary-op algebra, sorted by table.  n <= 3.
std::vector<Algebra> enumerate_semigroups(int n, int threads = 1);

}  // namespace ualg

#endif  // UALG_ORACLE_HPP_
