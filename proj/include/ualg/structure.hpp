#ifndef UALG_STRUCTURE_HPP_
#define UALG_STRUCTURE_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/partition.hpp"

namespace ualg {

// Smallest subset closed under all operations of a that contains
// base (assumed closed) and elem.  Returns a sorted element list.
std::vector<int> closure(const Algebra& a, const std::vector<int>& base,
                         int elem);

// All non-empty closed subsets, as sorted element lists in lexicographic
// order.  Layer expansion only tries one element per orbit of the
// automorphism group and re-expands each layer by applying the group.
std::vector<std::vector<int>> all_subuniverses(const Algebra& a);

// Certifies that a2 divides a1: a subuniverse of a1 together with a
// congruence of the induced subalgebra whose quotient is isomorphic to a2.
struct DivisorWitness {
  std::vector<int> subuniverse;
  Partition congruence;  // over the subalgebra's relabelled carrier

  friend bool operator==(const DivisorWitness&, const DivisorWitness&) =
      default;
};

std::vector<DivisorWitness> all_divisor_witnesses(const Algebra& a1,
                                                  const Algebra& a2);
bool exists_divisor(const Algebra& a1, const Algebra& a2);
std::optional<DivisorWitness> one_divisor(const Algebra& a1,
                                          const Algebra& a2);

// Unordered pairs of nontrivial congruences with trivial meet whose block
// counts multiply to the carrier size; each pair certifies a direct
// decomposition and is listed once, components in canonical order.
std::vector<std::pair<Partition, Partition>> directly_reducible(
    const Algebra& a);
bool exists_directly_reducible(const Algebra& a);
std::optional<std::pair<Partition, Partition>> one_directly_reducible(
    const Algebra& a);

}  // namespace ualg

#endif  // UALG_STRUCTURE_HPP_
