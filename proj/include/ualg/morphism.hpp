#ifndef UALG_MORPHISM_HPP_
#define UALG_MORPHISM_HPP_

#include <optional>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/mapping.hpp"

namespace ualg {

// True iff the total map f commutes with every indexed pair of operations.
bool is_homomorphism(const Mapping& f, const Algebra& a, const Algebra& b);

// All bijective self-homomorphisms of one multiplication table, found by
// DFS over generator images restricted to elements with equal invariant
// vectors.  Sorted lexicographically.
std::vector<Mapping> magma_automorphisms(const BinaryTable& m);

// Automorphisms of a full algebra: the magma automorphisms of the binary
// operations that also commute with every unary operation, intersected
// incrementally with an early exit once only the identity survives.
// Algebras without binary operations use a permutation search pruned by
// the unary fingerprint.  Throws NoOperations for algebras with no
// operations at all.
std::vector<Mapping> algebra_automorphisms(const Algebra& a);

// All endomorphisms by direct DFS over generator images, allowing
// non-injective assignments; partial maps are pruned only by
// homomorphism consistency.
std::vector<Mapping> classic_endomorphisms(const Algebra& a);

// All endomorphisms through the congruence lattice: for every nontrivial
// congruence, embed the quotient back into a and compose with the
// quotient map; the trivial congruence contributes the automorphisms.
std::vector<Mapping> congruence_endomorphisms(const Algebra& a);

inline constexpr int default_endo_size_threshold = 60;

// Dispatches to the classic search for small algebras and the congruence
// route above the size threshold.
std::vector<Mapping> endomorphisms(
    const Algebra& a, int classic_size_limit = default_endo_size_threshold);

// All injective homomorphisms a -> b.  Generator images are pruned by the
// invariant vectors; a candidate must agree exactly on the invariants an
// embedding preserves and dominate the counting invariants (equality on
// the full vector when the sizes match).
std::vector<Mapping> all_monomorphisms(const Algebra& a, const Algebra& b);
bool exists_monomorphism(const Algebra& a, const Algebra& b);
std::optional<Mapping> one_monomorphism(const Algebra& a, const Algebra& b);

// All surjective homomorphisms a -> b: for every congruence of a with
// block count equal to size(b) whose quotient is isomorphic to b, compose
// the quotient map with that isomorphism and every automorphism of b.
std::vector<Mapping> all_epimorphisms(const Algebra& a, const Algebra& b);
bool exists_epimorphism(const Algebra& a, const Algebra& b);
std::optional<Mapping> one_epimorphism(const Algebra& a, const Algebra& b);

// A witness isomorphism when the sizes agree and an injective
// homomorphism exists; nullopt otherwise.
std::optional<Mapping> are_isomorphic(const Algebra& a, const Algebra& b);

}  // namespace ualg

#endif  // UALG_MORPHISM_HPP_
