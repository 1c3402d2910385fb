#ifndef UALG_ALGEBRA_HPP_
#define UALG_ALGEBRA_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "ualg/mapping.hpp"
#include "ualg/partition.hpp"

namespace ualg {

using UnaryTable = std::vector<int>;
using BinaryTable = std::vector<std::vector<int>>;

// A finite algebra with binary and unary operations given by tables.
// The carrier is {1..size} and all table entries are 1-based.  Operation
// order is significant: it is the implicit index scheme used whenever two
// algebras are compared or mapped into each other.
struct Algebra {
  int size = 0;
  std::vector<BinaryTable> binary;
  std::vector<UnaryTable> unary;

  int num_ops() const {
    return static_cast<int>(binary.size() + unary.size());
  }

  friend bool operator==(const Algebra&, const Algebra&) = default;
  friend auto operator<=>(const Algebra&, const Algebra&) = default;
};

// Throws EntryOutOfRange or ShapeMismatch when an invariant fails.
void validate_algebra(const Algebra& a);

// True when a and b have the same number of binary and of unary
// operations; carrier sizes are irrelevant.
bool compatible(const Algebra& a, const Algebra& b);

// The algebra's own unary tables followed by, per binary table f, the row
// maps y -> f(x, y) for every x and then the column maps y -> f(y, x),
// with exact duplicates removed preserving first occurrence.
std::vector<UnaryTable> binary_to_unary(const Algebra& a);

struct QuotientResult {
  Algebra quotient;
  Mapping map_to_quotient;
};

// Quotient by a congruence: block roots (smallest elements) relabelled
// 1..q in ascending order, tables rewritten through the relabelling.
// Throws NotACongruence when some operation does not respect the blocks.
QuotientResult quotient_algebra(const Algebra& a, const Partition& c);

struct SubalgebraResult {
  Algebra algebra;
  std::vector<int> elements;  // ascending; position k-1 carries new label k
};

// Restriction of a to a closed subset, relabelled to 1..|s| by ascending
// element order.  Throws NotClosed when an operation leaves the subset.
SubalgebraResult subalgebra_from_universe(const Algebra& a,
                                          const std::vector<int>& s);

// Rees matrix semigroup over the cyclic group of the given order with a
// cols x rows sandwich matrix.  Carrier enumerates the triples (i, g, l)
// lexicographically; the product is (i,g,l)(j,h,m) = (i, g*p(l,j)*h, m).
// A missing sandwich is filled pseudo-randomly from the seed.
Algebra rees_matrix_semigroup(
    int group_order, int rows, int cols,
    const std::optional<BinaryTable>& sandwich = std::nullopt,
    std::uint32_t seed = 1);

}  // namespace ualg

#endif  // UALG_ALGEBRA_HPP_
