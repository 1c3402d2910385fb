#ifndef UALG_FINGERPRINT_HPP_
#define UALG_FINGERPRINT_HPP_

#include <array>
#include <vector>

#include "ualg/algebra.hpp"

namespace ualg {

// Seventeen per-element statistics of a magma, preserved by every
// automorphism.  With x^k = x^(k-1) * x (left association):
//
//   v1  smallest exponent k > 1 whose power recurs later in the sequence
//   v2  #y with p*y = y            v3  #y with y*p = y
//   v4  #y with (p*y)*p = p
//   v5  distinct entries in row p  v6  distinct entries in column p
//   v7  1 iff p*p = p
//   v8  #y with y*p idempotent     v9  #y with p*y idempotent
//   v10 1 iff p*(p*p) = (p*p)*p
//   v11 #y with p*y = y*p          v12 #s with (s*s)*p = p*(s*s)
//   v13 #s with s*s = p            v14 #s with p*(p*s) = (p*p)*s
//   v15 #multisets {x,y} with x*y = y*x = p
//   v16 #t such that e*t = p and t*f = p for some idempotents e, f
//   v17 #t such that x*y = p and y*x = t for some x, y
using InvariantVector = std::array<int, 17>;

InvariantVector invariant_vector(const BinaryTable& m, int p);
std::vector<InvariantVector> all_invariant_vectors(const BinaryTable& m);

// Elements grouped by exact vector equality; blocks ordered by vector.
struct ElementBlocks {
  std::vector<InvariantVector> vectors;    // per element, index i-1
  std::vector<std::vector<int>> blocks;    // each ascending
  std::vector<int> block_of;               // element i-1 -> block index
};

ElementBlocks element_blocks(const BinaryTable& m);

// Greedy generating set: repeatedly add the candidate that grows the
// generated submagma most, ties broken by smaller invariant block then by
// smaller element, until the submagma is the whole carrier.
std::vector<int> efficient_generating_set(const BinaryTable& m,
                                          const ElementBlocks& blocks);

// Automorphism-invariant per-element fingerprint for algebras without
// binary operations: orbit size under each unary op followed by the
// preimage count under each unary op.
std::vector<std::vector<int>> unary_fingerprints(const Algebra& a);

}  // namespace ualg

#endif  // UALG_FINGERPRINT_HPP_
