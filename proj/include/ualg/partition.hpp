#ifndef UALG_PARTITION_HPP_
#define UALG_PARTITION_HPP_

#include <vector>

namespace ualg {

// A partition of {1..n} stored as a union-find forest in a length-n array.
// Entry for element i is negative when i is a block root (the absolute
// value is the block size) and otherwise holds the 1-based index of a
// parent node in the same block.
//
// A partition is *normalized* when every non-root points directly at its
// root and each root is the smallest element of its block.  Normalized
// partitions double as congruences everywhere in this library.
class Partition {
 public:
  Partition() = default;

  // Identity partition: n singleton blocks.
  explicit Partition(int n) : d_(static_cast<size_t>(n), -1) {}

  static Partition identity(int n) { return Partition(n); }
  static Partition single_block(int n);

  // Validates the forest invariants (termination, sizes summing to n).
  static Partition from_forest(std::vector<int> forest);
  static Partition from_blocks(const std::vector<std::vector<int>>& blocks,
                               int n);

  int size() const { return static_cast<int>(d_.size()); }

  // 1-based element access.
  int at(int i) const { return d_[static_cast<size_t>(i) - 1]; }
  void set(int i, int v) { d_[static_cast<size_t>(i) - 1] = v; }

  const std::vector<int>& forest() const { return d_; }

  // Blocks of a normalized copy, each ascending, ordered by least element.
  std::vector<std::vector<int>> blocks() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> d_;
};

// Root of i's block.  Also points i directly at the root so that later
// lookups walk a shallower tree.  Works on non-normalized partitions.
int root_block(int i, Partition& p);

// Merges the blocks of x and y; the root of the larger block survives
// (the second argument's root on ties).
void join_blocks(int x, int y, Partition& p);

int number_of_blocks(const Partition& p);

// Rewrites p in normalized form; block contents are unchanged.
void normalize(Partition& p);

// Accumulates the lattice join of p1 and p2 into p2 (finest common
// coarsening).  The result is generally not normalized.
void join_partitions(const Partition& p1, Partition& p2);

// Lattice meet: blocks are the non-empty pairwise block intersections.
// The result is normalized.
Partition meet_partitions(const Partition& p1, const Partition& p2);

// Entrywise comparison of normalized partitions: 0 when equal, -1 when
// p1 > p2, 1 when p1 < p2, decided by the first differing entry.
int compare(const Partition& p1, const Partition& p2);

// Refinement order on normalized partitions: true when every block of p1
// lies inside a single block of p2.
bool contained(const Partition& p1, const Partition& p2);

// Canonical ordering for sets of normalized partitions: a precedes b
// exactly when compare(a, b) == -1.
struct PartitionLess {
  bool operator()(const Partition& a, const Partition& b) const {
    return compare(a, b) == -1;
  }
};

}  // namespace ualg

#endif  // UALG_PARTITION_HPP_
