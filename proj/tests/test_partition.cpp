#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "ualg/error.hpp"
#include "ualg/oracle.hpp"
#include "ualg/partition.hpp"

using namespace ualg;

namespace {

Partition forest(std::vector<int> v) {
  return Partition::from_forest(std::move(v));
}

int sum_of_block_sizes(const Partition& p) {
  int total = 0;
  for (int v : p.forest()) {
    if (v < 0) {
      total += -v;
    }
  }
  return total;
}

}  // namespace

TEST_CASE("root_block returns the root and flattens the path") {
  Partition p = forest({-2, -1, -2, -1, 3, 1});
  CHECK(root_block(5, p) == 3);

  Partition id(3);
  CHECK(root_block(2, id) == 2);

  Partition chain = forest({-3, 1, 2});
  CHECK(root_block(3, chain) == 1);
  CHECK(chain.at(3) == 1);

  CHECK_THROWS_AS(root_block(0, p), IndexOutOfRange);
  CHECK_THROWS_AS(root_block(7, p), IndexOutOfRange);
}

TEST_CASE("join_blocks merges blocks, keeping the larger root") {
  Partition p(6);
  join_blocks(2, 2, p);
  CHECK(p == Partition(6));

  join_blocks(1, 6, p);
  join_blocks(3, 5, p);
  CHECK(number_of_blocks(p) == 4);
  normalize(p);
  CHECK(p.forest() == std::vector<int>{-2, -1, -2, -1, 3, 1});

  Partition q(4);
  join_blocks(1, 2, q);
  join_blocks(1, 3, q);
  int big_root = root_block(1, q);
  join_blocks(4, 2, q);
  CHECK(root_block(4, q) == big_root);
}

TEST_CASE("number_of_blocks counts negative entries") {
  CHECK(number_of_blocks(Partition(6)) == 6);
  CHECK(number_of_blocks(Partition::single_block(6)) == 1);
  CHECK(number_of_blocks(forest({-2, -1, -2, -1, 3, 1})) == 4);
}

TEST_CASE("normalize produces least-root shallow forests") {
  Partition p = forest({-3, 1, 2});
  normalize(p);
  CHECK(p.forest() == std::vector<int>{-3, 1, 1});
  normalize(p);
  CHECK(p.forest() == std::vector<int>{-3, 1, 1});

  // block {1,3,5} rooted at 3
  Partition q = forest({3, -1, -3, -1, 3});
  normalize(q);
  CHECK(q.forest() == std::vector<int>{-3, -1, 1, -1, 1});
}

TEST_CASE("join_partitions accumulates the lattice join") {
  Partition p = forest({-2, 1, -1, -3, 4, 4});
  Partition target(6);
  join_partitions(Partition(6), target);
  CHECK(target == Partition(6));

  Partition into = p;
  join_partitions(Partition::single_block(6), into);
  CHECK(number_of_blocks(into) == 1);

  Partition p1 = Partition::from_blocks({{1, 2}, {3}, {4}}, 4);
  Partition p2 = Partition::from_blocks({{2, 3}, {1}, {4}}, 4);
  join_partitions(p1, p2);
  normalize(p2);
  CHECK(p2 == Partition::from_blocks({{1, 2, 3}, {4}}, 4));

  Partition bad(3);
  CHECK_THROWS_AS(join_partitions(Partition(4), bad), LengthMismatch);
}

TEST_CASE("meet_partitions intersects blocks") {
  Partition p = Partition::from_blocks({{1, 2, 3}, {4}}, 4);
  CHECK(meet_partitions(p, Partition::single_block(4)) == p);
  CHECK(meet_partitions(p, Partition(4)) == Partition(4));
  Partition q = Partition::from_blocks({{1, 2}, {3, 4}}, 4);
  CHECK(meet_partitions(p, q) == Partition::from_blocks({{1, 2}, {3}, {4}}, 4));
}

TEST_CASE("compare orders normalized partitions by first difference") {
  Partition a = forest({-2, 1, -1});
  Partition b = forest({-1, -2, 2});
  CHECK(compare(a, a) == 0);
  CHECK(compare(a, b) == 1);
  CHECK(compare(b, a) == -1);
}

TEST_CASE("contained tests the refinement order") {
  Partition p = Partition::from_blocks({{1, 3}, {2}, {4}}, 4);
  CHECK(contained(Partition(4), p));
  CHECK(contained(p, Partition::single_block(4)));
  CHECK_FALSE(contained(forest({-2, 1, -1, -1}), forest({-1, -2, 2, -1})));
}

TEST_CASE("block list conversions round-trip the reference encodings") {
  struct Row {
    std::vector<std::vector<int>> blocks;
    std::vector<int> encoded;
  };
  const std::vector<Row> rows = {
      {{{1, 6}, {2}, {3, 5}, {4}}, {-2, -1, -2, -1, 3, 1}},
      {{{1, 3, 5}, {2, 6}, {4}}, {-3, -2, 1, -1, 1, 2}},
      {{{1, 2, 5, 6}, {3, 4}}, {-4, 1, -2, 3, 1, 1}},
  };
  for (const auto& row : rows) {
    Partition p = Partition::from_blocks(row.blocks, 6);
    CHECK(p.forest() == row.encoded);
    CHECK(forest(row.encoded).blocks() == row.blocks);
  }
}

TEST_CASE("from_forest rejects malformed arrays") {
  CHECK_THROWS_AS(forest({-2, -1, -1}), InvalidPartition);   // sizes sum to 4
  CHECK_THROWS_AS(forest({2, 1}), InvalidPartition);         // cycle
  CHECK_THROWS_AS(forest({0, -1}), InvalidPartition);        // zero entry
}

TEST_CASE("random forests keep their invariants under mutation") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 63);
    Partition p(n);
    for (int step = 0; step < n; ++step) {
      int x = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
      int y = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
      auto before = p.blocks();
      int r = root_block(x, p);
      CHECK(p.blocks() == before);  // only the tree shape may change
      CHECK(r == root_block(x, p));
      join_blocks(x, y, p);
      CHECK(root_block(x, p) == root_block(y, p));
      CHECK(sum_of_block_sizes(p) == n);
    }
    Partition q = p;
    normalize(q);
    Partition q2 = q;
    normalize(q2);
    CHECK(q == q2);
    CHECK(q.blocks() == p.blocks());
    CHECK(sum_of_block_sizes(q) == n);
  }
}

TEST_CASE("compare is a strict total order on the partitions of a 5-set") {
  auto parts = all_set_partitions(5);
  REQUIRE(parts.size() == 52);
  for (const auto& a : parts) {
    for (const auto& b : parts) {
      int ab = compare(a, b);
      CHECK(compare(b, a) == -ab);
      CHECK((ab == 0) == (a == b));
    }
  }
  // transitivity via sort consistency
  std::vector<Partition> sorted(parts.begin(), parts.end());
  std::sort(sorted.begin(), sorted.end(), PartitionLess{});
  for (size_t i = 0; i + 1 < sorted.size(); ++i) {
    CHECK(compare(sorted[i], sorted[i + 1]) == -1);
  }
}

TEST_CASE("join and meet are lattice operations on block sets") {
  auto parts = all_set_partitions(4);
  REQUIRE(parts.size() == 15);
  for (const auto& a : parts) {
    for (const auto& b : parts) {
      Partition j1 = b;
      join_partitions(a, j1);
      normalize(j1);
      Partition j2 = a;
      join_partitions(b, j2);
      normalize(j2);
      CHECK(j1 == j2);
      Partition m = meet_partitions(a, b);
      CHECK(meet_partitions(b, a) == m);
      CHECK(contained(m, a));
      CHECK(contained(a, j1));
    }
  }
}
