#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "ualg/fingerprint.hpp"
#include "ualg/oracle.hpp"
#include "ualg/structure.hpp"

using namespace ualg;
namespace fx = ualg::fixtures;

TEST_CASE("invariant_vector on forced examples") {
  // left zero: x*y = x
  const int n = 3;
  BinaryTable lz = fx::left_zero(n).binary[0];
  for (int p = 1; p <= n; ++p) {
    auto v = invariant_vector(lz, p);
    CHECK(v[6] == 1);      // idempotent
    CHECK(v[4] == 1);      // row is constant
    CHECK(v[5] == n);      // column hits every element
    CHECK(v[10] == 1);     // only p commutes with p
  }

  BinaryTable c4 = fx::cyclic_table(4);
  auto e = invariant_vector(c4, 1);
  CHECK(e[6] == 1);
  CHECK(e[1] == 4);
  CHECK(e[2] == 4);
  CHECK(e[12] == 2);  // square roots of the identity: itself and g^2

  BinaryTable constant(3, std::vector<int>(3, 1));
  CHECK(invariant_vector(constant, 1)[6] == 1);
  CHECK(invariant_vector(constant, 2)[6] == 0);
  CHECK(invariant_vector(constant, 1) != invariant_vector(constant, 2));
}

TEST_CASE("element_blocks groups equal vectors") {
  auto lz = element_blocks(fx::left_zero(3).binary[0]);
  REQUIRE(lz.blocks.size() == 1);
  CHECK(lz.blocks[0] == std::vector<int>{1, 2, 3});

  auto zero = element_blocks(fx::zero6().binary[0]);
  REQUIRE(zero.blocks.size() == 2);
  std::set<std::vector<int>> blocks(zero.blocks.begin(), zero.blocks.end());
  CHECK(blocks.count({1}) == 1);
  CHECK(blocks.count({2, 3, 4, 5, 6}) == 1);

  auto c4 = element_blocks(fx::cyclic_table(4));
  bool identity_alone = false;
  for (const auto& block : c4.blocks) {
    if (block == std::vector<int>{1}) {
      identity_alone = true;
    }
  }
  CHECK(identity_alone);
}

TEST_CASE("efficient_generating_set is greedy and generating") {
  BinaryTable c4 = fx::cyclic_table(4);
  auto gens_c4 = efficient_generating_set(c4, element_blocks(c4));
  CHECK(gens_c4 == std::vector<int>{2});

  BinaryTable lz = fx::left_zero(3).binary[0];
  CHECK(efficient_generating_set(lz, element_blocks(lz)) ==
        std::vector<int>{1, 2, 3});

  BinaryTable zero = fx::zero6().binary[0];
  CHECK(efficient_generating_set(zero, element_blocks(zero)) ==
        std::vector<int>{2, 3, 4, 5, 6});
}

TEST_CASE("generating sets generate and are marginally minimal") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    Algebra a = fx::random_algebra(rng, n, 1, 0);
    const auto& m = a.binary[0];
    auto gens = efficient_generating_set(m, element_blocks(m));

    std::vector<int> sub;
    for (int g : gens) {
      sub = closure(a, sub, g);
    }
    CHECK(static_cast<int>(sub.size()) == n);

    if (gens.size() > 1) {
      std::vector<int> without;
      for (size_t k = 0; k + 1 < gens.size(); ++k) {
        without = closure(a, without, gens[k]);
      }
      CHECK(static_cast<int>(without.size()) < n);
    }
  }
}

TEST_CASE("invariant vectors are constant on automorphism orbits") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    Algebra a = fx::random_algebra(rng, n, 1, 0);
    auto vectors = all_invariant_vectors(a.binary[0]);
    auto eb = element_blocks(a.binary[0]);
    for (const auto& h : oracle_maps(a, a, MapKind::automorphism)) {
      for (int p = 1; p <= n; ++p) {
        CHECK(vectors[p - 1] == vectors[h[p] - 1]);
        CHECK(eb.block_of[p - 1] == eb.block_of[h[p] - 1]);
      }
    }
  }
}

TEST_CASE("unary fingerprints are constant on automorphism orbits") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    Algebra a = fx::random_algebra(rng, n, 0, 1 + static_cast<int>(rng() % 2));
    auto fps = unary_fingerprints(a);
    for (const auto& h : oracle_maps(a, a, MapKind::automorphism)) {
      for (int p = 1; p <= n; ++p) {
        CHECK(fps[p - 1] == fps[h[p] - 1]);
      }
    }
  }
}
