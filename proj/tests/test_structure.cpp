#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "ualg/congruence.hpp"
#include "ualg/morphism.hpp"
#include "ualg/oracle.hpp"
#include "ualg/structure.hpp"

using namespace ualg;
namespace fx = ualg::fixtures;

TEST_CASE("closure adds one generator to a closed base") {
  Algebra lz = fx::left_zero(3);
  CHECK(closure(lz, {}, 2) == std::vector<int>{2});

  Algebra z6 = fx::zero6();
  CHECK(closure(z6, {}, 2) == std::vector<int>{1, 2});

  Algebra nil = fx::nil6_endo();
  auto closed = closure(nil, {1, 2}, 5);
  CHECK(std::is_sorted(closed.begin(), closed.end()));
  // closed under the operation
  const auto& f = nil.binary[0];
  for (int x : closed) {
    for (int y : closed) {
      CHECK(std::binary_search(closed.begin(), closed.end(),
                               f[x - 1][y - 1]));
    }
  }
  CHECK(closed == std::vector<int>{1, 2, 5});
}

TEST_CASE("all_subuniverses on reference algebras") {
  auto z6_subs = all_subuniverses(fx::zero6());
  CHECK(z6_subs.size() == 32);
  for (const auto& s : z6_subs) {
    CHECK(std::binary_search(s.begin(), s.end(), 1));
  }

  CHECK(all_subuniverses(fx::left_zero(3)).size() == 7);

  auto c4_subs = all_subuniverses(fx::c4());
  CHECK(c4_subs == std::vector<std::vector<int>>{
                       {1}, {1, 2, 3, 4}, {1, 3}});
}

TEST_CASE("subuniverse enumeration equals the subset filter") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    int nb = static_cast<int>(rng() % 3);
    int nu = static_cast<int>(rng() % 3);
    if (nb + nu == 0) {
      nb = 1;
    }
    Algebra a = fx::random_algebra(rng, n, nb, nu);
    CHECK(all_subuniverses(a) == oracle_subuniverses(a));
  }
}

TEST_CASE("divisor witnesses certify quotients of subalgebras") {
  Algebra a = fx::nil6_endo();
  auto self = all_divisor_witnesses(a, a);
  REQUIRE(self.size() == 1);
  CHECK(self[0].subuniverse == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(self[0].congruence == Partition(6));

  Algebra one;
  one.size = 1;
  one.binary.push_back({{1}});
  auto to_point = all_divisor_witnesses(a, one);
  CHECK(to_point.size() == all_subuniverses(a).size());
  for (const auto& w : to_point) {
    CHECK(number_of_blocks(w.congruence) == 1);
  }

  Algebra q = quotient_algebra(a, Partition::from_forest({-3, 1, 1, -1, -2, 5}))
                  .quotient;
  auto witnesses = all_divisor_witnesses(a, q);
  bool found = false;
  for (const auto& w : witnesses) {
    if (w.subuniverse == std::vector<int>{1, 2, 3, 4, 5, 6} &&
        w.congruence == Partition::from_forest({-3, 1, 1, -1, -2, 5})) {
      found = true;
    }
  }
  CHECK(found);
  CHECK(exists_divisor(a, q));
  CHECK(one_divisor(a, q).has_value());
}

TEST_CASE("every divisor witness re-verifies") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    Algebra a = fx::random_algebra(rng, n + 1, 1, 0);
    Algebra b = fx::random_algebra(rng, n, 1, 0);
    for (const auto& w : all_divisor_witnesses(a, b)) {
      auto sub = subalgebra_from_universe(a, w.subuniverse);
      auto q = quotient_algebra(sub.algebra, w.congruence);
      CHECK(are_isomorphic(q.quotient, b).has_value());
    }
    CHECK(exists_divisor(a, b) == !all_divisor_witnesses(a, b).empty());
  }
}

TEST_CASE("directly_reducible lists nontrivial factor pairs once") {
  CHECK(directly_reducible(fx::left_zero(3)).empty());  // prime size
  CHECK(directly_reducible(fx::c4()).empty());

  auto klein_pairs = directly_reducible(fx::klein4());
  CHECK(klein_pairs.size() == 3);
  for (const auto& [phi, psi] : klein_pairs) {
    CHECK(number_of_blocks(phi) * number_of_blocks(psi) == 4);
    CHECK(number_of_blocks(meet_partitions(phi, psi)) == 4);
    CHECK(compare(phi, psi) == -1);
  }
  CHECK(exists_directly_reducible(fx::klein4()));
  CHECK(one_directly_reducible(fx::klein4()).has_value());
  CHECK_FALSE(exists_directly_reducible(fx::c4()));
}

TEST_CASE("products of small semigroups satisfy the decomposition laws") {
  std::vector<Algebra> reps;
  for (int n = 1; n <= 3; ++n) {
    for (auto& rep : enumerate_semigroups(n)) {
      reps.push_back(std::move(rep));
    }
  }
  REQUIRE(reps.size() == 23);
  int checked = 0;
  for (const auto& x : reps) {
    for (const auto& y : reps) {
      if (x.size * y.size > 6) {
        continue;
      }
      Algebra p = direct_product(x, y);
      ++checked;
      CHECK(all_congruences(p) == oracle_congruences(p));
      CHECK(directly_reducible(p) == oracle_directly_reducible(p));
      if (x.size > 1 && y.size > 1) {
        CHECK(exists_directly_reducible(p));
      }
      CHECK(exists_divisor(p, x));
      CHECK(exists_divisor(p, y));
      CHECK(exists_epimorphism(p, x));
      CHECK(exists_epimorphism(p, y));
    }
  }
  CHECK(checked == 205);
}

TEST_CASE("reducibility pairs match the oracle and rebuild the product") {
  std::mt19937 rng(71);
  int checked_products = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    Algebra a = fx::random_algebra(rng, n, 1, static_cast<int>(rng() % 2));
    auto pairs = directly_reducible(a);
    CHECK(pairs == oracle_directly_reducible(a));
    for (const auto& [phi, psi] : pairs) {
      Algebra product = direct_product(quotient_algebra(a, phi).quotient,
                                       quotient_algebra(a, psi).quotient);
      CHECK(are_isomorphic(product, a).has_value());
      ++checked_products;
    }
  }
  // group tables decompose often enough to exercise the product check
  auto klein_pairs = directly_reducible(fx::klein4());
  for (const auto& [phi, psi] : klein_pairs) {
    Algebra product = direct_product(quotient_algebra(fx::klein4(), phi).quotient,
                                     quotient_algebra(fx::klein4(), psi).quotient);
    CHECK(are_isomorphic(product, fx::klein4()).has_value());
    ++checked_products;
  }
  CHECK(checked_products >= 3);
}
