#ifndef UALG_TESTS_FIXTURES_HPP_
#define UALG_TESTS_FIXTURES_HPP_

#include <random>

#include "ualg/algebra.hpp"

namespace ualg::fixtures {

// 6-element zero semigroup: every product is 1.
inline Algebra zero6() {
  Algebra a;
  a.size = 6;
  a.binary.push_back(BinaryTable(6, std::vector<int>(6, 1)));
  return a;
}

// 6-element nilpotent semigroup with f(5,4) = 2 and f(6,3) = 2; has a
// unique minimal nontrivial congruence.
inline Algebra nil6_monolithic() {
  Algebra a = zero6();
  a.binary[0][4][3] = 2;
  a.binary[0][5][2] = 2;
  return a;
}

// 6-element nilpotent semigroup with f(6,4) = 2 and f(6,5) = 3; the
// standard example for the congruence-based endomorphism route.
inline Algebra nil6_endo() {
  Algebra a = zero6();
  a.binary[0][5][3] = 2;
  a.binary[0][5][4] = 3;
  return a;
}

inline Algebra left_zero(int n) {
  Algebra a;
  a.size = n;
  BinaryTable t(n, std::vector<int>(n));
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      t[x - 1][y - 1] = x;
    }
  }
  a.binary.push_back(std::move(t));
  return a;
}

inline BinaryTable cyclic_table(int n) {
  BinaryTable t(n, std::vector<int>(n));
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      t[x - 1][y - 1] = (x - 1 + y - 1) % n + 1;
    }
  }
  return t;
}

inline Algebra c4() {
  Algebra a;
  a.size = 4;
  a.binary.push_back(cyclic_table(4));
  return a;
}

inline Algebra c2() {
  Algebra a;
  a.size = 2;
  a.binary.push_back(cyclic_table(2));
  return a;
}

inline Algebra klein4() {
  Algebra a;
  a.size = 4;
  // xor group on {0..3} shifted to 1-based
  BinaryTable t(4, std::vector<int>(4));
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      t[x][y] = (x ^ y) + 1;
    }
  }
  a.binary.push_back(std::move(t));
  return a;
}

// The three-element cyclic group together with the unary cycle [3, 1, 2].
inline Algebra c3_with_cycle() {
  Algebra a;
  a.size = 3;
  a.unary.push_back({3, 1, 2});
  a.binary.push_back(cyclic_table(3));
  return a;
}

inline Algebra random_algebra(std::mt19937& rng, int size, int n_binary,
                              int n_unary) {
  Algebra a;
  a.size = size;
  auto entry = [&rng, size]() {
    return 1 + static_cast<int>(rng() % static_cast<unsigned>(size));
  };
  for (int k = 0; k < n_binary; ++k) {
    BinaryTable t(size, std::vector<int>(size));
    for (auto& row : t) {
      for (auto& v : row) {
        v = entry();
      }
    }
    a.binary.push_back(std::move(t));
  }
  for (int k = 0; k < n_unary; ++k) {
    UnaryTable t(size);
    for (auto& v : t) {
      v = entry();
    }
    a.unary.push_back(std::move(t));
  }
  return a;
}

}  // namespace ualg::fixtures

#endif  // UALG_TESTS_FIXTURES_HPP_
