#include "ualg/algebra.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "ualg/error.hpp"

namespace ualg {

bool Mapping::is_injective() const {
  std::vector<int> sorted;
  sorted.reserve(images.size());
  for (int v : images) {
    if (v != 0) {
      sorted.push_back(v);
    }
  }
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool Mapping::is_surjective_onto(int m) const {
  std::vector<char> hit(static_cast<size_t>(m) + 1, 0);
  for (int v : images) {
    if (v >= 1 && v <= m) {
      hit[static_cast<size_t>(v)] = 1;
    }
  }
  for (int i = 1; i <= m; ++i) {
    if (!hit[static_cast<size_t>(i)]) {
      return false;
    }
  }
  return true;
}

Mapping compose(const Mapping& g, const Mapping& f) {
  Mapping out(f.size());
  for (int i = 1; i <= f.size(); ++i) {
    out[i] = g[f[i]];
  }
  return out;
}

void validate_algebra(const Algebra& a) {
  const int n = a.size;
  if (n < 1) {
    throw ShapeMismatch("algebra size must be positive");
  }
  auto check_entry = [n](int v) {
    if (v < 1 || v > n) {
      throw EntryOutOfRange("table entry " + std::to_string(v) +
                            " outside 1.." + std::to_string(n));
    }
  };
  for (const auto& table : a.binary) {
    if (static_cast<int>(table.size()) != n) {
      throw ShapeMismatch("binary table row count differs from size");
    }
    for (const auto& row : table) {
      if (static_cast<int>(row.size()) != n) {
        throw ShapeMismatch("binary table row length differs from size");
      }
      for (int v : row) {
        check_entry(v);
      }
    }
  }
  for (const auto& table : a.unary) {
    if (static_cast<int>(table.size()) != n) {
      throw ShapeMismatch("unary table length differs from size");
    }
    for (int v : table) {
      check_entry(v);
    }
  }
}

bool compatible(const Algebra& a, const Algebra& b) {
  return a.binary.size() == b.binary.size() && a.unary.size() == b.unary.size();
}

std::vector<UnaryTable> binary_to_unary(const Algebra& a) {
  const int n = a.size;
  std::vector<UnaryTable> out;
  std::set<UnaryTable> seen;
  auto push_unique = [&](UnaryTable t) {
    if (seen.insert(t).second) {
      out.push_back(std::move(t));
    }
  };
  for (const auto& u : a.unary) {
    push_unique(u);
  }
  for (const auto& f : a.binary) {
    for (int x = 1; x <= n; ++x) {
      push_unique(f[static_cast<size_t>(x) - 1]);
    }
    for (int x = 1; x <= n; ++x) {
      UnaryTable col(static_cast<size_t>(n));
      for (int y = 1; y <= n; ++y) {
        col[static_cast<size_t>(y) - 1] =
            f[static_cast<size_t>(y) - 1][static_cast<size_t>(x) - 1];
      }
      push_unique(std::move(col));
    }
  }
  return out;
}

QuotientResult quotient_algebra(const Algebra& a, const Partition& c) {
  const int n = a.size;
  if (c.size() != n) {
    throw LengthMismatch("congruence length differs from algebra size");
  }
  Partition p = c;
  normalize(p);
  auto root = [&p](int x) { return p.at(x) < 0 ? x : p.at(x); };

  std::vector<int> roots;
  std::vector<int> label(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    if (p.at(i) < 0) {
      roots.push_back(i);
      label[static_cast<size_t>(i)] = static_cast<int>(roots.size());
    }
  }
  const int q = static_cast<int>(roots.size());

  Mapping to_q(n);
  for (int x = 1; x <= n; ++x) {
    to_q[x] = label[static_cast<size_t>(root(x))];
  }

  Algebra quot;
  quot.size = q;
  for (const auto& f : a.binary) {
    BinaryTable table(static_cast<size_t>(q),
                      std::vector<int>(static_cast<size_t>(q)));
    for (int i = 0; i < q; ++i) {
      for (int j = 0; j < q; ++j) {
        int v = f[static_cast<size_t>(roots[static_cast<size_t>(i)]) - 1]
                 [static_cast<size_t>(roots[static_cast<size_t>(j)]) - 1];
        table[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            label[static_cast<size_t>(root(v))];
      }
    }
    quot.binary.push_back(std::move(table));
  }
  for (const auto& u : a.unary) {
    UnaryTable table(static_cast<size_t>(q));
    for (int i = 0; i < q; ++i) {
      int v = u[static_cast<size_t>(roots[static_cast<size_t>(i)]) - 1];
      table[static_cast<size_t>(i)] = label[static_cast<size_t>(root(v))];
    }
    quot.unary.push_back(std::move(table));
  }

  // the homomorphism law must hold for every operation and every argument,
  // otherwise the partition was not a congruence
  for (size_t k = 0; k < a.binary.size(); ++k) {
    const auto& f = a.binary[k];
    const auto& g = quot.binary[k];
    for (int x = 1; x <= n; ++x) {
      for (int y = 1; y <= n; ++y) {
        int fx = f[static_cast<size_t>(x) - 1][static_cast<size_t>(y) - 1];
        if (to_q[fx] != g[static_cast<size_t>(to_q[x]) - 1]
                         [static_cast<size_t>(to_q[y]) - 1]) {
          throw NotACongruence("partition is not compatible with a binary op");
        }
      }
    }
  }
  for (size_t k = 0; k < a.unary.size(); ++k) {
    const auto& u = a.unary[k];
    const auto& v = quot.unary[k];
    for (int x = 1; x <= n; ++x) {
      if (to_q[u[static_cast<size_t>(x) - 1]] !=
          v[static_cast<size_t>(to_q[x]) - 1]) {
        throw NotACongruence("partition is not compatible with a unary op");
      }
    }
  }
  return {std::move(quot), std::move(to_q)};
}

SubalgebraResult subalgebra_from_universe(const Algebra& a,
                                          const std::vector<int>& s) {
  const int n = a.size;
  std::vector<int> elems(s);
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty()) {
    throw NotClosed("subuniverse is empty");
  }
  std::vector<int> label(static_cast<size_t>(n) + 1, 0);
  for (size_t k = 0; k < elems.size(); ++k) {
    int e = elems[k];
    if (e < 1 || e > n) {
      throw IndexOutOfRange("subuniverse element outside carrier");
    }
    label[static_cast<size_t>(e)] = static_cast<int>(k) + 1;
  }
  auto relabel = [&](int v) {
    int l = label[static_cast<size_t>(v)];
    if (l == 0) {
      throw NotClosed("operation leaves the subuniverse");
    }
    return l;
  };

  const int m = static_cast<int>(elems.size());
  Algebra sub;
  sub.size = m;
  for (const auto& f : a.binary) {
    BinaryTable table(static_cast<size_t>(m),
                      std::vector<int>(static_cast<size_t>(m)));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        table[static_cast<size_t>(i)][static_cast<size_t>(j)] = relabel(
            f[static_cast<size_t>(elems[static_cast<size_t>(i)]) - 1]
             [static_cast<size_t>(elems[static_cast<size_t>(j)]) - 1]);
      }
    }
    sub.binary.push_back(std::move(table));
  }
  for (const auto& u : a.unary) {
    UnaryTable table(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      table[static_cast<size_t>(i)] =
          relabel(u[static_cast<size_t>(elems[static_cast<size_t>(i)]) - 1]);
    }
    sub.unary.push_back(std::move(table));
  }
  return {std::move(sub), std::move(elems)};
}

Algebra rees_matrix_semigroup(int group_order, int rows, int cols,
                              const std::optional<BinaryTable>& sandwich,
                              std::uint32_t seed) {
  if (group_order < 1 || rows < 1 || cols < 1) {
    throw BadSandwich("group order, rows and cols must be positive");
  }
  const int G = group_order;
  BinaryTable p;
  if (sandwich) {
    p = *sandwich;
    if (static_cast<int>(p.size()) != cols) {
      throw BadSandwich("sandwich matrix must have one row per column index");
    }
    for (const auto& row : p) {
      if (static_cast<int>(row.size()) != rows) {
        throw BadSandwich("sandwich matrix row length differs from rows");
      }
      for (int v : row) {
        if (v < 1 || v > G) {
          throw BadSandwich("sandwich entry outside the group");
        }
      }
    }
  } else {
    std::mt19937 rng(seed);
    p.assign(static_cast<size_t>(cols), std::vector<int>(static_cast<size_t>(rows)));
    for (auto& row : p) {
      for (auto& v : row) {
        v = 1 + static_cast<int>(rng() % static_cast<std::uint32_t>(G));
      }
    }
  }

  const int n = rows * G * cols;
  auto mul = [G](int g, int h) { return (g - 1 + h - 1) % G + 1; };
  auto index = [G, cols](int i, int g, int l) {
    return ((i - 1) * G + (g - 1)) * cols + (l - 1) + 1;
  };

  BinaryTable table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int x = 1; x <= n; ++x) {
    int x0 = x - 1;
    int l = x0 % cols + 1;
    int g = (x0 / cols) % G + 1;
    int i = x0 / (cols * G) + 1;
    for (int y = 1; y <= n; ++y) {
      int y0 = y - 1;
      int m = y0 % cols + 1;
      int h = (y0 / cols) % G + 1;
      int j = y0 / (cols * G) + 1;
      int prod = mul(mul(g, p[static_cast<size_t>(l) - 1][static_cast<size_t>(j) - 1]), h);
      table[static_cast<size_t>(x) - 1][static_cast<size_t>(y) - 1] =
          index(i, prod, m);
    }
  }
  Algebra a;
  a.size = n;
  a.binary.push_back(std::move(table));
  return a;
}

}  // namespace ualg
