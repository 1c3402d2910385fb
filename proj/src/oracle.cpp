#include "ualg/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ualg/error.hpp"
#include "ualg/morphism.hpp"
#include "ualg/parallel.hpp"

namespace ualg {

namespace {

Partition partition_from_assignment(const std::vector<int>& block_of) {
  const int n = static_cast<int>(block_of.size());
  Partition p(n);
  std::vector<int> root_of_block(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    int b = block_of[static_cast<size_t>(i) - 1];
    if (root_of_block[static_cast<size_t>(b)] == 0) {
      root_of_block[static_cast<size_t>(b)] = i;
      p.set(i, -1);
    } else {
      int root = root_of_block[static_cast<size_t>(b)];
      p.set(root, p.at(root) - 1);
      p.set(i, root);
    }
  }
  return p;
}

bool respects_all_ops(const Algebra& a, const Partition& p) {
  const int n = a.size;
  auto root = [&p](int x) { return p.at(x) < 0 ? x : p.at(x); };
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      if (root(x) != root(y)) {
        continue;
      }
      for (const auto& u : a.unary) {
        if (root(u[static_cast<size_t>(x) - 1]) !=
            root(u[static_cast<size_t>(y) - 1])) {
          return false;
        }
      }
      for (const auto& f : a.binary) {
        for (int z = 1; z <= n; ++z) {
          if (root(f[static_cast<size_t>(x) - 1][static_cast<size_t>(z) - 1]) !=
              root(f[static_cast<size_t>(y) - 1][static_cast<size_t>(z) - 1])) {
            return false;
          }
          if (root(f[static_cast<size_t>(z) - 1][static_cast<size_t>(x) - 1]) !=
              root(f[static_cast<size_t>(z) - 1][static_cast<size_t>(y) - 1])) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace

std::vector<Partition> all_set_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> block_of(static_cast<size_t>(n), 0);
  // restricted growth strings: block_of[i] <= 1 + max(block_of[0..i-1])
  auto rec = [&](auto&& self, int i, int max_used) -> void {
    if (i == n) {
      out.push_back(partition_from_assignment(block_of));
      return;
    }
    for (int b = 0; b <= max_used + 1 && b < n; ++b) {
      block_of[static_cast<size_t>(i)] = b;
      self(self, i + 1, std::max(max_used, b));
    }
  };
  if (n > 0) {
    block_of[0] = 0;
    rec(rec, 1, 0);
  }
  return out;
}

std::vector<Partition> oracle_congruences(const Algebra& a) {
  if (a.size > 7) {
    throw SizeTooLarge("oracle congruence filter is limited to size 7");
  }
  std::set<Partition, PartitionLess> out;
  for (const auto& p : all_set_partitions(a.size)) {
    if (respects_all_ops(a, p)) {
      out.insert(p);
    }
  }
  return {out.begin(), out.end()};
}

Partition oracle_principal_congruence(const Algebra& a, int x, int y) {
  auto same_block = [](const Partition& p, int u, int v) {
    auto root = [&p](int e) { return p.at(e) < 0 ? e : p.at(e); };
    return root(u) == root(v);
  };
  Partition result = Partition::single_block(a.size);
  normalize(result);
  for (const auto& c : oracle_congruences(a)) {
    if (same_block(c, x, y)) {
      result = meet_partitions(result, c);
    }
  }
  return result;
}

std::vector<Mapping> oracle_maps(const Algebra& a, const Algebra& b,
                                 MapKind kind) {
  if (!compatible(a, b)) {
    throw IncompatibleAlgebras("oracle map filter needs matching signatures");
  }
  const int n = a.size;
  const int m = b.size;
  double total = 1;
  for (int i = 0; i < n; ++i) {
    total *= m;
    if (total > 1e7) {
      throw SizeTooLarge("oracle map filter bounded by 10^7 candidates");
    }
  }
  std::vector<Mapping> out;
  Mapping f(n);
  for (int i = 1; i <= n; ++i) {
    f[i] = 1;
  }
  while (true) {
    bool keep = is_homomorphism(f, a, b);
    if (keep) {
      switch (kind) {
        case MapKind::endomorphism:
          break;
        case MapKind::monomorphism:
          keep = f.is_injective();
          break;
        case MapKind::epimorphism:
          keep = f.is_surjective_onto(m);
          break;
        case MapKind::automorphism:
          keep = n == m && f.is_injective();
          break;
      }
    }
    if (keep) {
      out.push_back(f);
    }
    // odometer over image tuples
    int i = n;
    while (i >= 1 && f[i] == m) {
      f[i] = 1;
      --i;
    }
    if (i == 0) {
      break;
    }
    ++f[i];
  }
  return out;
}

std::vector<std::vector<int>> oracle_subuniverses(const Algebra& a) {
  const int n = a.size;
  if (n > 16) {
    throw SizeTooLarge("oracle subuniverse filter is limited to size 16");
  }
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> elems;
    for (int e = 1; e <= n; ++e) {
      if (mask & (1u << (e - 1))) {
        elems.push_back(e);
      }
    }
    auto inside = [&mask](int e) { return (mask >> (e - 1)) & 1u; };
    bool closed = true;
    for (const auto& f : a.binary) {
      for (int x : elems) {
        for (int y : elems) {
          if (!inside(f[static_cast<size_t>(x) - 1][static_cast<size_t>(y) - 1])) {
            closed = false;
            break;
          }
        }
        if (!closed) break;
      }
      if (!closed) break;
    }
    if (closed) {
      for (const auto& u : a.unary) {
        for (int x : elems) {
          if (!inside(u[static_cast<size_t>(x) - 1])) {
            closed = false;
            break;
          }
        }
        if (!closed) break;
      }
    }
    if (closed) {
      out.push_back(std::move(elems));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Partition, Partition>> oracle_directly_reducible(
    const Algebra& a) {
  const int n = a.size;
  std::vector<Partition> candidates;
  for (const auto& cong : oracle_congruences(a)) {
    int b = number_of_blocks(cong);
    if (b != 1 && b != n && n % b == 0) {
      candidates.push_back(cong);
    }
  }
  std::vector<std::pair<Partition, Partition>> out;
  for (size_t i = 0; i < candidates.size(); ++i) {
    for (size_t j = i + 1; j < candidates.size(); ++j) {
      if (number_of_blocks(candidates[i]) * number_of_blocks(candidates[j]) !=
          n) {
        continue;
      }
      Partition meet = meet_partitions(candidates[i], candidates[j]);
      if (number_of_blocks(meet) == n) {
        out.emplace_back(candidates[i], candidates[j]);
      }
    }
  }
  return out;
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
  if (!compatible(a, b)) {
    throw IncompatibleAlgebras("direct product needs matching signatures");
  }
  const int n = a.size;
  const int m = b.size;
  auto index = [m](int x, int y) { return (x - 1) * m + y; };
  Algebra prod;
  prod.size = n * m;
  for (size_t k = 0; k < a.binary.size(); ++k) {
    BinaryTable table(static_cast<size_t>(prod.size),
                      std::vector<int>(static_cast<size_t>(prod.size)));
    for (int x1 = 1; x1 <= n; ++x1) {
      for (int y1 = 1; y1 <= m; ++y1) {
        for (int x2 = 1; x2 <= n; ++x2) {
          for (int y2 = 1; y2 <= m; ++y2) {
            int vx = a.binary[k][static_cast<size_t>(x1) - 1]
                                [static_cast<size_t>(x2) - 1];
            int vy = b.binary[k][static_cast<size_t>(y1) - 1]
                                [static_cast<size_t>(y2) - 1];
            table[static_cast<size_t>(index(x1, y1)) - 1]
                 [static_cast<size_t>(index(x2, y2)) - 1] = index(vx, vy);
          }
        }
      }
    }
    prod.binary.push_back(std::move(table));
  }
  for (size_t k = 0; k < a.unary.size(); ++k) {
    UnaryTable table(static_cast<size_t>(prod.size));
    for (int x = 1; x <= n; ++x) {
      for (int y = 1; y <= m; ++y) {
        table[static_cast<size_t>(index(x, y)) - 1] =
            index(a.unary[k][static_cast<size_t>(x) - 1],
                  b.unary[k][static_cast<size_t>(y) - 1]);
      }
    }
    prod.unary.push_back(std::move(table));
  }
  return prod;
}

std::vector<Algebra> enumerate_semigroups(int n, int threads) {
  if (n < 1) {
    throw SizeTooSmall("semigroup enumeration needs a positive size");
  }
  if (n > 3) {
    throw SizeTooLarge("semigroup enumeration is limited to size 3");
  }
  const int cells = n * n;
  std::size_t total = 1;
  for (int i = 0; i < cells; ++i) {
    total *= static_cast<std::size_t>(n);
  }

  std::vector<std::vector<int>> perms;
  {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  auto decode = [n, cells](std::size_t code) {
    std::vector<int> flat(static_cast<size_t>(cells));
    for (int i = cells - 1; i >= 0; --i) {
      flat[static_cast<size_t>(i)] = static_cast<int>(code % n) + 1;
      code /= static_cast<std::size_t>(n);
    }
    return flat;
  };
  auto at = [n](const std::vector<int>& flat, int x, int y) {
    return flat[static_cast<size_t>((x - 1) * n + (y - 1))];
  };
  auto associative = [&](const std::vector<int>& flat) {
    for (int x = 1; x <= n; ++x) {
      for (int y = 1; y <= n; ++y) {
        for (int z = 1; z <= n; ++z) {
          if (at(flat, at(flat, x, y), z) != at(flat, x, at(flat, y, z))) {
            return false;
          }
        }
      }
    }
    return true;
  };
  // least table over all relabellings of the table and of its transpose
  auto canonical = [&](const std::vector<int>& flat) {
    std::vector<int> best;
    std::vector<int> relabelled(static_cast<size_t>(cells));
    for (int transposed = 0; transposed < 2; ++transposed) {
      for (const auto& perm : perms) {
        for (int x = 1; x <= n; ++x) {
          for (int y = 1; y <= n; ++y) {
            int vx = perm[static_cast<size_t>(x) - 1];
            int vy = perm[static_cast<size_t>(y) - 1];
            int v = transposed ? at(flat, y, x) : at(flat, x, y);
            relabelled[static_cast<size_t>((vx - 1) * n + (vy - 1))] =
                perm[static_cast<size_t>(v) - 1];
          }
        }
        if (best.empty() || relabelled < best) {
          best = relabelled;
        }
      }
    }
    return best;
  };

  const int workers = std::max(1, threads);
  std::vector<std::set<std::vector<int>>> partial(
      static_cast<size_t>(workers));
  detail::parallel_for(static_cast<std::size_t>(workers), workers,
                       [&](std::size_t w) {
                         std::size_t lo = total * w / static_cast<std::size_t>(workers);
                         std::size_t hi =
                             total * (w + 1) / static_cast<std::size_t>(workers);
                         for (std::size_t code = lo; code < hi; ++code) {
                           auto flat = decode(code);
                           if (associative(flat)) {
                             partial[w].insert(canonical(flat));
                           }
                         }
                       });
  std::set<std::vector<int>> reps;
  for (auto& s : partial) {
    reps.insert(s.begin(), s.end());
  }

  std::vector<Algebra> out;
  out.reserve(reps.size());
  for (const auto& flat : reps) {
    Algebra a;
    a.size = n;
    BinaryTable table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int x = 1; x <= n; ++x) {
      for (int y = 1; y <= n; ++y) {
        table[static_cast<size_t>(x) - 1][static_cast<size_t>(y) - 1] =
            at(flat, x, y);
      }
    }
    a.binary.push_back(std::move(table));
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace ualg
