#include "ualg/congruence.hpp"

#include <set>
#include <utility>

#include "ualg/error.hpp"
#include "ualg/parallel.hpp"

namespace ualg {

namespace {

Partition principal_from_unaries(int n, const std::vector<UnaryTable>& ops,
                                 int x, int y) {
  Partition p(n);
  join_blocks(x, y, p);
  std::vector<std::pair<int, int>> pairs{{x, y}};
  while (!pairs.empty()) {
    auto [u, v] = pairs.back();
    pairs.pop_back();
    for (const auto& f : ops) {
      int r = root_block(f[static_cast<size_t>(u) - 1], p);
      int s = root_block(f[static_cast<size_t>(v) - 1], p);
      if (r != s) {
        join_blocks(r, s, p);
        pairs.emplace_back(r, s);
      }
    }
  }
  normalize(p);
  return p;
}

}  // namespace

Partition principal_congruence(const Algebra& a, int x, int y) {
  if (x < 1 || x > a.size || y < 1 || y > a.size) {
    throw IndexOutOfRange("pair element outside carrier");
  }
  return principal_from_unaries(a.size, binary_to_unary(a), x, y);
}

std::vector<Partition> all_principal_congruences(const Algebra& a,
                                                 int threads) {
  const int n = a.size;
  const auto ops = binary_to_unary(a);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(n) * (static_cast<size_t>(n) - 1) / 2);
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      pairs.emplace_back(i, j);
    }
  }
  std::vector<Partition> results(pairs.size());
  detail::parallel_for(pairs.size(), threads, [&](std::size_t k) {
    results[k] = principal_from_unaries(n, ops, pairs[k].first, pairs[k].second);
  });
  std::set<Partition, PartitionLess> out(results.begin(), results.end());
  return {out.begin(), out.end()};
}

std::vector<Partition> all_congruences(const Algebra& a, int threads) {
  const int n = a.size;
  const auto principals = all_principal_congruences(a, threads);
  std::set<Partition, PartitionLess> seen(principals.begin(), principals.end());

  // worklist join closure; per congruence we remember which principals are
  // already below it so their joins can be skipped
  std::vector<Partition> work(principals);
  std::vector<std::vector<char>> absorbed(
      work.size(), std::vector<char>(principals.size(), 0));
  for (size_t i = 0; i < work.size(); ++i) {
    absorbed[i][i] = 1;
  }
  for (size_t i = 0; i < work.size(); ++i) {
    for (size_t j = 0; j < principals.size(); ++j) {
      if (absorbed[i][j]) {
        continue;
      }
      if (contained(principals[j], work[i])) {
        absorbed[i][j] = 1;
        continue;
      }
      Partition joined = work[i];
      join_partitions(principals[j], joined);
      normalize(joined);
      if (seen.insert(joined).second) {
        std::vector<char> bits = absorbed[i];
        bits[j] = 1;
        work.push_back(std::move(joined));
        absorbed.push_back(std::move(bits));
      }
    }
  }
  seen.insert(Partition::identity(n));
  return {seen.begin(), seen.end()};
}

bool is_monolithic(const Algebra& a) {
  if (a.size < 2) {
    throw SizeTooSmall("monolithic test needs at least two elements");
  }
  auto parts = all_principal_congruences(a);
  if (parts.size() > 1) {
    size_t i = 1;
    while (true) {
      if (contained(parts[0], parts[i])) {
        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
      } else if (contained(parts[i], parts[0])) {
        parts[0] = parts[i];
        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
        i = 1;
      } else {
        ++i;
      }
      if (parts.size() < i + 1) {
        break;
      }
    }
  }
  return parts.size() <= 1;
}

}  // namespace ualg
