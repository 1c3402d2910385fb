#include "ualg/partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <utility>

#include "ualg/error.hpp"

namespace ualg {

Partition Partition::single_block(int n) {
  Partition p(n);
  if (n > 0) {
    p.set(1, -n);
    for (int i = 2; i <= n; ++i) {
      p.set(i, 1);
    }
  }
  return p;
}

Partition Partition::from_forest(std::vector<int> forest) {
  const int n = static_cast<int>(forest.size());
  long long total = 0;
  for (int v : forest) {
    if (v == 0 || v > n || v < -n) {
      throw InvalidPartition("forest entry out of range");
    }
    if (v < 0) {
      total += -v;
    }
  }
  if (total != n) {
    throw InvalidPartition("block sizes do not sum to the carrier size");
  }
  // every parent chain must reach a root
  for (int i = 1; i <= n; ++i) {
    int j = i;
    int steps = 0;
    while (forest[static_cast<size_t>(j) - 1] >= 1) {
      j = forest[static_cast<size_t>(j) - 1];
      if (++steps > n) {
        throw InvalidPartition("parent chain does not terminate");
      }
    }
  }
  Partition p;
  p.d_ = std::move(forest);
  return p;
}

Partition Partition::from_blocks(const std::vector<std::vector<int>>& blocks,
                                 int n) {
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  Partition p(n);
  for (const auto& block : blocks) {
    if (block.empty()) {
      throw InvalidPartition("empty block");
    }
    int root = *std::min_element(block.begin(), block.end());
    for (int e : block) {
      if (e < 1 || e > n) {
        throw InvalidPartition("block element out of range");
      }
      if (seen[static_cast<size_t>(e)]) {
        throw InvalidPartition("element repeated across blocks");
      }
      seen[static_cast<size_t>(e)] = 1;
      p.set(e, e == root ? -static_cast<int>(block.size()) : root);
    }
  }
  for (int e = 1; e <= n; ++e) {
    if (!seen[static_cast<size_t>(e)]) {
      throw InvalidPartition("element missing from all blocks");
    }
  }
  return p;
}

std::vector<std::vector<int>> Partition::blocks() const {
  Partition copy = *this;
  normalize(copy);
  const int n = copy.size();
  std::map<int, std::vector<int>> by_root;
  for (int i = 1; i <= n; ++i) {
    int r = copy.at(i) < 0 ? i : copy.at(i);
    by_root[r].push_back(i);
  }
  std::vector<std::vector<int>> out;
  out.reserve(by_root.size());
  for (auto& [root, members] : by_root) {
    out.push_back(std::move(members));
  }
  return out;
}

int root_block(int i, Partition& p) {
  if (i < 1 || i > p.size()) {
    throw IndexOutOfRange("element outside the partition carrier");
  }
  int j = i;
  while (p.at(j) >= 0) {
    j = p.at(j);
  }
  if (i != j) {
    p.set(i, j);
  }
  return j;
}

void join_blocks(int x, int y, Partition& p) {
  int r = root_block(x, p);
  int s = root_block(y, p);
  if (r != s) {
    if (p.at(r) < p.at(s)) {
      p.set(r, p.at(r) + p.at(s));
      p.set(s, r);
    } else {
      p.set(s, p.at(r) + p.at(s));
      p.set(r, s);
    }
  }
}

int number_of_blocks(const Partition& p) {
  int nblocks = 0;
  for (int v : p.forest()) {
    if (v < 0) {
      ++nblocks;
    }
  }
  return nblocks;
}

void normalize(Partition& p) {
  const int n = p.size();
  for (int i = 1; i <= n; ++i) {
    int r = root_block(i, p);
    if (r >= i) {
      p.set(i, -1);
      if (r > i) {
        p.set(r, i);
      }
    } else {
      p.set(r, p.at(r) - 1);
    }
  }
}

void join_partitions(const Partition& p1, Partition& p2) {
  if (p1.size() != p2.size()) {
    throw LengthMismatch("partitions have different carrier sizes");
  }
  Partition scratch = p1;
  const int n = scratch.size();
  for (int i = 1; i <= n; ++i) {
    join_blocks(i, root_block(i, scratch), p2);
  }
}

Partition meet_partitions(const Partition& p1, const Partition& p2) {
  if (p1.size() != p2.size()) {
    throw LengthMismatch("partitions have different carrier sizes");
  }
  const int n = p1.size();
  Partition a = p1;
  Partition b = p2;
  Partition out(n);
  std::map<std::pair<int, int>, int> first_seen;
  for (int i = 1; i <= n; ++i) {
    auto key = std::make_pair(root_block(i, a), root_block(i, b));
    auto [it, fresh] = first_seen.emplace(key, i);
    if (fresh) {
      out.set(i, -1);
    } else {
      out.set(it->second, out.at(it->second) - 1);
      out.set(i, it->second);
    }
  }
  return out;
}

int compare(const Partition& p1, const Partition& p2) {
  const int n = p1.size();
  // the last entry of a normalized partition is determined by the rest
  for (int i = 1; i <= n - 1; ++i) {
    if (p1.at(i) > p2.at(i)) {
      return -1;
    }
    if (p1.at(i) < p2.at(i)) {
      return 1;
    }
  }
  return 0;
}

bool contained(const Partition& p1, const Partition& p2) {
  const int n = p1.size();
  for (int i = 1; i <= n; ++i) {
    if (p1.at(i) < 0) {
      int block2 = p2.at(i) < 0 ? i : p2.at(i);
      for (int j = i + 1; j <= n; ++j) {
        if (p1.at(j) == i && block2 != p2.at(j)) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace ualg
