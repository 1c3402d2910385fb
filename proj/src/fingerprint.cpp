#include "ualg/fingerprint.hpp"

#include <algorithm>
#include <map>

#include "ualg/structure.hpp"

namespace ualg {

namespace {

struct MagmaContext {
  const BinaryTable& m;
  int n;
  std::vector<char> idem;                  // 1-based
  std::vector<std::vector<char>> pair_to;  // pair_to[p][t]: x*y = p, y*x = t
  std::vector<std::vector<char>> left_id;  // left_id[p][t]: e*t = p, e idem
  std::vector<std::vector<char>> right_id; // right_id[p][t]: t*f = p, f idem

  explicit MagmaContext(const BinaryTable& table)
      : m(table), n(static_cast<int>(table.size())) {
    idem.assign(static_cast<size_t>(n) + 1, 0);
    for (int x = 1; x <= n; ++x) {
      idem[static_cast<size_t>(x)] = prod(x, x) == x;
    }
    auto grid = [this]() {
      return std::vector<std::vector<char>>(
          static_cast<size_t>(n) + 1,
          std::vector<char>(static_cast<size_t>(n) + 1, 0));
    };
    pair_to = grid();
    left_id = grid();
    right_id = grid();
    for (int x = 1; x <= n; ++x) {
      for (int y = 1; y <= n; ++y) {
        pair_to[static_cast<size_t>(prod(x, y))][static_cast<size_t>(prod(y, x))] = 1;
      }
    }
    for (int e = 1; e <= n; ++e) {
      if (!idem[static_cast<size_t>(e)]) {
        continue;
      }
      for (int t = 1; t <= n; ++t) {
        left_id[static_cast<size_t>(prod(e, t))][static_cast<size_t>(t)] = 1;
        right_id[static_cast<size_t>(prod(t, e))][static_cast<size_t>(t)] = 1;
      }
    }
  }

  int prod(int x, int y) const {
    return m[static_cast<size_t>(x) - 1][static_cast<size_t>(y) - 1];
  }

  InvariantVector element_vector(int p) const {
    InvariantVector v{};
    // v1: walk the power sequence p, p^2, ... until a value recurs; the
    // first index inside the cycle is the smallest exponent that repeats
    {
      std::vector<int> first_index(static_cast<size_t>(n) + 1, 0);
      int cur = p;
      int idx = 1;
      while (first_index[static_cast<size_t>(cur)] == 0) {
        first_index[static_cast<size_t>(cur)] = idx;
        cur = prod(cur, p);
        ++idx;
      }
      v[0] = std::max(2, first_index[static_cast<size_t>(cur)]);
    }
    int pp = prod(p, p);
    std::vector<char> row_seen(static_cast<size_t>(n) + 1, 0);
    std::vector<char> col_seen(static_cast<size_t>(n) + 1, 0);
    for (int y = 1; y <= n; ++y) {
      int py = prod(p, y);
      int yp = prod(y, p);
      if (py == y) ++v[1];
      if (yp == y) ++v[2];
      if (prod(py, p) == p) ++v[3];
      if (!row_seen[static_cast<size_t>(py)]) {
        row_seen[static_cast<size_t>(py)] = 1;
        ++v[4];
      }
      if (!col_seen[static_cast<size_t>(yp)]) {
        col_seen[static_cast<size_t>(yp)] = 1;
        ++v[5];
      }
      if (idem[static_cast<size_t>(yp)]) ++v[7];
      if (idem[static_cast<size_t>(py)]) ++v[8];
      if (py == yp) ++v[10];
      int yy = prod(y, y);
      if (prod(yy, p) == prod(p, yy)) ++v[11];
      if (yy == p) ++v[12];
      if (prod(p, py) == prod(pp, y)) ++v[13];
    }
    v[6] = idem[static_cast<size_t>(p)];
    v[9] = prod(p, pp) == prod(pp, p);
    for (int x = 1; x <= n; ++x) {
      for (int y = x; y <= n; ++y) {
        if (prod(x, y) == p && prod(y, x) == p) ++v[14];
      }
    }
    for (int t = 1; t <= n; ++t) {
      if (left_id[static_cast<size_t>(p)][static_cast<size_t>(t)] &&
          right_id[static_cast<size_t>(p)][static_cast<size_t>(t)]) {
        ++v[15];
      }
      if (pair_to[static_cast<size_t>(p)][static_cast<size_t>(t)]) {
        ++v[16];
      }
    }
    return v;
  }
};

}  // namespace

InvariantVector invariant_vector(const BinaryTable& m, int p) {
  return MagmaContext(m).element_vector(p);
}

std::vector<InvariantVector> all_invariant_vectors(const BinaryTable& m) {
  MagmaContext ctx(m);
  std::vector<InvariantVector> out(static_cast<size_t>(ctx.n));
  for (int p = 1; p <= ctx.n; ++p) {
    out[static_cast<size_t>(p) - 1] = ctx.element_vector(p);
  }
  return out;
}

ElementBlocks element_blocks(const BinaryTable& m) {
  ElementBlocks eb;
  eb.vectors = all_invariant_vectors(m);
  const int n = static_cast<int>(m.size());
  std::map<InvariantVector, std::vector<int>> groups;
  for (int p = 1; p <= n; ++p) {
    groups[eb.vectors[static_cast<size_t>(p) - 1]].push_back(p);
  }
  eb.block_of.assign(static_cast<size_t>(n), 0);
  for (auto& [vec, members] : groups) {
    for (int e : members) {
      eb.block_of[static_cast<size_t>(e) - 1] =
          static_cast<int>(eb.blocks.size());
    }
    eb.blocks.push_back(std::move(members));
  }
  return eb;
}

std::vector<int> efficient_generating_set(const BinaryTable& m,
                                          const ElementBlocks& blocks) {
  const int n = static_cast<int>(m.size());
  Algebra magma;
  magma.size = n;
  magma.binary.push_back(m);

  std::vector<int> block_size(static_cast<size_t>(n) + 1, 0);
  for (const auto& block : blocks.blocks) {
    for (int e : block) {
      block_size[static_cast<size_t>(e)] = static_cast<int>(block.size());
    }
  }

  std::vector<int> gens;
  std::vector<int> sub;
  std::vector<char> in_sub(static_cast<size_t>(n) + 1, 0);
  while (static_cast<int>(sub.size()) < n) {
    int best = 0;
    int best_grow = -1;
    for (int c = 1; c <= n; ++c) {
      if (in_sub[static_cast<size_t>(c)]) {
        continue;
      }
      int grow =
          static_cast<int>(closure(magma, sub, c).size() - sub.size());
      bool better =
          grow > best_grow ||
          (grow == best_grow &&
           block_size[static_cast<size_t>(c)] < block_size[static_cast<size_t>(best)]);
      if (better) {
        best = c;
        best_grow = grow;
      }
    }
    gens.push_back(best);
    sub = closure(magma, sub, best);
    for (int e : sub) {
      in_sub[static_cast<size_t>(e)] = 1;
    }
  }
  return gens;
}

std::vector<std::vector<int>> unary_fingerprints(const Algebra& a) {
  const int n = a.size;
  std::vector<std::vector<int>> preimages(
      a.unary.size(), std::vector<int>(static_cast<size_t>(n) + 1, 0));
  for (size_t k = 0; k < a.unary.size(); ++k) {
    for (int x = 1; x <= n; ++x) {
      ++preimages[k][static_cast<size_t>(a.unary[k][static_cast<size_t>(x) - 1])];
    }
  }
  std::vector<std::vector<int>> out(static_cast<size_t>(n));
  for (int p = 1; p <= n; ++p) {
    std::vector<int> fp;
    fp.reserve(2 * a.unary.size());
    for (const auto& u : a.unary) {
      std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
      int cur = p;
      int orbit = 0;
      while (!seen[static_cast<size_t>(cur)]) {
        seen[static_cast<size_t>(cur)] = 1;
        ++orbit;
        cur = u[static_cast<size_t>(cur) - 1];
      }
      fp.push_back(orbit);
    }
    for (size_t k = 0; k < a.unary.size(); ++k) {
      fp.push_back(preimages[k][static_cast<size_t>(p)]);
    }
    out[static_cast<size_t>(p) - 1] = std::move(fp);
  }
  return out;
}

}  // namespace ualg
