#include "ualg/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ualg/congruence.hpp"
#include "ualg/error.hpp"
#include "ualg/morphism.hpp"

namespace ualg {

std::vector<int> closure(const Algebra& a, const std::vector<int>& base,
                         int elem) {
  const int n = a.size;
  if (elem < 1 || elem > n) {
    throw IndexOutOfRange("element outside carrier");
  }
  std::vector<char> in_sub(static_cast<size_t>(n) + 1, 0);
  std::vector<int> members;
  members.reserve(static_cast<size_t>(n));
  for (int e : base) {
    if (!in_sub[static_cast<size_t>(e)]) {
      in_sub[static_cast<size_t>(e)] = 1;
      members.push_back(e);
    }
  }
  if (in_sub[static_cast<size_t>(elem)]) {
    std::vector<int> out = members;
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<char> pending_mark(static_cast<size_t>(n) + 1, 0);
  std::vector<int> pending{elem};
  pending_mark[static_cast<size_t>(elem)] = 1;
  auto offer = [&](int e) {
    if (!in_sub[static_cast<size_t>(e)] && !pending_mark[static_cast<size_t>(e)]) {
      pending.push_back(e);
      pending_mark[static_cast<size_t>(e)] = 1;
    }
  };
  while (!pending.empty()) {
    int cur = pending.back();
    pending.pop_back();
    pending_mark[static_cast<size_t>(cur)] = 0;
    in_sub[static_cast<size_t>(cur)] = 1;
    members.push_back(cur);
    for (const auto& f : a.binary) {
      const auto& row = f[static_cast<size_t>(cur) - 1];
      for (int s : members) {
        offer(row[static_cast<size_t>(s) - 1]);
        offer(f[static_cast<size_t>(s) - 1][static_cast<size_t>(cur) - 1]);
      }
    }
    for (const auto& u : a.unary) {
      offer(u[static_cast<size_t>(cur) - 1]);
    }
    if (static_cast<int>(members.size() + pending.size()) == n) {
      // everything still pending must end up inside, so the closure is full
      std::vector<int> out(static_cast<size_t>(n));
      std::iota(out.begin(), out.end(), 1);
      return out;
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::vector<int>> all_subuniverses(const Algebra& a) {
  const int n = a.size;
  std::vector<Mapping> autos;
  if (a.num_ops() == 0) {
    autos.push_back(Mapping::identity(n));
  } else {
    autos = algebra_automorphisms(a);
  }

  auto element_orbit = [&](int j) {
    std::set<int> orbit;
    for (const auto& h : autos) {
      orbit.insert(h[j]);
    }
    return orbit;
  };
  auto set_orbit = [&](const std::vector<int>& s) {
    std::set<std::vector<int>> orbit;
    for (const auto& h : autos) {
      std::vector<int> image;
      image.reserve(s.size());
      for (int e : s) {
        image.push_back(h[e]);
      }
      std::sort(image.begin(), image.end());
      orbit.insert(std::move(image));
    }
    return orbit;
  };

  std::set<std::vector<int>> result;
  std::vector<std::vector<int>> seeds{{}};
  for (int layer = 1; layer <= n; ++layer) {
    std::set<std::vector<int>> found;
    for (const auto& seed : seeds) {
      std::vector<char> skip(static_cast<size_t>(n) + 1, 0);
      for (int e : seed) {
        skip[static_cast<size_t>(e)] = 1;
      }
      for (int j = 1; j <= n; ++j) {
        if (skip[static_cast<size_t>(j)]) {
          continue;
        }
        found.insert(closure(a, seed, j));
        for (int e : element_orbit(j)) {
          skip[static_cast<size_t>(e)] = 1;
        }
      }
    }
    std::set<std::vector<int>> expanded;
    for (const auto& s : found) {
      auto orbit = set_orbit(s);
      expanded.insert(orbit.begin(), orbit.end());
    }
    result.insert(expanded.begin(), expanded.end());
    if (found.size() == 1 && static_cast<int>(found.begin()->size()) == n) {
      break;
    }
    seeds.assign(expanded.begin(), expanded.end());
  }
  return {result.begin(), result.end()};
}

namespace {

// invokes sink for each witness in canonical order; sink returns false to
// stop the enumeration early
template <typename Sink>
void divisor_search(const Algebra& a1, const Algebra& a2, Sink sink) {
  if (!compatible(a1, a2)) {
    throw IncompatibleAlgebras("divisor test needs matching signatures");
  }
  const int d = a2.size;
  for (const auto& universe : all_subuniverses(a1)) {
    if (static_cast<int>(universe.size()) < d) {
      continue;
    }
    auto sub = subalgebra_from_universe(a1, universe);
    for (const auto& cong : all_congruences(sub.algebra)) {
      if (number_of_blocks(cong) != d) {
        continue;
      }
      auto q = quotient_algebra(sub.algebra, cong);
      if (are_isomorphic(q.quotient, a2)) {
        if (!sink(DivisorWitness{universe, cong})) {
          return;
        }
      }
    }
  }
}

template <typename Sink>
void reducible_search(const Algebra& a, Sink sink) {
  const int n = a.size;
  std::vector<Partition> candidates;
  for (const auto& cong : all_congruences(a)) {
    int b = number_of_blocks(cong);
    if (b != 1 && b != n && n % b == 0) {
      candidates.push_back(cong);
    }
  }
  for (size_t i = 0; i < candidates.size(); ++i) {
    int bi = number_of_blocks(candidates[i]);
    for (size_t j = i + 1; j < candidates.size(); ++j) {
      if (bi * number_of_blocks(candidates[j]) != n) {
        continue;
      }
      Partition meet = meet_partitions(candidates[i], candidates[j]);
      if (number_of_blocks(meet) == n) {
        if (!sink(std::make_pair(candidates[i], candidates[j]))) {
          return;
        }
      }
    }
  }
}

}  // namespace

std::vector<DivisorWitness> all_divisor_witnesses(const Algebra& a1,
                                                  const Algebra& a2) {
  std::vector<DivisorWitness> out;
  divisor_search(a1, a2, [&](DivisorWitness w) {
    out.push_back(std::move(w));
    return true;
  });
  return out;
}

bool exists_divisor(const Algebra& a1, const Algebra& a2) {
  bool found = false;
  divisor_search(a1, a2, [&](const DivisorWitness&) {
    found = true;
    return false;
  });
  return found;
}

std::optional<DivisorWitness> one_divisor(const Algebra& a1,
                                          const Algebra& a2) {
  std::optional<DivisorWitness> out;
  divisor_search(a1, a2, [&](DivisorWitness w) {
    out = std::move(w);
    return false;
  });
  return out;
}

std::vector<std::pair<Partition, Partition>> directly_reducible(
    const Algebra& a) {
  std::vector<std::pair<Partition, Partition>> out;
  reducible_search(a, [&](std::pair<Partition, Partition> pr) {
    out.push_back(std::move(pr));
    return true;
  });
  return out;
}

bool exists_directly_reducible(const Algebra& a) {
  bool found = false;
  reducible_search(a, [&](const std::pair<Partition, Partition>&) {
    found = true;
    return false;
  });
  return found;
}

std::optional<std::pair<Partition, Partition>> one_directly_reducible(
    const Algebra& a) {
  std::optional<std::pair<Partition, Partition>> out;
  reducible_search(a, [&](std::pair<Partition, Partition> pr) {
    out = std::move(pr);
    return false;
  });
  return out;
}

}  // namespace ualg
