#include "ualg/morphism.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <set>
#include <utility>

#include "ualg/congruence.hpp"
#include "ualg/error.hpp"
#include "ualg/fingerprint.hpp"

namespace ualg {

namespace {

// Partial map state for the backtracking searches.  Extending an
// assignment propagates every consequence of the homomorphism law for the
// tracked operations and fails fast on the first conflict.
struct PartialMap {
  std::vector<int> img;   // 1-based, index 0 unused; 0 marks unset
  std::vector<char> used; // codomain elements taken (injective searches)
  std::vector<int> defined;
  bool injective = false;

  PartialMap(int n, int m, bool inj)
      : img(static_cast<size_t>(n) + 1, 0),
        used(static_cast<size_t>(m) + 1, 0),
        injective(inj) {}
};

struct SearchTables {
  const BinaryTable* dom = nullptr;
  const BinaryTable* cod = nullptr;
  const std::vector<UnaryTable>* dom_un = nullptr;
  const std::vector<UnaryTable>* cod_un = nullptr;
};

bool assign(PartialMap& pm, const SearchTables& t, int x, int y) {
  std::vector<std::pair<int, int>> queue{{x, y}};
  while (!queue.empty()) {
    auto [a, b] = queue.back();
    queue.pop_back();
    int cur = pm.img[static_cast<size_t>(a)];
    if (cur != 0) {
      if (cur != b) {
        return false;
      }
      continue;
    }
    if (pm.injective && pm.used[static_cast<size_t>(b)]) {
      return false;
    }
    pm.img[static_cast<size_t>(a)] = b;
    pm.used[static_cast<size_t>(b)] = 1;
    pm.defined.push_back(a);
    if (t.dom != nullptr) {
      const auto& f = *t.dom;
      const auto& g = *t.cod;
      for (int c : pm.defined) {
        int bc = pm.img[static_cast<size_t>(c)];
        queue.emplace_back(
            f[static_cast<size_t>(a) - 1][static_cast<size_t>(c) - 1],
            g[static_cast<size_t>(b) - 1][static_cast<size_t>(bc) - 1]);
        if (c != a) {
          queue.emplace_back(
              f[static_cast<size_t>(c) - 1][static_cast<size_t>(a) - 1],
              g[static_cast<size_t>(bc) - 1][static_cast<size_t>(b) - 1]);
        }
      }
    }
    if (t.dom_un != nullptr) {
      for (size_t k = 0; k < t.dom_un->size(); ++k) {
        queue.emplace_back((*t.dom_un)[k][static_cast<size_t>(a) - 1],
                           (*t.cod_un)[k][static_cast<size_t>(b) - 1]);
      }
    }
  }
  return true;
}

struct HomSearch {
  SearchTables tables;
  std::vector<int> order;               // assignment order
  std::vector<std::vector<int>> cands;  // per order position
  int n_dom = 0;
  int n_cod = 0;
  bool injective = false;
  // checks operations not covered by propagation; empty means accept
  std::function<bool(const Mapping&)> final_check;
  // returns false to stop the whole search
  std::function<bool(const Mapping&)> sink;

  bool stopped = false;

  void run() {
    PartialMap pm(n_dom, n_cod, injective);
    rec(0, pm);
  }

  void rec(size_t k, const PartialMap& pm) {
    if (stopped) {
      return;
    }
    if (k == order.size()) {
      Mapping f(std::vector<int>(pm.img.begin() + 1, pm.img.end()));
      assert(f.is_total());
      if (!final_check || final_check(f)) {
        if (!sink(f)) {
          stopped = true;
        }
      }
      return;
    }
    int x = order[k];
    if (pm.img[static_cast<size_t>(x)] != 0) {
      rec(k + 1, pm);
      return;
    }
    for (int y : cands[k]) {
      PartialMap next = pm;
      if (assign(next, tables, x, y)) {
        rec(k + 1, next);
      }
      if (stopped) {
        return;
      }
    }
  }
};

bool tables_commute(const Mapping& f, const BinaryTable& fa,
                    const BinaryTable& fb) {
  const int n = f.size();
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      if (f[fa[static_cast<size_t>(x) - 1][static_cast<size_t>(y) - 1]] !=
          fb[static_cast<size_t>(f[x]) - 1][static_cast<size_t>(f[y]) - 1]) {
        return false;
      }
    }
  }
  return true;
}

bool unaries_commute(const Mapping& f, const UnaryTable& ua,
                     const UnaryTable& ub) {
  const int n = f.size();
  for (int x = 1; x <= n; ++x) {
    if (f[ua[static_cast<size_t>(x) - 1]] !=
        ub[static_cast<size_t>(f[x]) - 1]) {
      return false;
    }
  }
  return true;
}

// Every indexed pair except the first binary one (already enforced by the
// search propagation).
bool remaining_ops_commute(const Mapping& f, const Algebra& a,
                           const Algebra& b, size_t skip_binary) {
  for (size_t k = 0; k < a.binary.size(); ++k) {
    if (k == skip_binary) {
      continue;
    }
    if (!tables_commute(f, a.binary[k], b.binary[k])) {
      return false;
    }
  }
  for (size_t k = 0; k < a.unary.size(); ++k) {
    if (!unaries_commute(f, a.unary[k], b.unary[k])) {
      return false;
    }
  }
  return true;
}

std::vector<int> all_elements(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

// An embedding is an isomorphism onto its image, so invariants whose
// witnesses stay inside the generated subalgebra transfer exactly (v1,
// v7, v10) while the counting invariants can only grow with the ambient
// algebra.  Equal sizes force a bijection and hence full equality.
bool embedding_vector_ok(const InvariantVector& from,
                         const InvariantVector& to, bool same_size) {
  if (same_size) {
    return from == to;
  }
  for (size_t k = 0; k < from.size(); ++k) {
    bool exact = k == 0 || k == 6 || k == 9;
    if (exact ? to[k] != from[k] : to[k] < from[k]) {
      return false;
    }
  }
  return true;
}

bool embedding_unary_fp_ok(const std::vector<int>& from,
                           const std::vector<int>& to, size_t num_orbits,
                           bool same_size) {
  if (same_size) {
    return from == to;
  }
  for (size_t k = 0; k < from.size(); ++k) {
    bool exact = k < num_orbits;  // orbit sizes transfer exactly
    if (exact ? to[k] != from[k] : to[k] < from[k]) {
      return false;
    }
  }
  return true;
}

// Shared driver for the injective searches (automorphisms when a and b
// coincide, monomorphisms otherwise) and the endomorphism search.
template <typename Sink>
void homomorphism_search(const Algebra& a, const Algebra& b, bool injective,
                         bool prune_by_invariants, Sink sink) {
  const int n = a.size;
  const int m = b.size;
  if (injective && n > m) {
    return;
  }
  HomSearch search;
  search.n_dom = n;
  search.n_cod = m;
  search.injective = injective;
  search.sink = [&sink](const Mapping& f) { return sink(f); };

  if (!a.binary.empty()) {
    const auto eb_a = element_blocks(a.binary[0]);
    search.order = efficient_generating_set(a.binary[0], eb_a);
    if (prune_by_invariants) {
      const auto vec_b = all_invariant_vectors(b.binary[0]);
      const bool same_size = n == m;
      for (int g : search.order) {
        std::vector<int> cand;
        for (int y = 1; y <= m; ++y) {
          if (embedding_vector_ok(eb_a.vectors[static_cast<size_t>(g) - 1],
                                  vec_b[static_cast<size_t>(y) - 1],
                                  same_size)) {
            cand.push_back(y);
          }
        }
        search.cands.push_back(std::move(cand));
      }
    } else {
      search.cands.assign(search.order.size(), all_elements(m));
    }
    search.tables.dom = &a.binary[0];
    search.tables.cod = &b.binary[0];
    search.final_check = [&a, &b](const Mapping& f) {
      return remaining_ops_commute(f, a, b, 0);
    };
  } else {
    // no binary operation: assign elements in index order and let the
    // unary propagation force the rest
    search.order = all_elements(n);
    if (prune_by_invariants && !a.unary.empty()) {
      const auto fp_a = unary_fingerprints(a);
      const auto fp_b = unary_fingerprints(b);
      const bool same_size = n == m;
      for (int x : search.order) {
        std::vector<int> cand;
        for (int y = 1; y <= m; ++y) {
          if (embedding_unary_fp_ok(fp_a[static_cast<size_t>(x) - 1],
                                    fp_b[static_cast<size_t>(y) - 1],
                                    a.unary.size(), same_size)) {
            cand.push_back(y);
          }
        }
        search.cands.push_back(std::move(cand));
      }
    } else {
      search.cands.assign(search.order.size(), all_elements(m));
    }
    if (!a.unary.empty()) {
      search.tables.dom_un = &a.unary;
      search.tables.cod_un = &b.unary;
    }
  }
  search.run();
}

std::vector<Mapping> all_permutations(int n) {
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Mapping> out;
  do {
    out.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<Mapping> codomain_automorphisms(const Algebra& b) {
  if (b.num_ops() == 0) {
    return all_permutations(b.size);
  }
  return algebra_automorphisms(b);
}

template <typename Sink>
void epi_search(const Algebra& a, const Algebra& b, Sink sink) {
  if (!compatible(a, b)) {
    throw IncompatibleAlgebras("epimorphism search needs matching signatures");
  }
  std::optional<std::vector<Mapping>> autos;
  for (const auto& cong : all_congruences(a)) {
    if (number_of_blocks(cong) != b.size) {
      continue;
    }
    auto qr = quotient_algebra(a, cong);
    auto iso = are_isomorphic(qr.quotient, b);
    if (!iso) {
      continue;
    }
    if (!autos) {
      autos = codomain_automorphisms(b);
    }
    Mapping base = compose(*iso, qr.map_to_quotient);
    for (const auto& h : *autos) {
      if (!sink(compose(h, base))) {
        return;
      }
    }
  }
}

}  // namespace

bool is_homomorphism(const Mapping& f, const Algebra& a, const Algebra& b) {
  if (!compatible(a, b)) {
    throw IncompatibleAlgebras("homomorphism check needs matching signatures");
  }
  if (f.size() != a.size || !f.is_total()) {
    return false;
  }
  for (size_t k = 0; k < a.binary.size(); ++k) {
    if (!tables_commute(f, a.binary[k], b.binary[k])) {
      return false;
    }
  }
  for (size_t k = 0; k < a.unary.size(); ++k) {
    if (!unaries_commute(f, a.unary[k], b.unary[k])) {
      return false;
    }
  }
  return true;
}

std::vector<Mapping> magma_automorphisms(const BinaryTable& m) {
  Algebra a;
  a.size = static_cast<int>(m.size());
  a.binary.push_back(m);
  std::set<Mapping> out;
  homomorphism_search(a, a, /*injective=*/true, /*prune_by_invariants=*/true,
                      [&out](const Mapping& f) {
                        out.insert(f);
                        return true;
                      });
  return {out.begin(), out.end()};
}

std::vector<Mapping> algebra_automorphisms(const Algebra& a) {
  if (a.num_ops() == 0) {
    throw NoOperations("automorphism search needs at least one operation");
  }
  if (a.binary.empty()) {
    Algebra unary_only = a;
    std::set<Mapping> out;
    homomorphism_search(unary_only, unary_only, /*injective=*/true,
                        /*prune_by_invariants=*/true,
                        [&out](const Mapping& f) {
                          out.insert(f);
                          return true;
                        });
    return {out.begin(), out.end()};
  }

  auto commutes_with_unaries = [&a](const Mapping& f) {
    for (const auto& u : a.unary) {
      if (!unaries_commute(f, u, u)) {
        return false;
      }
    }
    return true;
  };

  std::vector<Mapping> result;
  for (const auto& h : magma_automorphisms(a.binary[0])) {
    if (commutes_with_unaries(h)) {
      result.push_back(h);
    }
  }
  // intersect with the automorphisms of the remaining binary operations;
  // once only the identity is left the intersection cannot shrink further
  for (size_t k = 1; k < a.binary.size() && result.size() > 1; ++k) {
    std::vector<Mapping> kept;
    for (const auto& h : result) {
      if (tables_commute(h, a.binary[k], a.binary[k])) {
        kept.push_back(h);
      }
    }
    result = std::move(kept);
  }
  assert(!result.empty());
  return result;
}

std::vector<Mapping> classic_endomorphisms(const Algebra& a) {
  std::set<Mapping> out;
  homomorphism_search(a, a, /*injective=*/false, /*prune_by_invariants=*/false,
                      [&out](const Mapping& f) {
                        out.insert(f);
                        return true;
                      });
  return {out.begin(), out.end()};
}

std::vector<Mapping> congruence_endomorphisms(const Algebra& a) {
  if (a.num_ops() == 0) {
    return classic_endomorphisms(a);
  }
  const int n = a.size;
  const Partition identity = Partition::identity(n);
  std::set<Mapping> out;
  for (const auto& cong : all_congruences(a)) {
    if (cong == identity) {
      continue;
    }
    auto qr = quotient_algebra(a, cong);
    for (const auto& g : all_monomorphisms(qr.quotient, a)) {
      out.insert(compose(g, qr.map_to_quotient));
    }
  }
  for (const auto& h : algebra_automorphisms(a)) {
    out.insert(h);
  }
  return {out.begin(), out.end()};
}

std::vector<Mapping> endomorphisms(const Algebra& a, int classic_size_limit) {
  return a.size <= classic_size_limit ? classic_endomorphisms(a)
                                      : congruence_endomorphisms(a);
}

std::vector<Mapping> all_monomorphisms(const Algebra& a, const Algebra& b) {
  if (!compatible(a, b)) {
    throw IncompatibleAlgebras("monomorphism search needs matching signatures");
  }
  std::set<Mapping> out;
  homomorphism_search(a, b, /*injective=*/true, /*prune_by_invariants=*/true,
                      [&out](const Mapping& f) {
                        out.insert(f);
                        return true;
                      });
  return {out.begin(), out.end()};
}

bool exists_monomorphism(const Algebra& a, const Algebra& b) {
  if (!compatible(a, b)) {
    throw IncompatibleAlgebras("monomorphism search needs matching signatures");
  }
  bool found = false;
  homomorphism_search(a, b, /*injective=*/true, /*prune_by_invariants=*/true,
                      [&found](const Mapping&) {
                        found = true;
                        return false;
                      });
  return found;
}

std::optional<Mapping> one_monomorphism(const Algebra& a, const Algebra& b) {
  if (!compatible(a, b)) {
    throw IncompatibleAlgebras("monomorphism search needs matching signatures");
  }
  std::optional<Mapping> out;
  homomorphism_search(a, b, /*injective=*/true, /*prune_by_invariants=*/true,
                      [&out](const Mapping& f) {
                        out = f;
                        return false;
                      });
  return out;
}

std::vector<Mapping> all_epimorphisms(const Algebra& a, const Algebra& b) {
  std::set<Mapping> out;
  epi_search(a, b, [&out](Mapping f) {
    out.insert(std::move(f));
    return true;
  });
  return {out.begin(), out.end()};
}

bool exists_epimorphism(const Algebra& a, const Algebra& b) {
  bool found = false;
  epi_search(a, b, [&found](const Mapping&) {
    found = true;
    return false;
  });
  return found;
}

std::optional<Mapping> one_epimorphism(const Algebra& a, const Algebra& b) {
  std::optional<Mapping> out;
  epi_search(a, b, [&out](Mapping f) {
    out = std::move(f);
    return false;
  });
  return out;
}

std::optional<Mapping> are_isomorphic(const Algebra& a, const Algebra& b) {
  if (!compatible(a, b)) {
    throw IncompatibleAlgebras("isomorphism test needs matching signatures");
  }
  if (a.size != b.size) {
    return std::nullopt;
  }
  return one_monomorphism(a, b);
}

}  // namespace ualg
