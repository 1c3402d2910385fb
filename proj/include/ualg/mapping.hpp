#ifndef UALG_MAPPING_HPP_
#define UALG_MAPPING_HPP_

#include <compare>
#include <vector>

namespace ualg {

// A (possibly partial) function between algebra carriers, stored as a list
// of 1-based images.  Entry 0 marks a still-unset position; partial maps
// only arise inside searches and quotient reconstruction.
struct Mapping {
  std::vector<int> images;

  Mapping() = default;
  explicit Mapping(int n) : images(static_cast<size_t>(n), 0) {}
  explicit Mapping(std::vector<int> imgs) : images(std::move(imgs)) {}

  static Mapping identity(int n) {
    Mapping f(n);
    for (int i = 1; i <= n; ++i) {
      f[i] = i;
    }
    return f;
  }

  int size() const { return static_cast<int>(images.size()); }

  // 1-based access.
  int operator[](int i) const { return images[static_cast<size_t>(i) - 1]; }
  int& operator[](int i) { return images[static_cast<size_t>(i) - 1]; }

  bool is_total() const {
    for (int v : images) {
      if (v == 0) {
        return false;
      }
    }
    return true;
  }

  bool is_injective() const;
  bool is_surjective_onto(int m) const;

  friend auto operator<=>(const Mapping&, const Mapping&) = default;
};

// compose(g, f)[x] = g[f[x]]; both maps must be total.
Mapping compose(const Mapping& g, const Mapping& f);

}  // namespace ualg

#endif  // UALG_MAPPING_HPP_
