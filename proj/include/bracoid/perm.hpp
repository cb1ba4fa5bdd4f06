#pragma once

#include <compare>
#include <numeric>
#include <vector>

namespace bracoid {

// Permutation of the points 0..degree-1. Composition is right-to-left:
// (p * q)(x) = p(q(x)).
struct Permutation {
  std::vector<int> images;

  Permutation() = default;
  explicit Permutation(std::vector<int> imgs) : images(std::move(imgs)) {}

  static Permutation identity(int degree) {
    std::vector<int> v(degree);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  int degree() const { return static_cast<int>(images.size()); }
  int operator()(int x) const { return images[x]; }

  bool is_bijection() const {
    std::vector<char> seen(images.size(), 0);
    for (int y : images) {
      if (y < 0 || y >= degree() || seen[y]) return false;
      seen[y] = 1;
    }
    return true;
  }

  bool is_identity() const {
    for (int x = 0; x < degree(); ++x)
      if (images[x] != x) return false;
    return true;
  }

  Permutation operator*(const Permutation& q) const {
    Permutation r;
    r.images.resize(images.size());
    for (int x = 0; x < degree(); ++x) r.images[x] = images[q.images[x]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.images.resize(images.size());
    for (int x = 0; x < degree(); ++x) r.images[images[x]] = x;
    return r;
  }

  auto operator<=>(const Permutation&) const = default;
};

}  // namespace bracoid
