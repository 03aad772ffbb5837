// Permutations on {0,...,n-1} stored as image tables.
//
// Composition is left-to-right throughout the library: (p * q) maps w to
// q[p[w]], matching the exponent notation w^(pq) = (w^p)^q. Every module
// builds on this convention; do not mix in right-to-left products.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace fix3 {

using Point = std::uint32_t;

class structural_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class refusal_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class construction_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class Perm {
public:
  Perm() = default;

  static Perm identity(Point degree) {
    Perm p;
    p.img_.resize(degree);
    std::iota(p.img_.begin(), p.img_.end(), Point{0});
    return p;
  }

  // Validates bijectivity; throws structural_error otherwise.
  static Perm from_images(std::vector<Point> images) {
    std::vector<bool> seen(images.size(), false);
    for (Point x : images) {
      if (x >= images.size() || seen[x])
        throw structural_error("image table is not a bijection");
      seen[x] = true;
    }
    Perm p;
    p.img_ = std::move(images);
    return p;
  }

  Point degree() const { return static_cast<Point>(img_.size()); }
  Point operator[](Point w) const { return img_[w]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const {
    for (Point i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  friend Perm compose(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree())
      throw structural_error("compose: degree mismatch");
    Perm r;
    r.img_.resize(p.degree());
    for (Point i = 0; i < p.degree(); ++i) r.img_[i] = q.img_[p.img_[i]];
    return r;
  }

  friend Perm inverse(const Perm& p) {
    Perm r;
    r.img_.resize(p.degree());
    for (Point i = 0; i < p.degree(); ++i) r.img_[p.img_[i]] = i;
    return r;
  }

  // g^-1 * p * g, the conjugate of p by g.
  friend Perm conjugate(const Perm& p, const Perm& g) {
    if (p.degree() != g.degree())
      throw structural_error("conjugate: degree mismatch");
    Perm r;
    r.img_.resize(p.degree());
    for (Point i = 0; i < p.degree(); ++i) r.img_[g.img_[i]] = g.img_[p.img_[i]];
    return r;
  }

  friend bool commutes(const Perm& a, const Perm& b) {
    for (Point i = 0; i < a.degree(); ++i)
      if (a.img_[b.img_[i]] != b.img_[a.img_[i]]) return false;
    return true;
  }

  std::vector<Point> fixed_points() const {
    std::vector<Point> fix;
    for (Point i = 0; i < degree(); ++i)
      if (img_[i] == i) fix.push_back(i);
    return fix;
  }

  std::size_t fixed_point_count() const {
    std::size_t n = 0;
    for (Point i = 0; i < degree(); ++i) n += (img_[i] == i);
    return n;
  }

  std::uint64_t order() const {
    std::vector<bool> seen(degree(), false);
    std::uint64_t ord = 1;
    for (Point s = 0; s < degree(); ++s) {
      if (seen[s]) continue;
      std::uint64_t len = 0;
      Point t = s;
      while (!seen[t]) {
        seen[t] = true;
        t = img_[t];
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  Perm power(std::uint64_t e) const {
    Perm r = identity(degree());
    Perm b = *this;
    while (e) {
      if (e & 1) r = compose(r, b);
      b = compose(b, b);
      e >>= 1;
    }
    return r;
  }

  bool is_even() const {
    std::vector<bool> seen(degree(), false);
    std::size_t transpositions = 0;
    for (Point s = 0; s < degree(); ++s) {
      if (seen[s]) continue;
      std::size_t len = 0;
      Point t = s;
      while (!seen[t]) {
        seen[t] = true;
        t = img_[t];
        ++len;
      }
      transpositions += len - 1;
    }
    return transpositions % 2 == 0;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : img_) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }

  // 1-indexed disjoint cycle notation; "()" for the identity.
  std::string cycle_string() const {
    std::string out;
    std::vector<bool> seen(degree(), false);
    for (Point s = 0; s < degree(); ++s) {
      if (seen[s] || img_[s] == s) {
        seen[s] = true;
        continue;
      }
      out += '(';
      Point t = s;
      bool first = true;
      while (!seen[t]) {
        seen[t] = true;
        if (!first) out += ' ';
        out += std::to_string(t + 1);
        first = false;
        t = img_[t];
      }
      out += ')';
    }
    if (out.empty()) out = "()";
    return out;
  }

  // Builds a permutation of `degree` from 1-indexed cycles.
  static Perm from_cycles(Point degree,
                          const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    std::vector<bool> moved(degree, false);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        Point a = c[i], b = c[(i + 1) % c.size()];
        if (a < 1 || a > degree || b < 1 || b > degree)
          throw structural_error("cycle entry out of range");
        if (moved[a - 1]) throw structural_error("cycles are not disjoint");
        moved[a - 1] = true;
        img[a - 1] = b - 1;
      }
    }
    return from_images(std::move(img));
  }

private:
  std::vector<Point> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace fix3
