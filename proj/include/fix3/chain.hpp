// Deterministic Schreier-Sims stabilizer chains.
//
// Strong generators carry a level: the number of leading base points they
// fix. The orbit at level i is computed under all strong generators of
// level >= i. Transversals are stored as Schreier vectors (parent point +
// generator index) and materialized on demand.
//
// Two construction options matter elsewhere in the library:
//   base_prefix  - forced leading base points (pointwise stabilizers,
//                  coset-action images rooted at coset 0)
//   known_order  - upper bound equal to the expected group order; the
//                  build stops as soon as the orbit-size product reaches
//                  it (the product never exceeds the true order, so this
//                  is sound), which makes seeded coset-image chains cheap.
//   seeds        - verified group members inserted as strong generators
//                  before Schreier processing begins.

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "perm.hpp"

namespace fix3 {

using GroupOrder = std::uint64_t;

inline GroupOrder checked_mul(GroupOrder a, GroupOrder b) {
  GroupOrder r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("group order exceeds 64-bit range");
  return r;
}

// splitmix64: deterministic across platforms, unlike <random> distributions.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

struct ChainOptions {
  std::vector<Point> base_prefix;
  GroupOrder known_order = 0;  // 0 = unknown
  std::vector<Perm> seeds;
};

class StabilizerChain {
public:
  StabilizerChain(const std::vector<Perm>& generators, Point degree,
                  ChainOptions opts = {})
      : degree_(degree) {
    for (Point b : opts.base_prefix) {
      if (b >= degree_) throw structural_error("base point out of range");
      push_base(b);
    }
    known_ = opts.known_order;
    for (const Perm& g : generators) add_element(g);
    for (const Perm& g : opts.seeds) add_element(g);
    if (!done()) complete(0);
    // A verified chain sifts every strong generator to the identity.
    for (const auto& sg : strong_)
      if (!sift(sg.perm).is_identity())
        throw construction_error("stabilizer chain failed self-check");
  }

  Point degree() const { return degree_; }
  std::size_t base_length() const { return base_.size(); }
  Point base_point(std::size_t i) const { return base_[i]; }
  const std::vector<Point>& orbit(std::size_t level) const {
    return orbit_order_[level];
  }

  GroupOrder order() const {
    GroupOrder o = 1;
    for (const auto& orb : orbit_order_) o = checked_mul(o, orb.size());
    return o;
  }

  // Residue of p after dividing out transversal elements level by level.
  Perm sift(Perm p) const {
    for (std::size_t i = 0; i < base_.size(); ++i) {
      Point t = p[base_[i]];
      if (t == base_[i]) continue;
      if (sv_gen_[i][t] < 0) return p;
      // multiply by u_t^-1 incrementally along the Schreier vector path
      while (t != base_[i]) {
        const int gi = sv_gen_[i][t];
        p = compose(p, strong_inv_[gi]);
        t = p[base_[i]];
      }
    }
    return p;
  }

  bool contains(const Perm& p) const {
    if (p.degree() != degree_) throw structural_error("degree mismatch");
    return sift(p).is_identity();
  }

  // Transversal element u with base_point(level)^u = pt.
  Perm transversal(std::size_t level, Point pt) const {
    std::vector<int> word;
    Point t = pt;
    while (t != base_[level]) {
      const int gi = sv_gen_[level][t];
      word.push_back(gi);
      t = sv_prev_[level][t];
    }
    Perm u = Perm::identity(degree_);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      u = compose(u, strong_[*it].perm);
    return u;
  }

  bool in_orbit(std::size_t level, Point pt) const {
    return sv_gen_[level][pt] >= -1;
  }

  // Strong generators fixing the first `level` base points; together they
  // generate the pointwise stabilizer of those base points.
  std::vector<Perm> stabilizer_generators(std::size_t level) const {
    std::vector<Perm> gens;
    for (const auto& sg : strong_)
      if (sg.level >= level) gens.push_back(sg.perm);
    return gens;
  }

  // Uniformly random element: one uniform transversal pick per level.
  Perm random_element(SplitMix64& rng) const {
    Perm g = Perm::identity(degree_);
    for (std::size_t i = base_.size(); i-- > 0;) {
      Point pt = orbit_order_[i][rng.below(orbit_order_[i].size())];
      g = compose(g, transversal(i, pt));
    }
    return g;
  }

  // Visits every element exactly once in mixed-radix transversal order.
  // The visitor may return false to stop early.
  void for_each_element(const std::function<bool(const Perm&)>& visit) const {
    if (base_.empty()) {
      visit(Perm::identity(degree_));
      return;
    }
    // Elements are enumerated as u_0^-1 * u_1^-1 * ... so the outermost
    // loop runs over the (large) level-0 orbit and each of its transversal
    // elements is materialized exactly once. Inverses enumerate the same
    // group.
    std::vector<std::vector<Perm>> inv_cache(base_.size());
    for (std::size_t i = 1; i < base_.size(); ++i) {
      inv_cache[i].reserve(orbit_order_[i].size());
      for (Point pt : orbit_order_[i])
        inv_cache[i].push_back(inverse(transversal(i, pt)));
    }
    bool stop = false;
    dfs_enumerate(0, Perm::identity(degree_), inv_cache, visit, stop);
  }

private:
  struct StrongGen {
    Perm perm;
    std::size_t level;
  };

  Point degree_ = 0;
  GroupOrder known_ = 0;
  std::vector<Point> base_;
  std::vector<StrongGen> strong_;
  std::vector<Perm> strong_inv_;
  std::vector<std::vector<Point>> orbit_order_;  // discovery order per level
  std::vector<std::vector<int>> sv_gen_;   // -2 root, -1 unset, else gen idx
  std::vector<std::vector<Point>> sv_prev_;

  bool done() const { return known_ != 0 && order() == known_; }

  void push_base(Point b) {
    base_.push_back(b);
    orbit_order_.push_back({b});
    sv_gen_.emplace_back(degree_, -1);
    sv_prev_.emplace_back(degree_, 0);
    sv_gen_.back()[b] = -2;
  }

  std::size_t level_of(const Perm& g) const {
    std::size_t l = 0;
    while (l < base_.size() && g[base_[l]] == base_[l]) ++l;
    return l;
  }

  void recompute_orbit(std::size_t i) {
    auto& order = orbit_order_[i];
    auto& svg = sv_gen_[i];
    auto& svp = sv_prev_[i];
    std::fill(svg.begin(), svg.end(), -1);
    order.assign(1, base_[i]);
    svg[base_[i]] = -2;
    for (std::size_t k = 0; k < order.size(); ++k) {
      Point pt = order[k];
      for (std::size_t gi = 0; gi < strong_.size(); ++gi) {
        if (strong_[gi].level < i) continue;
        Point t = strong_[gi].perm[pt];
        if (svg[t] == -1) {
          svg[t] = static_cast<int>(gi);
          svp[t] = pt;
          order.push_back(t);
        }
      }
    }
  }

  // Sift from `start`; returns the residue and the level where it stuck.
  std::pair<Perm, std::size_t> sift_from(Perm p, std::size_t start) const {
    for (std::size_t i = start; i < base_.size(); ++i) {
      Point t = p[base_[i]];
      if (t == base_[i]) continue;
      if (sv_gen_[i][t] < 0) return {p, i};
      while (t != base_[i]) {
        p = compose(p, strong_inv_[sv_gen_[i][t]]);
        t = p[base_[i]];
      }
    }
    return {p, base_.size()};
  }

  bool insert_residue(Perm r) {
    if (r.is_identity()) return false;
    auto [res, lvl] = sift_from(std::move(r), 0);
    if (res.is_identity()) return false;
    store(std::move(res));
    return true;
  }

  void store(Perm r) {
    if (level_of(r) == base_.size()) {
      Point m = 0;
      while (r[m] == m) ++m;
      push_base(m);
    }
    const std::size_t lvl = level_of(r);
    strong_inv_.push_back(inverse(r));
    strong_.push_back({std::move(r), lvl});
    for (std::size_t i = 0; i <= lvl && i < base_.size(); ++i)
      recompute_orbit(i);
  }

  void add_element(const Perm& g) {
    if (g.degree() != degree_) throw structural_error("degree mismatch");
    if (done()) return;
    insert_residue(g);
  }

  void complete(std::size_t i) {
    if (i >= base_.size() || done()) return;
    for (;;) {
      recompute_orbit(i);
      bool added = false;
      const auto order_snapshot = orbit_order_[i];
      for (Point pt : order_snapshot) {
        Perm u = transversal(i, pt);
        for (std::size_t gi = 0; gi < strong_.size(); ++gi) {
          if (strong_[gi].level < i) continue;
          Point t = strong_[gi].perm[pt];
          Perm schreier = compose(u, strong_[gi].perm);
          // divide by the transversal of t
          auto [res, lvl] = sift_from(std::move(schreier), i);
          // sift_from at level i strips u_t first, then deeper levels
          if (res.is_identity()) continue;
          store(std::move(res));
          if (done()) return;
          complete(lvl > i ? lvl : i + 1);
          if (done()) return;
          added = true;
          break;
        }
        if (added) break;
      }
      if (!added) break;
    }
    complete(i + 1);
  }

  void dfs_enumerate(std::size_t level, const Perm& prefix,
                     const std::vector<std::vector<Perm>>& inv_cache,
                     const std::function<bool(const Perm&)>& visit,
                     bool& stop) const {
    if (stop) return;
    if (level == base_.size()) {
      if (!visit(prefix)) stop = true;
      return;
    }
    const auto& orbit = orbit_order_[level];
    for (std::size_t k = 0; k < orbit.size() && !stop; ++k) {
      Perm step = level == 0 ? inverse(transversal(0, orbit[k]))
                             : inv_cache[level][k];
      dfs_enumerate(level + 1, compose(prefix, step), inv_cache, visit, stop);
    }
  }
};

}  // namespace fix3
