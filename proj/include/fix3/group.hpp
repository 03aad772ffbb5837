// Permutation groups: generators plus a lazily built stabilizer chain,
// orbit and stabilizer queries, bounded element enumeration, and the
// brute-force subgroup machinery (centralizers, normalizers, closures,
// Sylow subgroups, seeded searches).
//
// Everything is immutable once the chain exists; groups are shared through
// shared_ptr and may be used from several verification threads at once.

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "chain.hpp"
#include "perm.hpp"

namespace fix3 {

inline constexpr GroupOrder kDefaultEnumBound = 10'000'000;

// FIX3_MAX_ENUM overrides the element-enumeration bound process-wide.
inline GroupOrder enumeration_bound() {
  static const GroupOrder bound = [] {
    if (const char* s = std::getenv("FIX3_MAX_ENUM")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(s, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<GroupOrder>(v);
    }
    return kDefaultEnumBound;
  }();
  return bound;
}

class PermGroup {
public:
  explicit PermGroup(std::vector<Perm> generators, ChainOptions opts = {})
      : gens_(std::move(generators)), opts_(std::move(opts)) {
    if (gens_.empty()) throw structural_error("a group needs generators");
    degree_ = gens_.front().degree();
    for (const Perm& g : gens_)
      if (g.degree() != degree_)
        throw structural_error("generators of unequal degree");
  }

  Point degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  const StabilizerChain& chain() const {
    std::call_once(chain_once_, [this] {
      chain_ = std::make_unique<StabilizerChain>(gens_, degree_, opts_);
    });
    return *chain_;
  }

  GroupOrder order() const { return chain().order(); }

  bool contains(const Perm& p) const { return chain().contains(p); }

  bool is_trivial() const { return order() == 1; }

  std::vector<Point> orbit(Point w) const {
    if (w >= degree_) throw structural_error("point out of range");
    std::vector<Point> orb{w};
    std::vector<bool> seen(degree_, false);
    seen[w] = true;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const Perm& g : gens_) {
        Point t = g[orb[i]];
        if (!seen[t]) {
          seen[t] = true;
          orb.push_back(t);
        }
      }
    return orb;
  }

  bool is_transitive() const { return orbit(0).size() == degree_; }

  // All orbits, each listed in discovery order starting from its smallest
  // point; orbits ordered by smallest point.
  std::vector<std::vector<Point>> orbits() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(degree_, false);
    for (Point s = 0; s < degree_; ++s) {
      if (seen[s]) continue;
      std::vector<Point> orb{s};
      seen[s] = true;
      for (std::size_t i = 0; i < orb.size(); ++i)
        for (const Perm& g : gens_) {
          Point t = g[orb[i]];
          if (!seen[t]) {
            seen[t] = true;
            orb.push_back(t);
          }
        }
      out.push_back(std::move(orb));
    }
    return out;
  }

  Perm random_element(std::uint64_t seed) const {
    SplitMix64 rng(seed);
    return chain().random_element(rng);
  }

  // Visits each element exactly once; refuses when the order exceeds the
  // bound (callers that can work structurally must do so instead).
  void for_each_element(const std::function<bool(const Perm&)>& visit,
                        GroupOrder bound = 0) const {
    const GroupOrder b = bound ? bound : enumeration_bound();
    if (order() > b)
      throw refusal_error("element enumeration refused: order " +
                          std::to_string(order()) + " exceeds bound " +
                          std::to_string(b));
    chain().for_each_element(visit);
  }

  std::vector<Perm> elements(GroupOrder bound = 0) const {
    std::vector<Perm> out;
    out.reserve(order());
    for_each_element(
        [&](const Perm& p) {
          out.push_back(p);
          return true;
        },
        bound);
    return out;
  }

private:
  Point degree_ = 0;
  std::vector<Perm> gens_;
  ChainOptions opts_;
  mutable std::once_flag chain_once_;
  mutable std::unique_ptr<StabilizerChain> chain_;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

inline GroupPtr make_group(std::vector<Perm> gens, ChainOptions opts = {}) {
  return std::make_shared<PermGroup>(std::move(gens), std::move(opts));
}

// A subgroup referencing its parent. Generators are validated against the
// parent's membership test at construction.
struct Subgroup {
  GroupPtr parent;
  GroupPtr group;

  Subgroup() = default;
  Subgroup(GroupPtr parent_, std::vector<Perm> gens, GroupOrder known_order = 0)
      : parent(std::move(parent_)) {
    if (gens.empty()) gens.push_back(Perm::identity(parent->degree()));
    for (const Perm& g : gens)
      if (!parent->contains(g))
        throw structural_error("subgroup generator outside parent group");
    ChainOptions opts;
    opts.known_order = known_order;
    group = make_group(std::move(gens), std::move(opts));
    if (parent->order() % group->order() != 0)
      throw structural_error("subgroup order does not divide parent order");
  }

  GroupOrder order() const { return group->order(); }
  GroupOrder index() const { return parent->order() / group->order(); }
};

// Pointwise stabilizer of `points`, via a chain rooted at those points.
inline Subgroup pointwise_stabilizer(const GroupPtr& G,
                                     const std::vector<Point>& points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] >= G->degree()) throw structural_error("point out of range");
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw structural_error("stabilizer points must be distinct");
  }
  if (points.empty()) return Subgroup(G, G->generators(), G->order());

  // Reuse the group's chain when its base already starts with the points.
  const StabilizerChain* ch = &G->chain();
  std::unique_ptr<StabilizerChain> rebased;
  bool prefix_ok = ch->base_length() >= points.size();
  for (std::size_t i = 0; prefix_ok && i < points.size(); ++i)
    prefix_ok = ch->base_point(i) == points[i];
  if (!prefix_ok) {
    ChainOptions opts;
    opts.base_prefix = points;
    opts.known_order = G->order();
    opts.seeds = ch->stabilizer_generators(0);
    rebased = std::make_unique<StabilizerChain>(G->generators(), G->degree(),
                                                opts);
    ch = rebased.get();
  }
  auto gens = ch->stabilizer_generators(points.size());
  GroupOrder stab_order = 1;
  for (std::size_t i = points.size(); i < ch->base_length(); ++i)
    stab_order = checked_mul(stab_order, ch->orbit(i).size());
  return Subgroup(G, std::move(gens), stab_order);
}

// Exact centralizer by full enumeration. Refuses beyond the bound.
inline Subgroup centralizer_bruteforce(const GroupPtr& G, const Perm& x,
                                       GroupOrder bound = 0) {
  std::vector<Perm> found;
  G->for_each_element(
      [&](const Perm& g) {
        if (commutes(g, x)) found.push_back(g);
        return true;
      },
      bound);
  return Subgroup(G, std::move(found));
}

// Exact normalizer of H by full enumeration over G: keeps g with H^g = H,
// decided by membership of h^g for H's generators plus order equality.
inline Subgroup normalizer_bruteforce(const GroupPtr& G, const Subgroup& H,
                                      GroupOrder bound = 0) {
  std::vector<Perm> found;
  G->for_each_element(
      [&](const Perm& g) {
        for (const Perm& h : H.group->generators())
          if (!H.group->contains(conjugate(h, g))) return true;
        found.push_back(g);
        return true;
      },
      bound);
  Subgroup N(G, std::move(found));
  // H^g = H needs order equality as well; generator membership alone only
  // gives H^g <= H, which for finite groups is already equality, but the
  // check is cheap and catches chain defects.
  if (N.order() % H.order() != 0)
    throw construction_error("normalizer does not contain the subgroup");
  return N;
}

// Closure of `gens` inside the parent, as an explicit element set.
// Aborts (returns empty) when the closure would exceed `cap`.
inline std::vector<Perm> closure_elements(const std::vector<Perm>& gens,
                                          std::size_t cap) {
  const Point deg = gens.front().degree();
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> frontier{Perm::identity(deg)};
  seen.insert(frontier.front());
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (const Perm& g : gens) {
      Perm t = compose(frontier[i], g);
      if (seen.insert(t).second) {
        if (seen.size() > cap) return {};
        frontier.push_back(std::move(t));
      }
    }
  }
  return frontier;
}

// Smallest-seed deterministic search for a cyclic subgroup of order n:
// draws random elements, keeps the first whose order is a multiple of n,
// and powers it down.
inline Subgroup find_cyclic_subgroup(const GroupPtr& G, GroupOrder n,
                                     std::uint64_t seed, int budget = 20000,
                                     std::uint64_t* seed_used = nullptr) {
  for (int k = 0; k < budget; ++k) {
    Perm g = G->random_element(seed + static_cast<std::uint64_t>(k));
    const std::uint64_t o = g.order();
    if (o % n == 0) {
      if (seed_used) *seed_used = seed + static_cast<std::uint64_t>(k);
      return Subgroup(G, {g.power(o / n)}, n);
    }
  }
  throw refusal_error("cyclic subgroup search exhausted its retry budget (seed " +
                      std::to_string(seed) + ", target order " +
                      std::to_string(n) + ")");
}

// Deterministic seeded search for a subgroup of the exact given order,
// generated by two random elements.
inline Subgroup find_subgroup_of_order(const GroupPtr& G, GroupOrder n,
                                       std::uint64_t seed, int budget = 20000,
                                       std::uint64_t* seed_used = nullptr) {
  for (int k = 0; k < budget; ++k) {
    Perm a = G->random_element(seed + 2 * static_cast<std::uint64_t>(k));
    Perm b = G->random_element(seed + 2 * static_cast<std::uint64_t>(k) + 1);
    auto closure = closure_elements({a, b}, n);
    if (closure.size() == n) {
      if (seed_used) *seed_used = seed + 2 * static_cast<std::uint64_t>(k);
      return Subgroup(G, {a, b}, n);
    }
  }
  throw refusal_error("subgroup-of-order search exhausted its retry budget (seed " +
                      std::to_string(seed) + ", target order " +
                      std::to_string(n) + ")");
}

inline GroupOrder p_part(GroupOrder n, GroupOrder p) {
  GroupOrder r = 1;
  while (n % p == 0) {
    n /= p;
    r = checked_mul(r, p);
  }
  return r;
}

// Sylow p-subgroup by normalizer climbing: start from a p-element and
// repeatedly adjoin p-elements normalizing the current subgroup. Needs
// element enumeration, so only for groups under the bound.
inline Subgroup sylow_subgroup(const GroupPtr& G, GroupOrder p,
                               GroupOrder bound = 0) {
  const GroupOrder target = p_part(G->order(), p);
  if (target == 1) return Subgroup(G, {Perm::identity(G->degree())}, 1);

  std::vector<Perm> pelems;
  G->for_each_element(
      [&](const Perm& g) {
        const std::uint64_t o = g.order();
        if (o > 1 && p_part(o, p) == o) pelems.push_back(g);
        return true;
      },
      bound);

  std::vector<Perm> gens{pelems.front()};
  auto cur = closure_elements(gens, target);
  while (cur.size() < target) {
    std::unordered_set<Perm, PermHash> cur_set(cur.begin(), cur.end());
    bool grew = false;
    for (const Perm& g : pelems) {
      if (cur_set.count(g)) continue;
      bool normalizes = true;
      for (const Perm& h : gens)
        if (!cur_set.count(conjugate(h, g))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      auto bigger = closure_elements(
          [&] {
            auto v = gens;
            v.push_back(g);
            return v;
          }(),
          target);
      if (bigger.empty() || bigger.size() % p != 0) continue;
      gens.push_back(g);
      cur = std::move(bigger);
      grew = true;
      break;
    }
    if (!grew)
      throw construction_error("sylow climb stalled below the full p-part");
  }
  return Subgroup(G, gens, target);
}

}  // namespace fix3
