// The permutation action of G on right cosets Hg, and the stabilizer tree
// that drives the hypothesis checker.
//
// Coset identity is decided through canonical representatives: the unique
// element of Hg minimizing the image tuple of H's chain base, found by
// greedy descent through H's transversals. The greedy strategy is exact
// because the minimization at each level is independent of the deeper
// choices; the full-enumeration oracle test over every subgroup of sym(4)
// and sym(5) pins this down before anything else relies on it.

#pragma once

#include <deque>
#include <optional>
#include <unordered_map>

#include "group.hpp"

namespace fix3 {

// Canonical representative r of the coset Hg: r minimizes
// (b_0^r, b_1^r, ...) over the coset, where b_i is H's chain base.
inline Perm canonical_coset_rep(const Subgroup& H, const Perm& g) {
  const StabilizerChain& ch = H.group->chain();
  Perm r = g;
  for (std::size_t level = 0; level < ch.base_length(); ++level) {
    const auto& orbit = ch.orbit(level);
    Point best = orbit.front();
    Point best_img = r[best];
    for (Point pt : orbit)
      if (r[pt] < best_img) {
        best = pt;
        best_img = r[pt];
      }
    if (best != ch.base_point(level))
      r = compose(ch.transversal(level, best), r);
  }
  return r;
}

struct CosetAction {
  GroupPtr parent;
  Subgroup subgroup;
  Point degree = 0;
  std::vector<Perm> representatives;   // canonical rep per coset index
  std::vector<Perm> generator_images;  // one per parent generator
  GroupPtr image;
  bool faithful = false;
};

inline constexpr GroupOrder kDefaultDegreeCap = 100'000;

inline CosetAction coset_action(const GroupPtr& G, Subgroup H,
                                GroupOrder degree_cap = kDefaultDegreeCap,
                                bool certify_faithful = true) {
  const GroupOrder index = G->order() / H.order();
  if (index > degree_cap)
    throw refusal_error("coset degree " + std::to_string(index) +
                        " exceeds the cap " + std::to_string(degree_cap) +
                        "; use the structural tier");
  CosetAction act;
  act.parent = G;
  act.subgroup = std::move(H);
  act.degree = static_cast<Point>(index);

  std::unordered_map<std::uint64_t, std::vector<Point>> buckets;
  auto find_or_insert = [&](Perm rep) -> std::pair<Point, bool> {
    const std::uint64_t h = rep.hash();
    auto& bucket = buckets[h];
    for (Point idx : bucket)
      if (act.representatives[idx] == rep) return {idx, false};
    const Point idx = static_cast<Point>(act.representatives.size());
    bucket.push_back(idx);
    act.representatives.push_back(std::move(rep));
    return {idx, true};
  };

  find_or_insert(canonical_coset_rep(act.subgroup, Perm::identity(G->degree())));
  const std::size_t ngens = G->generators().size();
  std::vector<std::vector<Point>> images(ngens);
  for (Point i = 0; i < act.representatives.size(); ++i) {
    for (std::size_t gi = 0; gi < ngens; ++gi) {
      Perm next = canonical_coset_rep(
          act.subgroup, compose(act.representatives[i], G->generators()[gi]));
      auto [idx, fresh] = find_or_insert(std::move(next));
      images[gi].resize(act.degree, 0);
      images[gi][i] = idx;
    }
    if (act.representatives.size() > index)
      throw construction_error("coset enumeration exceeded |G:H|");
  }
  if (act.representatives.size() != index)
    throw construction_error("coset enumeration found the wrong index");

  for (auto& img : images)
    act.generator_images.push_back(Perm::from_images(std::move(img)));

  // The image chain is rooted at coset 0 and seeded with the images of
  // H's generators, which stabilize coset 0; with the parent order as the
  // known bound the chain completes without Schreier processing whenever
  // the action is faithful.
  ChainOptions opts;
  opts.base_prefix = {0};
  opts.known_order = G->order();
  for (const Perm& h : act.subgroup.group->generators()) {
    std::vector<Point> img(act.degree);
    for (Point i = 0; i < act.degree; ++i)
      img[i] = find_or_insert(
                   canonical_coset_rep(act.subgroup,
                                       compose(act.representatives[i], h)))
                   .first;
    opts.seeds.push_back(Perm::from_images(std::move(img)));
  }
  act.image = make_group(act.generator_images, std::move(opts));

  if (certify_faithful) {
    act.faithful = act.image->order() == G->order();
    // point stabilizer of coset 0, recomputed from the chain
    const Subgroup stab0 = pointwise_stabilizer(act.image, {0});
    if (checked_mul(stab0.order(), act.degree) != act.image->order())
      throw construction_error("coset stabilizer bookkeeping is wrong");
    if (act.faithful && stab0.order() != act.subgroup.order())
      throw construction_error("stabilizer of coset 0 is not H");
  }
  return act;
}

// ---------- stabilizer tree ----------

struct StabNode {
  std::vector<Point> tuple;
  GroupOrder order = 1;
  GroupPtr group;  // materialized only when nontrivial
};

struct StabTree {
  std::vector<std::vector<StabNode>> levels;  // levels[d] = d-point tuples
};

// Tuple-stabilizer tree to the given depth: level d holds, for each orbit
// representative of the level-(d-1) stabilizer on the remaining points,
// the pointwise stabilizer of the extended tuple. By transitivity the
// level-d nodes cover all d-subsets up to conjugacy. Subtrees below a
// trivial stabilizer are pruned (their stabilizers stay trivial).
inline StabTree stab_tree(const GroupPtr& G, std::size_t depth = 4) {
  if (!G->is_transitive())
    throw structural_error("stab_tree needs a transitive group");
  StabTree tree;
  tree.levels.resize(depth + 1);
  tree.levels[0].push_back({{}, G->order(), G});

  for (std::size_t d = 0; d < depth; ++d) {
    for (const StabNode& node : tree.levels[d]) {
      if (node.order == 1) continue;
      // orbits of the node stabilizer on the remaining points
      std::vector<char> done(G->degree(), 0);
      for (Point t : node.tuple) done[t] = 1;
      for (Point s = 0; s < G->degree(); ++s) {
        if (done[s]) continue;
        std::vector<Point> orbit{s};
        done[s] = 1;
        for (std::size_t i = 0; i < orbit.size(); ++i)
          for (const Perm& g : node.group->generators()) {
            const Point t = g[orbit[i]];
            if (!done[t]) {
              done[t] = 1;
              orbit.push_back(t);
            }
          }
        StabNode child;
        child.tuple = node.tuple;
        child.tuple.push_back(s);
        child.order = node.order / orbit.size();
        if (child.order > 1) {
          if (orbit.size() == 1) {
            child.group = node.group;  // every generator fixes s already
          } else {
            Subgroup stab = pointwise_stabilizer(node.group, {s});
            if (stab.order() != child.order)
              throw construction_error("stabilizer order mismatch in tree");
            child.group = stab.group;
          }
        }
        tree.levels[d + 1].push_back(std::move(child));
      }
    }
  }
  return tree;
}

}  // namespace fix3
