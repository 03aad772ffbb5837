// Named permutation groups and the example families under verification:
// symmetric/alternating groups, the two Mathieu groups (literal generator
// tables validated at construction), the PSL/PGL/PSU/PGU families built
// from matrix generators, affine semilinear groups, and the solvable
// example constructions (maximal-class 3-groups, field examples, Z3 x
// Frobenius, twisted field examples, Fukushima-type extensions).
//
// Every recipe is deterministic: same name and parameters give identical
// generator image tables. Randomized subgroup searches run under a fixed
// per-recipe seed schedule, and the seed that succeeded is recorded.

#pragma once

#include <numeric>
#include <optional>
#include <string>

#include "geometry.hpp"
#include "group.hpp"

namespace fix3 {

// ---------- symmetric / alternating / cyclic ----------

inline GroupPtr sym_group(Point n) {
  if (n < 1) throw structural_error("sym(n) needs n >= 1");
  if (n == 1) return make_group({Perm::identity(1)});
  std::vector<Perm> gens{Perm::from_cycles(n, {{1, 2}})};
  if (n > 2) {
    std::vector<Point> full(n);
    std::iota(full.begin(), full.end(), Point{1});
    gens.push_back(Perm::from_cycles(n, {full}));
  }
  return make_group(std::move(gens));
}

inline GroupPtr alt_group(Point n) {
  if (n < 3) throw structural_error("alt(n) needs n >= 3");
  std::vector<Perm> gens{Perm::from_cycles(n, {{1, 2, 3}})};
  if (n > 3) {
    std::vector<Point> c;
    if (n % 2 == 1) {
      c.resize(n);
      std::iota(c.begin(), c.end(), Point{1});
    } else {
      c.resize(n - 1);
      std::iota(c.begin(), c.end(), Point{2});
    }
    gens.push_back(Perm::from_cycles(n, {c}));
  }
  GroupPtr G = make_group(std::move(gens));
  GroupOrder fact = 1;
  for (Point i = 2; i <= n; ++i) fact = checked_mul(fact, i);
  if (G->order() != fact / 2)
    throw construction_error("alternating group construction failed");
  return G;
}

inline GroupPtr cyclic_group(Point n) {
  std::vector<Point> c(n);
  std::iota(c.begin(), c.end(), Point{1});
  return make_group({Perm::from_cycles(n, {c})});
}

// ---------- Mathieu groups: literal tables, validated ----------

inline GroupPtr mathieu11() {
  const Perm a = Perm::from_cycles(11, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}});
  const Perm b = Perm::from_cycles(11, {{3, 7, 11, 8}, {4, 10, 5, 6}});
  GroupPtr G = make_group({a, b}, ChainOptions{{}, 7920, {}});
  if (G->order() != 7920 || !G->is_transitive())
    throw construction_error("M11 generator table corrupted");
  return G;
}

inline GroupPtr mathieu22() {
  const Perm a = Perm::from_cycles(
      22, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11},
           {12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22}});
  const Perm b = Perm::from_cycles(22, {{1, 4, 5, 9, 3},
                                        {2, 8, 10, 7, 6},
                                        {12, 15, 16, 20, 14},
                                        {13, 19, 21, 18, 17}});
  const Perm c = Perm::from_cycles(22, {{1, 21},
                                        {2, 10, 8, 6},
                                        {3, 13, 4, 17},
                                        {5, 19, 9, 18},
                                        {11, 22},
                                        {12, 14, 16, 20}});
  GroupPtr G = make_group({a, b, c}, ChainOptions{{}, 443520, {}});
  if (G->order() != 443520 || !G->is_transitive())
    throw construction_error("M22 generator table corrupted");
  return G;
}

// ---------- linear and unitary families ----------

inline GroupOrder psl_order(std::uint32_t n, std::uint64_t q) {
  GroupOrder o = 1;
  for (std::uint32_t i = 0; i < n * (n - 1) / 2; ++i) o = checked_mul(o, q);
  std::uint64_t qi = q;
  for (std::uint32_t i = 2; i <= n; ++i) {
    qi *= q;
    o = checked_mul(o, qi - 1);
  }
  return o / std::gcd<GroupOrder>(n, q - 1);
}

inline GroupOrder psu_order(std::uint32_t n, std::uint64_t q) {
  GroupOrder o = 1;
  for (std::uint32_t i = 0; i < n * (n - 1) / 2; ++i) o = checked_mul(o, q);
  std::uint64_t qi = q;
  std::int64_t sign = 1;
  for (std::uint32_t i = 2; i <= n; ++i) {
    qi *= q;
    sign = -sign;
    o = checked_mul(o, static_cast<GroupOrder>(qi - sign));
  }
  return o / std::gcd<GroupOrder>(n, q + 1);
}

inline std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (!detail::is_prime_u64(p)) continue;
    std::uint64_t t = q;
    std::uint32_t a = 0;
    while (t % p == 0) {
      t /= p;
      ++a;
    }
    if (t == 1 && a > 0) return {p, a};
  }
  throw refusal_error("q is not a prime power");
}

// SL_n(q) from elementary transvections E_ij(1), E_ij(zeta).
inline std::vector<MatrixFq> sl_generators(const FieldPtr& F, std::uint32_t n) {
  std::vector<Field::Elt> vals{F->one()};
  if (F->q() > 2) vals.push_back(F->generator());
  std::vector<MatrixFq> gens;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (Field::Elt v : vals) {
        MatrixFq M = MatrixFq::identity(F, n);
        M.at(i, j) = v;
        gens.push_back(std::move(M));
      }
    }
  return gens;
}

struct ProjectiveGroup {
  GroupPtr group;
  FieldPtr field;
  PointGeometry geometry;
};

inline ProjectiveGroup psl_group(std::uint32_t n, std::uint64_t q) {
  if (q > 81) throw refusal_error("q beyond the supported bound 81");
  auto [p, a] = prime_power(q);
  FieldPtr F = make_field(p, a);
  PointGeometry geom = projective_points(F, n);
  const GroupOrder expect = psl_order(n, q);
  GroupPtr G = matrix_to_perm(sl_generators(F, n), geom,
                              ChainOptions{{}, expect, {}});
  if (G->order() != expect)
    throw construction_error("PSL image order mismatch");
  return {G, F, std::move(geom)};
}

// Unitary transvections x -> x + lam*h(x,v)*v at isotropic v, Tr(lam) = 0.
inline MatrixFq unitary_transvection(const FieldPtr& F, std::uint32_t n,
                                     std::uint64_t q,
                                     const std::vector<Field::Elt>& v,
                                     Field::Elt lam) {
  MatrixFq T = MatrixFq::identity(F, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const Field::Elt hi = F->pow(v[n - 1 - i], q);
    if (!hi) continue;
    const Field::Elt c = F->mul(lam, hi);
    for (std::uint32_t j = 0; j < n; ++j)
      T.at(i, j) = F->add(T.at(i, j), F->mul(c, v[j]));
  }
  return T;
}

inline ProjectiveGroup psu_group(std::uint32_t n, std::uint64_t q) {
  if (q > 81) throw refusal_error("q beyond the supported bound 81");
  if (n == 3 && q == 2)
    throw refusal_error("PSU3(2) is a Frobenius group, excluded here");
  auto [p, a] = prime_power(q);
  FieldPtr F = make_field(p, 2 * a);
  PointGeometry geom = hermitian_isotropic_points(F, n, q);
  // trace-zero scalars: GF(q) itself in characteristic 2, GF(q)*delta with
  // delta^q = -delta otherwise
  std::vector<Field::Elt> lams;
  if (p == 2) {
    lams.push_back(F->one());
    if (q > 2) lams.push_back(F->pow(F->generator(), q + 1));
  } else {
    lams.push_back(F->pow(F->generator(), (q + 1) / 2));
  }
  const GroupOrder expect = psu_order(n, q);
  // transvections at a spread of isotropic points, grown until the image
  // has the right order (lex-first points alone can sit in a parabolic)
  const std::size_t total = geom.points.size();
  std::vector<MatrixFq> gens;
  std::size_t npts = 8;
  for (;;) {
    gens.clear();
    const std::size_t stride = std::max<std::size_t>(1, total / npts);
    for (std::size_t i = 0; i < total && gens.size() < 2 * npts; i += stride)
      for (Field::Elt lam : lams)
        gens.push_back(unitary_transvection(F, n, q, geom.points[i], lam));
    GroupPtr G = matrix_to_perm(gens, geom, ChainOptions{{}, expect, {}});
    if (G->order() == expect) return {G, F, std::move(geom)};
    if (npts >= total)
      throw construction_error("SU transvections failed to generate");
    npts *= 2;
  }
}

// Singer permutation: projective action of the companion matrix of the
// least primitive cubic, of order q^2+q+1 on PG(2,q).
inline Perm singer_perm(const FieldPtr& F, const PointGeometry& geom) {
  const auto poly = least_primitive_poly(*F, 3);
  const Perm s = matrix_perm(geom, companion_matrix(F, poly));
  const std::uint64_t expect = F->q() * F->q() + F->q() + 1;
  if (s.order() != expect)
    throw construction_error("singer element has wrong order");
  return s;
}

inline ProjectiveGroup pgl3_group(std::uint64_t q) {
  if (q > 81) throw refusal_error("q beyond the supported bound 81");
  auto [p, a] = prime_power(q);
  FieldPtr F = make_field(p, a);
  PointGeometry geom = projective_points(F, 3);
  auto mats = sl_generators(F, 3);
  std::vector<Perm> perms;
  for (const auto& M : mats) perms.push_back(matrix_perm(geom, M));
  perms.push_back(singer_perm(F, geom));
  const GroupOrder expect =
      checked_mul(psl_order(3, q), std::gcd<GroupOrder>(3, q - 1));
  GroupPtr G = make_group(std::move(perms), ChainOptions{{}, expect, {}});
  if (G->order() != expect)
    throw construction_error("PGL3 image order mismatch");
  return {G, F, std::move(geom)};
}

inline ProjectiveGroup pgu3_group(std::uint64_t q) {
  ProjectiveGroup psu = psu_group(3, q);
  const FieldPtr& F = psu.field;
  MatrixFq D = MatrixFq::identity(F, 3);
  D.at(0, 0) = F->generator();
  D.at(2, 2) = F->inv(F->pow(F->generator(), q));
  std::vector<Perm> perms = psu.group->generators();
  perms.push_back(matrix_perm(psu.geometry, D));
  const GroupOrder expect =
      checked_mul(psu_order(3, q), std::gcd<GroupOrder>(3, q + 1));
  GroupPtr G = make_group(std::move(perms), ChainOptions{{}, expect, {}});
  if (G->order() != expect)
    throw construction_error("PGU3 image order mismatch");
  return {G, F, std::move(psu.geometry)};
}

// ---------- affine (semi)linear groups on field elements ----------

// AGL(1,q) acting on the q field elements (point i = element index i),
// extended by the Galois group when `galois_gens` asks for it.
inline GroupPtr affine_group(const FieldPtr& F, bool with_frobenius,
                             std::uint32_t frobenius_step = 1) {
  const Point deg = static_cast<Point>(F->q());
  std::vector<Perm> gens;
  for (std::uint32_t i = 0; i < F->a(); ++i) {
    // translation by the basis element t^i (element index p^i)
    Field::Elt basis = 1;
    for (std::uint32_t k = 0; k < i; ++k)
      basis = static_cast<Field::Elt>(basis * F->p());
    std::vector<Point> img(deg);
    for (Point x = 0; x < deg; ++x)
      img[x] = F->add(static_cast<Field::Elt>(x), basis);
    gens.push_back(Perm::from_images(std::move(img)));
  }
  {
    std::vector<Point> img(deg);
    for (Point x = 0; x < deg; ++x)
      img[x] = F->mul(F->generator(), static_cast<Field::Elt>(x));
    gens.push_back(Perm::from_images(std::move(img)));
  }
  if (with_frobenius) {
    std::vector<Point> img(deg);
    for (Point x = 0; x < deg; ++x)
      img[x] = F->frobenius(static_cast<Field::Elt>(x), frobenius_step);
    gens.push_back(Perm::from_images(std::move(img)));
  }
  return make_group(std::move(gens));
}

inline GroupPtr agl1(std::uint64_t q) {
  auto [p, a] = prime_power(q);
  GroupPtr G = affine_group(make_field(p, a), false);
  if (G->order() != q * (q - 1))
    throw construction_error("AGL(1,q) construction failed");
  return G;
}

// ---------- example cases ----------

struct ExampleCase {
  std::string name;
  GroupPtr group;
  Subgroup subgroup;
  GroupOrder expected_degree = 0;
  GroupOrder expected_stab_order = 0;
  bool natural = false;  // verify the group's own action, not a coset action
  std::uint64_t seed = 0;
  std::optional<Perm> normalizer_witness;  // conditional certificates
  std::vector<std::string> notes;
};

inline std::uint64_t recipe_seed(const std::string& name) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

inline ExampleCase singer_psl3(std::uint64_t q) {
  ProjectiveGroup P = psl_group(3, q);
  const Perm s = singer_perm(P.field, P.geometry);
  const GroupOrder d = std::gcd<GroupOrder>(3, q - 1);
  const Perm t = s.power(d);
  if (!P.group->contains(t))
    throw construction_error("singer power escapes PSL3");
  ExampleCase ex;
  ex.name = "singer_psl3:" + std::to_string(q);
  ex.group = P.group;
  ex.subgroup = Subgroup(P.group, {t}, (q * q + q + 1) / d);
  ex.expected_stab_order = (q * q + q + 1) / d;
  ex.expected_degree = P.group->order() / ex.expected_stab_order;
  return ex;
}

inline ExampleCase singer_pgl3(std::uint64_t q) {
  ProjectiveGroup P = pgl3_group(q);
  const Perm s = singer_perm(P.field, P.geometry);
  ExampleCase ex;
  ex.name = "singer_pgl3:" + std::to_string(q);
  ex.group = P.group;
  ex.subgroup = Subgroup(P.group, {s}, q * q + q + 1);
  ex.expected_stab_order = q * q + q + 1;
  ex.expected_degree = P.group->order() / ex.expected_stab_order;
  return ex;
}

inline ExampleCase torus_case(const std::string& name, GroupPtr G,
                              GroupOrder target) {
  ExampleCase ex;
  ex.name = name;
  ex.group = G;
  std::uint64_t used = 0;
  ex.subgroup = find_cyclic_subgroup(G, target, recipe_seed(name), 20000, &used);
  ex.seed = used;
  ex.expected_stab_order = target;
  ex.expected_degree = G->order() / target;
  return ex;
}

inline ExampleCase torus_psu3(std::uint64_t q) {
  if (q < 3) throw refusal_error("torus_psu3 needs q >= 3");
  GroupPtr G = psu_group(3, q).group;
  const GroupOrder m = (q * q - q + 1) / std::gcd<GroupOrder>(3, q + 1);
  return torus_case("torus_psu3:" + std::to_string(q), G, m);
}

inline ExampleCase torus_pgu3(std::uint64_t q) {
  if (q < 3) throw refusal_error("torus_pgu3 needs q >= 3");
  GroupPtr G = pgu3_group(q).group;
  const GroupOrder m = (q * q * q + 1) / (q + 1);
  return torus_case("torus_pgu3:" + std::to_string(q), G, m);
}

inline ExampleCase psu4_case() {
  GroupPtr G = psu_group(4, 3).group;
  ExampleCase ex = torus_case("psu4_case:3", G, 7);
  ex.name = "psu4_case:3";
  return ex;
}

// PSL4(3): cyclic 13 by seeded search. PSL4(5): the order-31 subgroup of a
// GL1(q^3) x GL1(q) torus built from a companion matrix, so that the field
// Frobenius can be written down as the order-3 normalizer witness that the
// conditional certificate must exhibit.
inline ExampleCase psl4_case(std::uint64_t q) {
  if (q == 3) {
    GroupPtr G = psl_group(4, 3).group;
    return torus_case("psl4_case:3", G, 13);
  }
  if (q != 5) throw refusal_error("psl4_case supports q in {3,5}");
  ProjectiveGroup P = psl_group(4, 5);
  const FieldPtr& F = P.field;
  const auto poly = least_primitive_poly(*F, 3);

  auto embed = [&](const MatrixFq& B) {
    MatrixFq M(F, 4);
    for (std::uint32_t i = 0; i < 3; ++i)
      for (std::uint32_t j = 0; j < 3; ++j) M.at(i, j) = B.at(i, j);
    MatrixFq B3(F, 3);
    for (std::uint32_t i = 0; i < 3; ++i)
      for (std::uint32_t j = 0; j < 3; ++j) B3.at(i, j) = B.at(i, j);
    M.at(3, 3) = F->inv(matdet(B3));
    return M;
  };

  const Perm torus = matrix_perm(P.geometry, embed(companion_matrix(F, poly)));
  const std::uint64_t to = torus.order();
  if (to % 31 != 0) throw construction_error("torus misses the 31-part");
  const Perm x = torus.power(to / 31);

  Perm u = matrix_perm(P.geometry, embed(power_map_matrix(F, poly, 5)));
  std::uint64_t uo = u.order();
  if (uo % 3 != 0) throw construction_error("frobenius witness lost order 3");
  if (uo != 3) {
    if ((uo / 3) % 3 == 0)
      throw construction_error("frobenius witness order not 3*coprime");
    u = u.power(uo / 3);
  }
  if (!P.group->contains(x) || !P.group->contains(u))
    throw construction_error("torus or witness escapes PSL4(5)");

  ExampleCase ex;
  ex.name = "psl4_case:5";
  ex.group = P.group;
  ex.subgroup = Subgroup(P.group, {x}, 31);
  ex.expected_stab_order = 31;
  ex.expected_degree = P.group->order() / 31;
  ex.normalizer_witness = u;
  return ex;
}

// ---------- solvable example families ----------

inline ExampleCase maxclass3(const std::string& kind) {
  GroupPtr P;
  if (kind == "wreath33") {
    P = make_group({Perm::from_cycles(9, {{1, 2, 3}}),
                    Perm::from_cycles(9, {{1, 4, 7}, {2, 5, 8}, {3, 6, 9}})});
    if (P->order() != 81) throw construction_error("Z3 wr Z3 has order 81");
  } else if (kind == "extraspecial27") {
    // Heisenberg group over GF(3), regular on its 27 elements
    // (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b'), point index a+3b+9c
    auto mulpt = [](Point idx, int da, int db) {
      const int a = idx % 3, b = (idx / 3) % 3, c = idx / 9;
      const int a2 = (a + da) % 3;
      const int b2 = (b + db) % 3;
      const int c2 = (c + a * db) % 3;
      return static_cast<Point>(a2 + 3 * b2 + 9 * c2);
    };
    std::vector<Point> xi(27), yi(27);
    for (Point i = 0; i < 27; ++i) {
      xi[i] = mulpt(i, 1, 0);
      yi[i] = mulpt(i, 0, 1);
    }
    P = make_group({Perm::from_images(std::move(xi)),
                    Perm::from_images(std::move(yi))});
    if (P->order() != 27)
      throw construction_error("extraspecial group has order 27");
  } else {
    throw refusal_error("maxclass3 kind must be wreath33 or extraspecial27");
  }

  // first order-3 subgroup with |C_P(H)| = 9, in enumeration order
  const auto elems = P->elements();
  std::optional<Perm> found;
  for (const Perm& x : elems) {
    if (x.order() != 3) continue;
    if (found) break;
    std::size_t cent = 0;
    for (const Perm& g : elems) cent += commutes(g, x);
    if (cent == 9) found = x;
  }
  if (!found)
    throw construction_error(
        "no order-3 subgroup with centralizer of order 9 (group is not of "
        "maximal class)");

  ExampleCase ex;
  ex.name = "maxclass3:" + kind;
  ex.group = P;
  ex.subgroup = Subgroup(P, {*found}, 3);
  ex.expected_stab_order = 3;
  ex.expected_degree = P->order() / 3;
  return ex;
}

inline ExampleCase field3p(std::uint32_t p) {
  if (!detail::is_prime_u64(p) || p > 5)
    throw refusal_error("field3p needs a prime p with 3^p <= 3^5");
  FieldPtr F = make_field(3, p);
  GroupPtr G = affine_group(F, true);
  const GroupOrder expect = F->q() * (F->q() - 1) * p;
  if (G->order() != expect)
    throw construction_error("AGammaL(1,3^p) construction failed");
  ExampleCase ex;
  ex.name = "field3p:" + std::to_string(p);
  ex.group = G;
  ex.subgroup = pointwise_stabilizer(G, {0});
  if (ex.subgroup.order() != (F->q() - 1) * p)
    throw construction_error("stabilizer of zero has the wrong order");
  ex.expected_stab_order = ex.subgroup.order();
  ex.expected_degree = F->q();
  ex.natural = true;  // the natural action is the coset action (A regular)
  return ex;
}

// Validates that F is a Frobenius group with complement H, then forms
// Z3 x F acting on disjoint supports with designated subgroup 1 x H.
inline ExampleCase z3xfrob(const GroupPtr& F, const Subgroup& H,
                           const std::string& label) {
  if (H.order() <= 1 || H.order() >= F->order())
    throw refusal_error("Frobenius complement must be proper and nontrivial");
  const auto helems = H.group->elements();
  std::unordered_set<Perm, PermHash> hset(helems.begin(), helems.end());
  F->for_each_element([&](const Perm& g) {
    if (hset.count(g)) return true;
    std::size_t common = 0;
    for (const Perm& h : helems) common += hset.count(conjugate(h, g));
    if (common != 1)  // identity only; H^g = H would give |H| hits
      throw refusal_error("F is not Frobenius with the given complement");
    return true;
  });

  const Point df = F->degree();
  const Point deg = df + 3;
  auto embed_f = [&](const Perm& p) {
    std::vector<Point> img(deg);
    std::iota(img.begin(), img.end(), Point{0});
    for (Point i = 0; i < df; ++i) img[3 + i] = 3 + p[i];
    return Perm::from_images(std::move(img));
  };
  std::vector<Perm> gens;
  {
    std::vector<Point> z(deg);
    std::iota(z.begin(), z.end(), Point{0});
    z[0] = 1;
    z[1] = 2;
    z[2] = 0;
    gens.push_back(Perm::from_images(std::move(z)));
  }
  for (const Perm& g : F->generators()) gens.push_back(embed_f(g));
  GroupPtr G = make_group(std::move(gens));
  if (G->order() != 3 * F->order())
    throw construction_error("Z3 x F construction failed");
  std::vector<Perm> hgens;
  for (const Perm& h : H.group->generators()) hgens.push_back(embed_f(h));
  ExampleCase ex;
  ex.name = "z3xfrob:" + label;
  ex.group = G;
  ex.subgroup = Subgroup(G, std::move(hgens), H.order());
  ex.expected_stab_order = H.order();
  ex.expected_degree = G->order() / H.order();
  return ex;
}

inline ExampleCase z3xfrob_agl(std::uint64_t q) {
  GroupPtr F = agl1(q);
  return z3xfrob(F, pointwise_stabilizer(F, {0}), "agl1-" + std::to_string(q));
}

inline ExampleCase twisted(std::uint32_t p, std::uint32_t r) {
  if (!detail::is_prime_u64(p) || !detail::is_prime_u64(r))
    throw refusal_error("twisted needs primes p, r");
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < 3 * r; ++i) size *= p;
  if (size > 729) throw refusal_error("twisted supports p^(3r) <= 3^6");
  FieldPtr F = make_field(p, 3 * r);
  // Galois subgroup of order 3 inside the cyclic group of order 3r
  GroupPtr G = affine_group(F, true, r);
  const GroupOrder expect = F->q() * (F->q() - 1) * 3;
  if (G->order() != expect)
    throw construction_error("twisted affine construction failed");
  // designated subgroup: the multiplicative group M
  std::vector<Point> img(F->q());
  for (Point x = 0; x < F->q(); ++x)
    img[x] = F->mul(F->generator(), static_cast<Field::Elt>(x));
  ExampleCase ex;
  ex.name = "twisted:" + std::to_string(p) + "," + std::to_string(r);
  ex.group = G;
  ex.subgroup = Subgroup(G, {Perm::from_images(std::move(img))}, F->q() - 1);
  ex.expected_stab_order = F->q() - 1;
  ex.expected_degree = 3 * F->q();
  return ex;
}

// Fukushima-type extension: G = H : <alpha> on the cosets of <alpha>.
// All preconditions are validated; any failure names the violated one.
inline ExampleCase fukushima(const GroupPtr& H, const Perm& alpha,
                             const std::string& label) {
  const std::uint64_t o = alpha.order();
  if (o < 3 || o % 2 == 0 || !detail::is_prime_u64(o))
    throw refusal_error("fukushima: alpha must have odd prime order");
  if (std::gcd<std::uint64_t>(o, H->order()) != 1)
    throw refusal_error("fukushima: order of alpha must be coprime to |H|");
  for (const Perm& h : H->generators())
    if (!H->contains(conjugate(h, alpha)))
      throw refusal_error("fukushima: alpha does not normalize H");
  std::size_t cent = 0;
  H->for_each_element([&](const Perm& h) {
    cent += commutes(h, alpha);
    return true;
  });
  if (cent != 3) throw refusal_error("fukushima: |C_H(alpha)| must be 3");

  std::vector<Perm> gens = H->generators();
  gens.push_back(alpha);
  GroupPtr G = make_group(std::move(gens));
  if (G->order() != checked_mul(H->order(), o))
    throw construction_error("fukushima: <H, alpha> is not H : <alpha>");
  ExampleCase ex;
  ex.name = "fukushima:" + label;
  ex.group = G;
  ex.subgroup = Subgroup(G, {alpha}, o);
  ex.expected_stab_order = o;
  ex.expected_degree = G->order() / o;
  return ex;
}

// The concrete instance: H = Z3 x (Z2)^3 on 3+8 points, alpha of order 7
// acting on (Z2)^3 = GF(8)+ as multiplication by a primitive element.
inline ExampleCase fukushima_default() {
  FieldPtr F8 = make_field(2, 3);
  const Point deg = 11;
  std::vector<Perm> hgens;
  hgens.push_back(Perm::from_cycles(deg, {{1, 2, 3}}));
  for (std::uint32_t i = 0; i < 3; ++i) {
    Field::Elt basis = 1;
    for (std::uint32_t k = 0; k < i; ++k) basis = static_cast<Field::Elt>(basis * 2);
    std::vector<Point> img(deg);
    std::iota(img.begin(), img.end(), Point{0});
    for (Point e = 0; e < 8; ++e) img[3 + e] = 3 + F8->add(e, basis);
    hgens.push_back(Perm::from_images(std::move(img)));
  }
  GroupPtr H = make_group(std::move(hgens));
  std::vector<Point> img(deg);
  std::iota(img.begin(), img.end(), Point{0});
  for (Point e = 0; e < 8; ++e) img[3 + e] = 3 + F8->mul(F8->generator(), e);
  return fukushima(H, Perm::from_images(std::move(img)), "z3x2cube-7");
}

// ---------- alternating-group case list ----------

inline std::vector<ExampleCase> alt_cases() {
  std::vector<ExampleCase> out;
  {
    GroupPtr G = alt_group(5);
    ExampleCase ex;
    ex.name = "a5-syl2";
    ex.group = G;
    ex.subgroup = sylow_subgroup(G, 2);
    ex.expected_stab_order = 4;
    ex.expected_degree = 15;
    out.push_back(std::move(ex));
  }
  {
    GroupPtr G = sym_group(5);
    ExampleCase ex;
    ex.name = "s5-natural";
    ex.group = G;
    ex.subgroup = pointwise_stabilizer(G, {0});
    ex.expected_stab_order = 24;
    ex.expected_degree = 5;
    ex.natural = true;
    out.push_back(std::move(ex));
  }
  {
    GroupPtr G = alt_group(6);
    ExampleCase ex;
    ex.name = "a6-natural";
    ex.group = G;
    ex.subgroup = pointwise_stabilizer(G, {0});
    ex.expected_stab_order = 60;
    ex.expected_degree = 6;
    ex.natural = true;
    out.push_back(std::move(ex));
  }
  {
    GroupPtr G = alt_group(6);
    ExampleCase ex;
    ex.name = "a6-order24";
    ex.group = G;
    std::uint64_t used = 0;
    ex.subgroup = find_subgroup_of_order(G, 24, recipe_seed("a6-order24"),
                                         20000, &used);
    ex.seed = used;
    ex.expected_stab_order = 24;
    ex.expected_degree = 15;
    out.push_back(std::move(ex));
  }
  {
    GroupPtr G = alt_group(7);
    ExampleCase ex;
    ex.name = "a7-psl27";
    ex.group = G;
    std::uint64_t used = 0;
    ex.subgroup = find_subgroup_of_order(G, 168, recipe_seed("a7-psl27"),
                                         20000, &used);
    ex.seed = used;
    ex.expected_stab_order = 168;
    ex.expected_degree = 15;
    out.push_back(std::move(ex));
  }
  {
    GroupPtr G = alt_group(7);
    ExampleCase ex;
    ex.name = "a7-syl7";
    ex.group = G;
    ex.subgroup = sylow_subgroup(G, 7);
    ex.expected_stab_order = 7;
    ex.expected_degree = 360;
    out.push_back(std::move(ex));
  }
  {
    GroupPtr G = alt_group(8);
    ExampleCase ex;
    ex.name = "a8-syl7";
    ex.group = G;
    ex.subgroup = sylow_subgroup(G, 7);
    ex.expected_stab_order = 7;
    ex.expected_degree = 2880;
    out.push_back(std::move(ex));
  }
  return out;
}

}  // namespace fix3
