// Point geometries for the matrix-group actions: projective points of
// GF(q)^n and isotropic points of the anti-diagonal Hermitian form on
// GF(q^2)^n, plus the conversion of matrix generators into permutation
// generators on those points.
//
// Canonical representative: first nonzero coordinate scaled to 1; the
// point list is sorted lexicographically by coordinate index vectors, and
// this order fixes the permutation-degree labeling cited in reports.

#pragma once

#include <map>
#include <vector>

#include "group.hpp"
#include "matrix.hpp"

namespace fix3 {

struct PointGeometry {
  enum class Kind { projective, hermitian_isotropic };

  Kind kind;
  FieldPtr field;        // GF(q), or GF(q^2) for the hermitian geometry
  std::uint32_t n = 0;   // vector-space dimension
  std::uint64_t q0 = 0;  // hermitian only: the base q with conj x -> x^q0
  std::vector<std::vector<Field::Elt>> points;
  std::map<std::vector<Field::Elt>, Point> index;

  std::vector<Field::Elt> canonical(std::vector<Field::Elt> v) const {
    const Field& F = *field;
    std::size_t fn = 0;
    while (fn < v.size() && v[fn] == 0) ++fn;
    if (fn == v.size()) throw arithmetic_error("zero vector has no point");
    const Field::Elt s = F.inv(v[fn]);
    for (auto& c : v) c = F.mul(s, c);
    return v;
  }

  Point lookup(const std::vector<Field::Elt>& canon) const {
    auto it = index.find(canon);
    if (it == index.end())
      throw structural_error("vector is not a point of the geometry");
    return it->second;
  }
};

namespace detail {

inline void enumerate_canonical_vectors(
    const Field& F, std::uint32_t n,
    const std::function<void(const std::vector<Field::Elt>&)>& emit) {
  // canonical form: leading zeros, then a 1, then arbitrary coordinates
  std::vector<Field::Elt> v(n, 0);
  for (std::uint32_t lead = 0; lead < n; ++lead) {
    std::fill(v.begin(), v.end(), 0);
    v[lead] = F.one();
    const std::uint32_t free = n - lead - 1;
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < free; ++i) count *= F.q();
    for (std::uint64_t k = 0; k < count; ++k) {
      std::uint64_t t = k;
      for (std::uint32_t i = 0; i < free; ++i) {
        v[lead + 1 + i] = static_cast<Field::Elt>(t % F.q());
        t /= F.q();
      }
      emit(v);
    }
  }
}

}  // namespace detail

inline PointGeometry projective_points(FieldPtr field, std::uint32_t n) {
  if (n < 2) throw structural_error("projective geometry needs n >= 2");
  PointGeometry g;
  g.kind = PointGeometry::Kind::projective;
  g.field = std::move(field);
  g.n = n;
  detail::enumerate_canonical_vectors(
      *g.field, n, [&](const std::vector<Field::Elt>& v) { g.points.push_back(v); });
  std::sort(g.points.begin(), g.points.end());
  for (Point i = 0; i < g.points.size(); ++i) g.index[g.points[i]] = i;
  // (q^n - 1)/(q - 1) accumulated as 1 + q + ... + q^{n-1}
  const std::uint64_t q = g.field->q();
  std::uint64_t expect = 0;
  for (std::uint32_t i = 0, pw = 1; i < n; ++i) {
    expect += pw;
    pw = static_cast<std::uint32_t>(pw * q);
  }
  if (g.points.size() != expect)
    throw construction_error("projective point count mismatch");
  return g;
}

// Anti-diagonal Hermitian form h(x,y) = sum_i x_i * y_{n-1-i}^q over
// GF(q^2); isotropic points are those with h(v,v) = 0.
inline PointGeometry hermitian_isotropic_points(FieldPtr field, std::uint32_t n,
                                                std::uint64_t q) {
  if (n != 3 && n != 4)
    throw structural_error("hermitian geometry supported for n in {3,4}");
  if (field->q() != q * q)
    throw structural_error("hermitian geometry needs the field GF(q^2)");
  PointGeometry g;
  g.kind = PointGeometry::Kind::hermitian_isotropic;
  g.field = std::move(field);
  g.n = n;
  g.q0 = q;
  const Field& F = *g.field;
  detail::enumerate_canonical_vectors(F, n, [&](const std::vector<Field::Elt>& v) {
    Field::Elt h = F.zero();
    for (std::uint32_t i = 0; i < n; ++i)
      h = F.add(h, F.mul(v[i], F.pow(v[n - 1 - i], q)));
    if (h == F.zero()) g.points.push_back(v);
  });
  std::sort(g.points.begin(), g.points.end());
  for (Point i = 0; i < g.points.size(); ++i) g.index[g.points[i]] = i;
  const std::uint64_t expect =
      n == 3 ? q * q * q + 1 : (q * q * q + 1) * (q * q + 1);
  if (g.points.size() != expect)
    throw construction_error("isotropic point count mismatch");
  return g;
}

// Permutation induced by a matrix on the geometry (row vectors, v -> v M).
// Throws when the matrix moves a point off the geometry.
inline Perm matrix_perm(const PointGeometry& geom, const MatrixFq& M) {
  const Field& F = *geom.field;
  std::vector<Point> img(geom.points.size());
  std::vector<Field::Elt> w(geom.n);
  for (Point i = 0; i < geom.points.size(); ++i) {
    const auto& v = geom.points[i];
    for (std::uint32_t j = 0; j < geom.n; ++j) {
      Field::Elt s = F.zero();
      for (std::uint32_t k = 0; k < geom.n; ++k)
        if (v[k] && M.at(k, j)) s = F.add(s, F.mul(v[k], M.at(k, j)));
      w[j] = s;
    }
    img[i] = geom.lookup(geom.canonical(w));
  }
  return Perm::from_images(std::move(img));
}

// The permutation group induced by matrix generators; the kernel of the
// action on projective points is the scalar subgroup, so the image is the
// corresponding projective group.
inline GroupPtr matrix_to_perm(const std::vector<MatrixFq>& gens,
                               const PointGeometry& geom,
                               ChainOptions opts = {}) {
  if (gens.empty()) throw structural_error("no matrix generators");
  std::vector<Perm> perms;
  perms.reserve(gens.size());
  for (const auto& M : gens) perms.push_back(matrix_perm(geom, M));
  return make_group(std::move(perms), std::move(opts));
}

}  // namespace fix3
