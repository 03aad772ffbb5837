// Square matrices over a small finite field, plus the polynomial helpers
// used by the Singer-cycle constructions (companion matrices, primitive
// polynomials with coefficients in an extension field, and the matrix of
// a field power map on a polynomial basis).

#pragma once

#include <vector>

#include "gf.hpp"

namespace fix3 {

struct MatrixFq {
  FieldPtr field;
  std::uint32_t n = 0;
  std::vector<Field::Elt> e;  // row-major

  MatrixFq() = default;
  MatrixFq(FieldPtr f, std::uint32_t n_) : field(std::move(f)), n(n_), e(n_ * n_, 0) {}

  Field::Elt& at(std::uint32_t i, std::uint32_t j) { return e[i * n + j]; }
  Field::Elt at(std::uint32_t i, std::uint32_t j) const { return e[i * n + j]; }

  static MatrixFq identity(FieldPtr f, std::uint32_t n) {
    MatrixFq m(std::move(f), n);
    for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = m.field->one();
    return m;
  }

  static MatrixFq scalar(FieldPtr f, std::uint32_t n, Field::Elt c) {
    MatrixFq m(std::move(f), n);
    for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
  }

  bool operator==(const MatrixFq& o) const { return e == o.e; }
};

inline MatrixFq matmul(const MatrixFq& A, const MatrixFq& B) {
  const Field& F = *A.field;
  MatrixFq C(A.field, A.n);
  for (std::uint32_t i = 0; i < A.n; ++i)
    for (std::uint32_t k = 0; k < A.n; ++k) {
      const Field::Elt a = A.at(i, k);
      if (!a) continue;
      for (std::uint32_t j = 0; j < A.n; ++j)
        if (B.at(k, j)) C.at(i, j) = F.add(C.at(i, j), F.mul(a, B.at(k, j)));
    }
  return C;
}

inline Field::Elt matdet(MatrixFq A) {
  const Field& F = *A.field;
  Field::Elt det = F.one();
  for (std::uint32_t c = 0; c < A.n; ++c) {
    std::uint32_t piv = c;
    while (piv < A.n && A.at(piv, c) == 0) ++piv;
    if (piv == A.n) return F.zero();
    if (piv != c) {
      for (std::uint32_t j = 0; j < A.n; ++j) std::swap(A.at(c, j), A.at(piv, j));
      det = F.neg(det);
    }
    det = F.mul(det, A.at(c, c));
    const Field::Elt inv = F.inv(A.at(c, c));
    for (std::uint32_t r = c + 1; r < A.n; ++r) {
      const Field::Elt f = F.mul(A.at(r, c), inv);
      if (!f) continue;
      for (std::uint32_t j = c; j < A.n; ++j)
        A.at(r, j) = F.sub(A.at(r, j), F.mul(f, A.at(c, j)));
    }
  }
  return det;
}

inline MatrixFq matinv(MatrixFq A) {
  const Field& F = *A.field;
  MatrixFq I = MatrixFq::identity(A.field, A.n);
  for (std::uint32_t c = 0; c < A.n; ++c) {
    std::uint32_t piv = c;
    while (piv < A.n && A.at(piv, c) == 0) ++piv;
    if (piv == A.n) throw arithmetic_error("matrix is singular");
    if (piv != c)
      for (std::uint32_t j = 0; j < A.n; ++j) {
        std::swap(A.at(c, j), A.at(piv, j));
        std::swap(I.at(c, j), I.at(piv, j));
      }
    const Field::Elt inv = F.inv(A.at(c, c));
    for (std::uint32_t j = 0; j < A.n; ++j) {
      A.at(c, j) = F.mul(A.at(c, j), inv);
      I.at(c, j) = F.mul(I.at(c, j), inv);
    }
    for (std::uint32_t r = 0; r < A.n; ++r) {
      if (r == c) continue;
      const Field::Elt f = A.at(r, c);
      if (!f) continue;
      for (std::uint32_t j = 0; j < A.n; ++j) {
        A.at(r, j) = F.sub(A.at(r, j), F.mul(f, A.at(c, j)));
        I.at(r, j) = F.sub(I.at(r, j), F.mul(f, I.at(c, j)));
      }
    }
  }
  return I;
}

// ---- polynomials with coefficients in the field (for Singer cycles) ----

// x*y mod (x^n + sum mod[i] x^i); all coefficient vectors have length n.
inline std::vector<Field::Elt> polmulmod(const Field& F,
                                         const std::vector<Field::Elt>& x,
                                         const std::vector<Field::Elt>& y,
                                         const std::vector<Field::Elt>& mod) {
  const std::size_t n = mod.size();
  std::vector<Field::Elt> r(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (x[i])
      for (std::size_t j = 0; j < n; ++j)
        if (y[j]) r[i + j] = F.add(r[i + j], F.mul(x[i], y[j]));
  for (std::size_t i = r.size(); i-- > n;) {
    const Field::Elt c = r[i];
    if (c)
      for (std::size_t j = 0; j < n; ++j)
        r[i - n + j] = F.sub(r[i - n + j], F.mul(c, mod[j]));
  }
  r.resize(n);
  return r;
}

inline std::vector<Field::Elt> polpowmod(const Field& F,
                                         std::vector<Field::Elt> b,
                                         std::uint64_t e,
                                         const std::vector<Field::Elt>& mod) {
  std::vector<Field::Elt> r(mod.size(), 0);
  r[0] = F.one();
  while (e) {
    if (e & 1) r = polmulmod(F, r, b, mod);
    b = polmulmod(F, b, b, mod);
    e >>= 1;
  }
  return r;
}

// Lexicographically least monic primitive polynomial of degree n over the
// field (coefficients c_0..c_{n-1} compared constant-term first).
inline std::vector<Field::Elt> least_primitive_poly(const Field& F,
                                                    std::uint32_t n) {
  std::uint64_t N = 1;
  for (std::uint32_t i = 0; i < n; ++i) N *= F.q();
  const std::uint64_t period = N - 1;
  const auto factors = detail::prime_factors(period);
  std::vector<Field::Elt> xpoly(n, 0);
  if (n > 1) xpoly[1] = F.one();
  std::vector<Field::Elt> one(n, 0);
  one[0] = F.one();

  std::uint64_t total = N;
  for (std::uint64_t k = 0; k < total; ++k) {
    std::vector<Field::Elt> mod(n);
    std::uint64_t t = k;
    for (std::uint32_t i = n; i-- > 0;) {
      mod[i] = static_cast<Field::Elt>(t % F.q());
      t /= F.q();
    }
    if (mod[0] == 0) continue;
    if (n == 1) {
      // x + c0: never primitive in the sense used here (handled by caller)
      continue;
    }
    if (polpowmod(F, xpoly, period, mod) != one) continue;
    bool prim = true;
    for (std::uint64_t f : factors)
      if (polpowmod(F, xpoly, period / f, mod) == one) {
        prim = false;
        break;
      }
    if (prim) return mod;
  }
  throw arithmetic_error("no primitive polynomial of requested degree");
}

// Companion matrix of the monic polynomial x^n + sum poly[i] x^i, acting on
// row vectors: row i holds the coordinates of x * x^i.
inline MatrixFq companion_matrix(const FieldPtr& field,
                                 const std::vector<Field::Elt>& poly) {
  const std::uint32_t n = static_cast<std::uint32_t>(poly.size());
  if (n == 0) throw arithmetic_error("empty polynomial");
  MatrixFq M(field, n);
  for (std::uint32_t i = 0; i + 1 < n; ++i) M.at(i, i + 1) = field->one();
  for (std::uint32_t j = 0; j < n; ++j) M.at(n - 1, j) = field->neg(poly[j]);
  return M;
}

// Matrix of y -> y^e on the basis 1, t, ..., t^{n-1} of GF(q)[t]/(poly):
// row i holds the coordinates of t^{i*e}. For e = q this is the Frobenius
// of the degree-n extension, which normalizes the Singer torus.
inline MatrixFq power_map_matrix(const FieldPtr& field,
                                 const std::vector<Field::Elt>& poly,
                                 std::uint64_t e) {
  const Field& F = *field;
  const std::uint32_t n = static_cast<std::uint32_t>(poly.size());
  std::vector<Field::Elt> tpoly(n, 0);
  if (n > 1) tpoly[1] = F.one();
  MatrixFq M(field, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    auto row = polpowmod(F, tpoly, static_cast<std::uint64_t>(i) * e, poly);
    for (std::uint32_t j = 0; j < n; ++j) M.at(i, j) = row[j];
  }
  return M;
}

}  // namespace fix3
