// Small finite fields GF(p^a), table-driven.
//
// Elements are indices 0..q-1 encoding coefficient vectors base p
// (index = sum c_i p^i, c_0 the constant term). The modulus is the
// lexicographically least primitive polynomial of degree a over GF(p)
// (coefficients compared constant-term first), so every construction in
// the library is reproducible without external polynomial tables.
// Primitivity implies irreducibility; both are verified at construction.

#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "perm.hpp"

namespace fix3 {

class arithmetic_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> f;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) f.push_back(n);
  return f;
}

}  // namespace detail

class Field {
public:
  using Elt = std::uint32_t;

  Field(std::uint32_t p, std::uint32_t a) : p_(p), a_(a) {
    if (!detail::is_prime_u64(p)) throw arithmetic_error("p must be prime");
    if (a == 0) throw arithmetic_error("extension degree must be positive");
    q_ = 1;
    for (std::uint32_t i = 0; i < a; ++i) q_ *= p;
    if (q_ > 4096) throw refusal_error("field too large for this library");
    if (a_ > 1) {
      modulus_ = least_primitive_modulus();
      if (!poly_irreducible(modulus_))
        throw arithmetic_error("modulus is not irreducible");
    }
    build_tables();
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t a() const { return a_; }
  std::uint64_t q() const { return q_; }
  // c_0..c_{a-1} of the monic modulus x^a + sum c_i x^i (a > 1 only).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  // Multiplicative generator: the modulus root for a > 1 (primitive by
  // construction), the least primitive root mod p otherwise.
  Elt generator() const { return gen_; }

  Elt add(Elt x, Elt y) const { return add_[x * q_ + y]; }
  Elt sub(Elt x, Elt y) const { return add(x, neg(y)); }
  Elt neg(Elt x) const { return neg_[x]; }
  Elt mul(Elt x, Elt y) const { return mul_[x * q_ + y]; }
  Elt inv(Elt x) const {
    if (x == 0) throw arithmetic_error("inverse of zero");
    return inv_[x];
  }

  Elt pow(Elt x, std::uint64_t e) const {
    Elt r = 1, b = x;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  // x -> x^(p^k)
  Elt frobenius(Elt x, std::uint32_t k = 1) const {
    Elt r = x;
    for (std::uint32_t i = 0; i < k; ++i) r = frob_[r];
    return r;
  }

  std::uint64_t mult_order(Elt x) const {
    if (x == 0) throw arithmetic_error("zero has no multiplicative order");
    std::uint64_t o = 1;
    Elt t = x;
    while (t != 1) {
      t = mul(t, x);
      ++o;
    }
    return o;
  }

  std::vector<std::uint32_t> coeffs(Elt x) const {
    std::vector<std::uint32_t> c(a_);
    for (std::uint32_t i = 0; i < a_; ++i) {
      c[i] = x % p_;
      x /= p_;
    }
    return c;
  }

private:
  std::uint32_t p_, a_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  Elt gen_ = 0;
  std::vector<Elt> add_, mul_, neg_, inv_, frob_;

  std::vector<std::uint32_t> poly_mul_mod(const std::vector<std::uint32_t>& x,
                                          const std::vector<std::uint32_t>& y,
                                          const std::vector<std::uint32_t>& mod)
      const {
    const std::size_t a = mod.size();
    std::vector<std::uint32_t> r(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i])
        for (std::size_t j = 0; j < y.size(); ++j)
          r[i + j] = (r[i + j] + x[i] * y[j]) % p_;
    for (std::size_t i = r.size(); i-- > a;) {
      const std::uint32_t c = r[i];
      if (c)
        for (std::size_t j = 0; j < a; ++j)
          r[i - a + j] = (r[i - a + j] + (p_ - 1) * c % p_ * mod[j]) % p_;
    }
    r.resize(a, 0);
    return r;
  }

  bool poly_irreducible(const std::vector<std::uint32_t>& mod) const {
    // trial division by all monic polynomials of degree 1..a/2
    const std::uint32_t a = a_;
    for (std::uint32_t d = 1; d <= a / 2; ++d) {
      std::uint64_t count = 1;
      for (std::uint32_t i = 0; i < d; ++i) count *= p_;
      for (std::uint64_t k = 0; k < count; ++k) {
        std::vector<std::uint32_t> div(d + 1);
        std::uint64_t t = k;
        for (std::uint32_t i = 0; i < d; ++i) {
          div[i] = t % p_;
          t /= p_;
        }
        div[d] = 1;
        std::vector<std::uint32_t> r(mod.begin(), mod.end());
        r.push_back(1);  // monic x^a term
        for (std::size_t i = r.size(); i-- > d;) {
          const std::uint32_t c = r[i];
          if (c)
            for (std::uint32_t j = 0; j <= d; ++j)
              r[i - d + j] = (r[i - d + j] + (p_ - 1) * c % p_ * div[j]) % p_;
        }
        bool zero = true;
        for (std::uint32_t i = 0; i < d; ++i) zero = zero && r[i] == 0;
        if (zero) return false;
      }
    }
    return true;
  }

  bool poly_primitive(const std::vector<std::uint32_t>& mod) const {
    if (mod[0] == 0) return false;
    const std::uint64_t n = q_ - 1;
    std::vector<std::uint32_t> one(a_, 0), x(a_, 0);
    one[0] = 1;
    if (a_ == 1) return false;
    x[1] = 1;
    auto powx = [&](std::uint64_t e) {
      std::vector<std::uint32_t> r = one, b = x;
      while (e) {
        if (e & 1) r = poly_mul_mod(r, b, mod);
        b = poly_mul_mod(b, b, mod);
        e >>= 1;
      }
      return r;
    };
    if (powx(n) != one) return false;
    for (std::uint64_t f : detail::prime_factors(n))
      if (powx(n / f) == one) return false;
    return true;
  }

  std::vector<std::uint32_t> least_primitive_modulus() const {
    // iterate (c0,...,c_{a-1}) in lexicographic order, c0 most significant
    for (std::uint64_t k = 0; k < q_; ++k) {
      std::vector<std::uint32_t> mod(a_);
      std::uint64_t t = k;
      for (std::uint32_t i = a_; i-- > 0;) {
        mod[i] = static_cast<std::uint32_t>(t % p_);
        t /= p_;
      }
      if (poly_primitive(mod)) return mod;
    }
    throw arithmetic_error("no primitive polynomial found");
  }

  void build_tables() {
    const std::size_t q = q_;
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.resize(q);
    frob_.resize(q);
    auto decode = [&](Elt x) {
      std::vector<std::uint32_t> c(a_);
      for (std::uint32_t i = 0; i < a_; ++i) {
        c[i] = x % p_;
        x /= p_;
      }
      return c;
    };
    auto encode = [&](const std::vector<std::uint32_t>& c) {
      Elt x = 0;
      for (std::uint32_t i = a_; i-- > 0;)
        x = static_cast<Elt>(x * p_ + c[i] % p_);
      return x;
    };
    for (Elt x = 0; x < q; ++x) {
      auto cx = decode(x);
      for (Elt y = 0; y < q; ++y) {
        auto cy = decode(y);
        std::vector<std::uint32_t> s(a_);
        for (std::uint32_t i = 0; i < a_; ++i) s[i] = (cx[i] + cy[i]) % p_;
        add_[x * q + y] = encode(s);
        if (a_ == 1) {
          mul_[x * q + y] = static_cast<Elt>((std::uint64_t)x * y % p_);
        } else {
          mul_[x * q + y] = encode(poly_mul_mod(cx, cy, modulus_));
        }
      }
      std::vector<std::uint32_t> n(a_);
      for (std::uint32_t i = 0; i < a_; ++i) n[i] = (p_ - cx[i]) % p_;
      neg_[x] = encode(n);
    }
    for (Elt x = 1; x < q; ++x) {
      // inverse by Fermat
      Elt r = 1, b = x;
      std::uint64_t e = q_ - 2;
      while (e) {
        if (e & 1) r = mul_[r * q + b];
        b = mul_[b * q + b];
        e >>= 1;
      }
      inv_[x] = r;
    }
    inv_[0] = 0;
    for (Elt x = 0; x < q; ++x) {
      Elt r = 1, b = x;
      std::uint64_t e = p_;
      while (e) {
        if (e & 1) r = mul_[r * q + b];
        b = mul_[b * q + b];
        e >>= 1;
      }
      frob_[x] = r;
    }
    if (a_ > 1) {
      gen_ = static_cast<Elt>(p_);  // the modulus root x, primitive
    } else {
      for (Elt g = 2; g < q; ++g)
        if (mult_order(g) == q_ - 1) {
          gen_ = g;
          break;
        }
      if (q_ == 2) gen_ = 1;
    }
  }
};

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr make_field(std::uint32_t p, std::uint32_t a) {
  return std::make_shared<Field>(p, a);
}

}  // namespace fix3
