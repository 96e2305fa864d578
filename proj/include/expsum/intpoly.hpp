#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "expsum/bigrat.hpp"
#include "expsum/errors.hpp"
#include "expsum/interval.hpp"

namespace expsum {

// Dense exact univariate polynomial: integer coefficient core (ascending
// degree) times a global rational scale factor.
class IntPoly {
 public:
  IntPoly() = default;

  IntPoly(std::vector<BigInt> coeffs, BigRat scale = BigRat(1))
      : c_(std::move(coeffs)), scale_(std::move(scale)) {
    if (scale_ == 0) throw DomainError("IntPoly: zero scale");
    normalize();
  }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(const BigInt& v) { return IntPoly({v}); }
  static IntPoly monomial(const BigInt& v, std::size_t deg) {
    std::vector<BigInt> c(deg + 1, BigInt(0));
    c[deg] = v;
    return IntPoly(std::move(c));
  }

  static IntPoly from_rat_coeffs(const std::vector<BigRat>& q) {
    BigInt l(1);
    for (const auto& x : q) {
      BigInt d = x.get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<BigInt> c(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      BigRat t = q[i] * l;
      t.canonicalize();
      c[i] = t.get_num();
    }
    return IntPoly(std::move(c), BigRat(BigInt(1), l));
  }

  bool is_zero() const { return c_.empty(); }
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigRat& scale() const { return scale_; }
  BigInt coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : BigInt(0);
  }
  BigRat rat_coeff(std::size_t i) const {
    BigRat r = BigRat(coeff(i)) * scale_;
    r.canonicalize();
    return r;
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (a.rat_coeff(i) != b.rat_coeff(i)) return false;
    return true;
  }

  // --- evaluation -----------------------------------------------------

  BigRat eval(const BigRat& x) const {
    BigRat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    acc *= scale_;
    acc.canonicalize();
    return acc;
  }

  // Sign of p(x) at an exact rational point; scale-aware.
  int sign_at(const BigRat& x) const {
    if (is_zero()) return 0;
    // core(x) = sum c_i x^i; sign via numerator of Horner with common den
    BigRat v(0);
    for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return sgn(v) * sgn(scale_);
  }

  Interval eval(const Interval& x, mpfr_prec_t prec) const {
    Interval acc = Interval::from_long(0, prec);
    for (std::size_t i = c_.size(); i-- > 0;)
      acc = acc * x + Interval::from_int(c_[i], prec);
    return acc * Interval::from_rat(scale_, prec);
  }

  CInterval eval(const CInterval& z, mpfr_prec_t prec) const {
    CInterval acc{Interval::from_long(0, prec), Interval::from_long(0, prec)};
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * z;
      acc.re = acc.re + Interval::from_int(c_[i], prec);
    }
    Interval s = Interval::from_rat(scale_, prec);
    return {acc.re * s, acc.im * s};
  }

  // --- algebra --------------------------------------------------------

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigRat> q(std::max(a.c_.size(), b.c_.size()), BigRat(0));
    for (std::size_t i = 0; i < q.size(); ++i)
      q[i] = a.rat_coeff(i) + b.rat_coeff(i);
    return from_rat_coeffs(q);
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigRat> q(std::max(a.c_.size(), b.c_.size()), BigRat(0));
    for (std::size_t i = 0; i < q.size(); ++i)
      q[i] = a.rat_coeff(i) - b.rat_coeff(i);
    return from_rat_coeffs(q);
  }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c), a.scale_ * b.scale_);
  }

  IntPoly derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<BigInt> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * BigInt(static_cast<long>(i));
    return IntPoly(std::move(d), scale_);
  }

  // p(x) -> p(q*x), denominators cleared into the scale.
  IntPoly compose_scale(const BigRat& q) const {
    if (is_zero()) return IntPoly();
    std::vector<BigRat> out(c_.size());
    BigRat p(1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      out[i] = BigRat(c_[i]) * p;
      out[i].canonicalize();
      p *= q;
    }
    IntPoly r = from_rat_coeffs(out);
    r.scale_ *= scale_;
    r.scale_.canonicalize();
    return r;
  }

  // p(x) -> p(x + 1) (Taylor shift by one, integer core unchanged in size).
  IntPoly shift1() const {
    std::vector<BigInt> d = c_;
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      for (std::size_t j = d.size() - 1; j-- > i;) d[j] += d[j + 1];
    return IntPoly(std::move(d), scale_);
  }

  // p(x) -> p(x + t) for rational t (denominator cleared into the scale).
  IntPoly shift(const BigRat& t) const {
    if (is_zero()) return IntPoly();
    // p(x + t) = p_scaled(den*x + num)/... : substitute via Horner in poly form
    std::vector<BigRat> acc{BigRat(0)};
    for (std::size_t i = c_.size(); i-- > 0;) {
      // acc = acc*(x+t) + c_i
      std::vector<BigRat> next(acc.size() + 1, BigRat(0));
      for (std::size_t j = 0; j < acc.size(); ++j) {
        next[j + 1] += acc[j];
        next[j] += acc[j] * t;
      }
      next[0] += c_[i];
      while (next.size() > 1 && next.back() == 0) next.pop_back();
      acc = std::move(next);
    }
    IntPoly r = from_rat_coeffs(acc);
    r.scale_ *= scale_;
    r.scale_.canonicalize();
    return r;
  }

  // Coefficient reversal: x^deg * p(1/x).
  IntPoly reversed() const {
    std::vector<BigInt> d(c_.rbegin(), c_.rend());
    // trailing zeros of p become leading zeros after reversal; keep exact
    // degree bookkeeping by trimming in normalize()
    return IntPoly(std::move(d), scale_);
  }

  // Number of sign changes in the coefficient sequence (Descartes).
  int sign_variations() const {
    int v = 0, last = 0;
    for (const auto& x : c_) {
      int s = sgn(x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  // Multiplicity of the root at 0 (number of trailing zero coefficients).
  std::size_t valuation() const {
    std::size_t v = 0;
    while (v < c_.size() && c_[v] == 0) ++v;
    return v == c_.size() ? 0 : v;
  }

  // Divide out x^k (requires valuation >= k).
  IntPoly shifted_down(std::size_t k) const {
    if (valuation() < k) throw DomainError("shifted_down: not divisible");
    return IntPoly(std::vector<BigInt>(c_.begin() + static_cast<long>(k), c_.end()), scale_);
  }

  // Integer content of the core (positive).
  BigInt content() const {
    BigInt g(0);
    for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
  }

  // Primitive part with positive leading coefficient; scale dropped.
  IntPoly primitive() const {
    if (is_zero()) return IntPoly();
    BigInt g = content();
    if (sgn(c_.back()) < 0) g = -g;
    std::vector<BigInt> d(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] / g;
    return IntPoly(std::move(d));
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (c_.empty()) scale_ = 1;
    scale_.canonicalize();
  }

  std::vector<BigInt> c_;
  BigRat scale_{1};
};

// Exact gcd over Z via the primitive PRS; returns a primitive polynomial.
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
  a = a.primitive();
  b = b.primitive();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    // pseudo-remainder of a by b
    std::vector<BigInt> r = a.coeffs();
    const std::vector<BigInt>& d = b.coeffs();
    BigInt lead = d.back();
    while (r.size() >= d.size() && !r.empty()) {
      BigInt q = r.back();
      std::size_t off = r.size() - d.size();
      for (std::size_t i = 0; i < r.size(); ++i) r[i] *= lead;
      for (std::size_t i = 0; i < d.size(); ++i) r[off + i] -= q * d[i];
      while (!r.empty() && r.back() == 0) r.pop_back();
    }
    a = b;
    b = r.empty() ? IntPoly() : IntPoly(std::move(r)).primitive();
  }
  return a.primitive();
}

// Exact division a / b over Q (b must divide a); result made primitive.
inline IntPoly poly_exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("poly_exact_div: zero divisor");
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree())
    throw DomainError("poly_exact_div: degree mismatch");
  std::vector<BigRat> num(a.degree() + 1);
  for (std::size_t i = 0; i <= a.degree(); ++i) num[i] = a.rat_coeff(i);
  std::vector<BigRat> den(b.degree() + 1);
  for (std::size_t i = 0; i <= b.degree(); ++i) den[i] = b.rat_coeff(i);
  std::vector<BigRat> q(num.size() - den.size() + 1, BigRat(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    BigRat coef = num[k + den.size() - 1] / den.back();
    q[k] = coef;
    for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= coef * den[i];
  }
  return IntPoly::from_rat_coeffs(q).primitive();
}

// Musser square-free decomposition. Returns (factor, multiplicity) pairs
// with multiplicities ascending; the product of factor^mult equals the
// primitive part of p up to sign.
inline std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(
    const IntPoly& p) {
  std::vector<std::pair<IntPoly, unsigned>> out;
  IntPoly a = p.primitive();
  if (a.is_zero() || a.degree() == 0) return out;
  IntPoly g = poly_gcd(a, a.derivative());
  if (g.degree() == 0) {
    out.emplace_back(a, 1);
    return out;
  }
  IntPoly c = poly_exact_div(a, g);  // product of distinct factors
  unsigned mult = 0;
  while (c.degree() > 0) {
    ++mult;
    IntPoly d = g.degree() > 0 ? poly_gcd(c, g) : IntPoly::constant(BigInt(1));
    IntPoly block = d.degree() > 0 ? poly_exact_div(c, d) : c;
    if (block.degree() > 0) out.emplace_back(block, mult);
    c = d;
    if (g.degree() > 0 && d.degree() > 0)
      g = poly_exact_div(g, d);
    else if (g.degree() > 0 && c.degree() == 0)
      break;
  }
  return out;
}

// Square-free part: product of the distinct irreducible factors.
inline IntPoly squarefree_part(const IntPoly& p) {
  IntPoly a = p.primitive();
  if (a.is_zero() || a.degree() == 0) return a;
  IntPoly g = poly_gcd(a, a.derivative());
  if (g.degree() == 0) return a;
  return poly_exact_div(a, g);
}

// Cheap square-freeness certificate: if gcd(p, p') = 1 modulo some prime
// not dividing the leading coefficients, then p is square-free over Z.
inline bool squarefree_certificate_mod_p(const IntPoly& p) {
  static const unsigned long primes[] = {1000003UL, 2000003UL, 3000017UL};
  IntPoly d = p.derivative();
  if (d.is_zero()) return false;
  for (unsigned long m : primes) {
    auto reduce = [&](const IntPoly& q) {
      std::vector<unsigned long> r(q.coeffs().size());
      for (std::size_t i = 0; i < r.size(); ++i) {
        BigInt t = q.coeffs()[i] % static_cast<long>(m);
        if (t < 0) t += static_cast<long>(m);
        r[i] = t.get_ui();
      }
      while (!r.empty() && r.back() == 0) r.pop_back();
      return r;
    };
    auto a = reduce(p);
    auto b = reduce(d);
    if (a.size() != p.coeffs().size() || b.size() != d.coeffs().size())
      continue;  // leading coefficient vanished mod m
    auto powmod = [&](unsigned long base, unsigned long e) {
      unsigned long long r = 1, bb = base % m;
      while (e) {
        if (e & 1) r = r * bb % m;
        bb = bb * bb % m;
        e >>= 1;
      }
      return static_cast<unsigned long>(r);
    };
    while (!b.empty()) {
      // a mod b over GF(m)
      unsigned long inv = powmod(b.back(), m - 2);
      while (a.size() >= b.size() && !a.empty()) {
        unsigned long long q = a.back() * static_cast<unsigned long long>(inv) % m;
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
          unsigned long long sub = q * b[i] % m;
          a[off + i] = static_cast<unsigned long>((a[off + i] + m - sub) % m);
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
      }
      std::swap(a, b);
    }
    if (a.size() == 1) return true;  // gcd is a nonzero constant mod m
  }
  return false;
}

}  // namespace expsum
