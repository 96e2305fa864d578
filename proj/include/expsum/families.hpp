#pragma once

#include <vector>

#include "expsum/bigrat.hpp"
#include "expsum/errors.hpp"
#include "expsum/intpoly.hpp"
#include "expsum/interval.hpp"
#include "expsum/ratpoly2.hpp"

namespace expsum {

// Degree-n Taylor polynomial of exp, denominators cleared by n!:
// coefficients n!/k!, global scale 1/n!.
inline IntPoly partial_sum(unsigned n) {
  if (n < 1) throw DomainError("partial_sum: n >= 1 required");
  BigInt nf = factorial(n);
  std::vector<BigInt> c(n + 1);
  BigInt kf(1);
  for (unsigned k = 0; k <= n; ++k) {
    c[k] = nf / kf;
    kf *= (k + 1);
  }
  return IntPoly(std::move(c), BigRat(BigInt(1), nf));
}

// Scaled sum: sum_k (n z)^k / k!, coefficients n! n^k / k!, scale 1/n!.
inline IntPoly scaled_partial_sum(unsigned n) {
  if (n < 1) throw DomainError("scaled_partial_sum: n >= 1 required");
  BigInt nf = factorial(n);
  std::vector<BigInt> c(n + 1);
  BigInt kf(1), np(1);
  for (unsigned k = 0; k <= n; ++k) {
    c[k] = nf * np / kf;
    kf *= (k + 1);
    np *= n;
  }
  return IntPoly(std::move(c), BigRat(BigInt(1), nf));
}

// E_n(y) = |sum_{k<=n} (iy)^k/k!|^2 - 1, built from the closed-form
// case split on n mod 4 (one alternating sum per congruence class).
inline IntPoly e_polynomial(unsigned n) {
  if (n < 1) throw DomainError("e_polynomial: n >= 1 required");
  BigInt nf = factorial(n);
  std::vector<BigRat> q;
  auto set_term = [&q](unsigned deg, const BigRat& v) {
    if (q.size() <= deg) q.resize(deg + 1, BigRat(0));
    q[deg] += v;
  };
  const unsigned r = n % 4;
  if (r == 0 || r == 2) {
    // sum over k=1..n/2 of (-1)^{k+1} y^{n+2k} / ((2k-1)! (k+n/2) n!)
    const int outer = (r == 0) ? -1 : +1;
    BigInt odd_f(1);  // (2k-1)!
    for (unsigned k = 1; k <= n / 2; ++k) {
      odd_f = factorial(2 * k - 1);
      int s = outer * ((k % 2 == 1) ? +1 : -1);
      BigRat term(BigInt(s), nf * odd_f * BigInt(static_cast<long>(k + n / 2)));
      term.canonicalize();
      set_term(n + 2 * k, term);
    }
  } else {
    // sum over k=0..(n-1)/2 of (-1)^k y^{n+1+2k} / ((2k)! (k+(n+1)/2) n!)
    const int outer = (r == 1) ? +1 : -1;
    for (unsigned k = 0; k <= (n - 1) / 2; ++k) {
      BigInt even_f = factorial(2 * k);
      int s = outer * ((k % 2 == 0) ? +1 : -1);
      BigRat term(BigInt(s),
                  nf * even_f * BigInt(static_cast<long>(k + (n + 1) / 2)));
      term.canonicalize();
      set_term(n + 1 + 2 * k, term);
    }
  }
  return IntPoly::from_rat_coeffs(q);
}

// Independent route for E_n: brute-force expansion of |sum (iy)^k/k!|^2 - 1.
// Kept separate so the closed-form construction can be checked against it.
inline IntPoly e_polynomial_expanded(unsigned n) {
  if (n < 1) throw DomainError("e_polynomial_expanded: n >= 1 required");
  // Re part: sum over even k of (-1)^{k/2} y^k / k!
  // Im part: sum over odd  k of (-1)^{(k-1)/2} y^k / k!
  std::vector<BigRat> re(n + 1, BigRat(0)), im(n + 1, BigRat(0));
  BigInt kf(1);
  for (unsigned k = 0; k <= n; ++k) {
    BigRat c(BigInt(1), kf);
    c.canonicalize();
    if (k % 2 == 0) {
      re[k] = (k / 2 % 2 == 0) ? c : -c;
    } else {
      im[k] = ((k - 1) / 2 % 2 == 0) ? c : -c;
    }
    kf *= (k + 1);
  }
  std::vector<BigRat> sq(2 * n + 1, BigRat(0));
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; j <= n; ++j)
      sq[i + j] += re[i] * re[j] + im[i] * im[j];
  sq[0] -= 1;
  return IntPoly::from_rat_coeffs(sq);
}

// f_m(z) = -((4m+1)/2) sum_{k=1}^{2m} (-1)^{k+1} z^{2k-1} / ((2k-1)!(k+2m)):
// the entire-function normalization of E_{4m}; degree 4m-1.
inline IntPoly f_m_polynomial(unsigned m) {
  if (m < 1) throw DomainError("f_m_polynomial: m >= 1 required");
  std::vector<BigRat> q(4 * m, BigRat(0));
  for (unsigned k = 1; k <= 2 * m; ++k) {
    BigInt odd_f = factorial(2 * k - 1);
    int s = (k % 2 == 1) ? -1 : +1;  // includes the leading minus sign
    BigRat term(BigInt(s) * BigInt(static_cast<long>(4 * m + 1)),
                BigInt(2) * odd_f * BigInt(static_cast<long>(k + 2 * m)));
    term.canonicalize();
    q[2 * k - 1] = term;
  }
  return IntPoly::from_rat_coeffs(q);
}

// T_n(z) = n!/(nz)^n * P_n(z) with P_n the scaled sum; certified enclosure.
inline CInterval t_n_eval(unsigned n, const CInterval& z, mpfr_prec_t prec) {
  if (n < 1) throw DomainError("t_n_eval: n >= 1 required");
  if (z.contains_zero()) throw DomainError("t_n_eval: z may be 0");
  CInterval p = scaled_partial_sum(n).eval(z, prec);
  // (nz)^n by repeated squaring on the complex interval
  CInterval nz{Interval::from_long(static_cast<long>(n), prec) * z.re,
               Interval::from_long(static_cast<long>(n), prec) * z.im};
  CInterval pw{Interval::from_long(1, prec), Interval::from_long(0, prec)};
  unsigned e = n;
  CInterval base = nz;
  while (e) {
    if (e & 1) pw = pw * base;
    base = base * base;
    e >>= 1;
  }
  Interval nf = Interval::from_int(factorial(n), prec);
  CInterval r = p / pw;
  return {r.re * nf, r.im * nf};
}

// G_n(x,y) = |sum_{k<=n} (x+iy)^k / k!|^2 - 1. With `scaled`, the
// argument is n(x+iy) so the zero set bounds the scaled region.
inline RatPoly2 membership_poly(unsigned n, bool scaled) {
  if (n < 1) throw DomainError("membership_poly: n >= 1 required");
  RatPoly2 re, im;   // running power (x+iy)^k (scaled by n^k if requested)
  RatPoly2 A, B;     // accumulated real/imaginary parts
  RatPoly2 one;
  one.add_term(0, 0, BigRat(1));
  RatPoly2 pw_re = one, pw_im;
  A.add_term(0, 0, BigRat(1));
  BigInt kf(1);
  BigRat mult = scaled ? BigRat(static_cast<long>(n)) : BigRat(1);
  for (unsigned k = 1; k <= n; ++k) {
    // (re + i im) * (x + i y), with the scale factor folded in
    RatPoly2 nre, nim;
    for (const auto& [key, v] : pw_re.terms()) {
      nre.add_term(key.first + 1, key.second, v * mult);
      nim.add_term(key.first, key.second + 1, v * mult);
    }
    for (const auto& [key, v] : pw_im.terms()) {
      nre.add_term(key.first, key.second + 1, -v * mult);
      nim.add_term(key.first + 1, key.second, v * mult);
    }
    pw_re = std::move(nre);
    pw_im = std::move(nim);
    kf *= k;
    BigRat inv(BigInt(1), kf);
    inv.canonicalize();
    for (const auto& [key, v] : pw_re.terms())
      A.add_term(key.first, key.second, v * inv);
    for (const auto& [key, v] : pw_im.terms())
      B.add_term(key.first, key.second, v * inv);
  }
  RatPoly2 g = A * A + B * B;
  g.add_term(0, 0, BigRat(-1));
  return g;
}

// Univariate slice of the unscaled membership polynomial at y = y0:
// x -> |sum_{k<=n} (x+iy0)^k/k!|^2 - 1, built directly so that large n
// stays cheap (no bivariate expansion).
inline IntPoly axis_slice_poly(unsigned n, const BigRat& y0) {
  if (n < 1) throw DomainError("axis_slice_poly: n >= 1 required");
  // running power (x + iy0)^k as a pair of rational coefficient vectors
  std::vector<BigRat> pre{BigRat(1)}, pim{BigRat(0)};
  std::vector<BigRat> A{BigRat(1)}, B{BigRat(0)};
  BigInt kf(1);
  for (unsigned k = 1; k <= n; ++k) {
    std::vector<BigRat> nre(k + 1, BigRat(0)), nim(k + 1, BigRat(0));
    for (unsigned i = 0; i < pre.size(); ++i) {
      nre[i + 1] += pre[i];
      nim[i] += pre[i] * y0;
      nim[i + 1] += pim[i];
      nre[i] -= pim[i] * y0;
    }
    pre = std::move(nre);
    pim = std::move(nim);
    kf *= k;
    BigRat inv(BigInt(1), kf);
    inv.canonicalize();
    A.resize(k + 1, BigRat(0));
    B.resize(k + 1, BigRat(0));
    for (unsigned i = 0; i <= k; ++i) {
      A[i] += pre[i] * inv;
      B[i] += pim[i] * inv;
    }
  }
  std::vector<BigRat> sq(2 * n + 1, BigRat(0));
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; j <= n; ++j) sq[i + j] += A[i] * A[j] + B[i] * B[j];
  sq[0] -= 1;
  return IntPoly::from_rat_coeffs(sq);
}

// Restriction of a bivariate polynomial to the ray with direction
// (cos phi, sin phi) = ((1-t^2)/(1+t^2), 2t/(1+t^2)) for rational t;
// t >= 1 sweeps phi over [pi/2, pi). Returns r -> g(r cos, r sin).
inline IntPoly ray_restrict(const RatPoly2& g, const BigRat& t) {
  BigRat den = BigRat(1) + t * t;
  BigRat c = (BigRat(1) - t * t) / den;
  BigRat s = (BigRat(2) * t) / den;
  c.canonicalize();
  s.canonicalize();
  unsigned dmax = g.total_degree();
  std::vector<BigRat> out(dmax + 1, BigRat(0));
  for (const auto& [key, v] : g.terms())
    out[key.first + key.second] += v * pow_rat(c, key.first) * pow_rat(s, key.second);
  return IntPoly::from_rat_coeffs(out);
}

// Ray restriction along the exact direction (-1, 0) (the t -> infinity
// limit of the tangent half-angle parametrization).
inline IntPoly ray_restrict_neg_real(const RatPoly2& g) {
  unsigned dmax = g.total_degree();
  std::vector<BigRat> out(dmax + 1, BigRat(0));
  for (const auto& [key, v] : g.terms()) {
    if (key.second != 0) continue;
    out[key.first] += (key.first % 2 == 0) ? v : -v;
  }
  return IntPoly::from_rat_coeffs(out);
}

}  // namespace expsum
