#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "expsum/bigrat.hpp"
#include "expsum/errors.hpp"
#include "expsum/intpoly.hpp"

namespace expsum {

namespace detail {

struct CF {  // complex over mpf
  mpf_class re, im;
};

inline CF cf_sub(const CF& a, const CF& b) { return {a.re - b.re, a.im - b.im}; }
inline CF cf_mul(const CF& a, const CF& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline CF cf_div(const CF& a, const CF& b) {
  mpf_class d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline mpf_class cf_abs2(const CF& a) { return a.re * a.re + a.im * a.im; }

}  // namespace detail

// Float-grade simultaneous-iteration (Aberth-Ehrlich) zeros. Not certified:
// intended for figure reproduction and sampled cluster checks only. The
// result is residual-checked against |p(z)| < 1e-8 * max|coeff| at working
// precision; high precision is required because the integer cores of the
// target polynomials far exceed double range.
inline std::vector<std::complex<double>> complex_zeros(const IntPoly& p,
                                                       unsigned max_iter = 400) {
  if (p.degree() < 1) throw DomainError("complex_zeros: degree >= 1 required");

  // roots at the origin come from the valuation, the rest from iteration
  std::size_t val = p.valuation();
  std::vector<std::complex<double>> out(val, std::complex<double>(0.0, 0.0));
  std::size_t deg = p.degree() - val;
  if (deg == 0) return out;

  // working precision: integer cores plus generous headroom
  std::size_t bits = 64;
  for (std::size_t k = val; k <= p.degree(); ++k) {
    const BigInt& c = p.coeff(k);
    if (sgn(c) != 0) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  }
  const mp_bitcnt_t prec = static_cast<mp_bitcnt_t>(bits + 256);

  std::vector<detail::CF> c(deg + 1);
  mpf_class cmax(0, prec);
  for (std::size_t k = 0; k <= deg; ++k) {
    c[k].re = mpf_class(p.coeff(k + val), prec);
    c[k].im = mpf_class(0, prec);
    mpf_class a = abs(c[k].re);
    if (a > cmax) cmax = a;
  }

  // initial guesses on a circle of the Fujiwara root-bound radius (computed
  // in log scale; the raw coefficients exceed double range), angles offset
  // so no guess starts exactly on the real axis
  double lb_lead = 0.0, rlog = -1e9;
  {
    signed long e;
    double m = mpz_get_d_2exp(&e, p.coeff(p.degree()).get_mpz_t());
    lb_lead = std::log2(std::fabs(m)) + static_cast<double>(e);
    for (std::size_t k = 0; k < deg; ++k) {
      if (sgn(p.coeff(k + val)) == 0) continue;
      m = mpz_get_d_2exp(&e, p.coeff(k + val).get_mpz_t());
      double lb = std::log2(std::fabs(m)) + static_cast<double>(e);
      rlog = std::max(rlog, (lb - lb_lead) / static_cast<double>(deg - k));
    }
  }
  mpf_class radius(2.0, prec);
  {
    mpf_class f(std::exp2(rlog - std::floor(rlog)), prec);
    if (rlog >= 0)
      mpf_mul_2exp(f.get_mpf_t(), f.get_mpf_t(),
                   static_cast<mp_bitcnt_t>(std::floor(rlog)));
    else
      mpf_div_2exp(f.get_mpf_t(), f.get_mpf_t(),
                   static_cast<mp_bitcnt_t>(-std::floor(rlog)));
    radius *= f;
  }
  std::vector<detail::CF> z(deg);
  for (std::size_t k = 0; k < deg; ++k) {
    double th = 6.283185307179586 * (static_cast<double>(k) + 0.354) /
                static_cast<double>(deg);
    z[k].re = radius * mpf_class(std::cos(th), prec);
    z[k].im = radius * mpf_class(std::sin(th), prec);
  }

  auto eval_pq = [&](const detail::CF& w, detail::CF& pv, detail::CF& dv) {
    pv = c[deg];
    dv = detail::CF{mpf_class(0, prec), mpf_class(0, prec)};
    for (std::size_t k = deg; k-- > 0;) {
      dv = detail::CF{dv.re * w.re - dv.im * w.im + pv.re,
                      dv.re * w.im + dv.im * w.re + pv.im};
      pv = detail::CF{pv.re * w.re - pv.im * w.im + c[k].re,
                      pv.re * w.im + pv.im * w.re + c[k].im};
    }
  };

  mpf_class tol_step(1e-40, prec);
  bool converged = false;
  for (unsigned it = 0; it < max_iter && !converged; ++it) {
    converged = true;
    for (std::size_t k = 0; k < deg; ++k) {
      detail::CF pv, dv;
      eval_pq(z[k], pv, dv);
      detail::CF w = cf_div(pv, dv);  // Newton correction
      detail::CF s{mpf_class(0, prec), mpf_class(0, prec)};
      for (std::size_t j = 0; j < deg; ++j) {
        if (j == k) continue;
        detail::CF inv = cf_div(detail::CF{mpf_class(1, prec), mpf_class(0, prec)},
                                cf_sub(z[k], z[j]));
        s.re += inv.re;
        s.im += inv.im;
      }
      detail::CF den = cf_sub(detail::CF{mpf_class(1, prec), mpf_class(0, prec)},
                              cf_mul(w, s));
      detail::CF step = cf_div(w, den);
      z[k] = cf_sub(z[k], step);
      mpf_class rel = cf_abs2(step) / (1 + cf_abs2(z[k]));
      if (rel > tol_step * tol_step) converged = false;
    }
  }
  if (!converged)
    throw ConvergenceFailure("complex_zeros: iteration cap reached");

  // residual check at working precision
  mpf_class thresh = cmax * mpf_class(1e-8, prec);
  for (std::size_t k = 0; k < deg; ++k) {
    detail::CF pv, dv;
    eval_pq(z[k], pv, dv);
    mpf_class a2 = cf_abs2(pv);
    mpf_sqrt(a2.get_mpf_t(), a2.get_mpf_t());
    if (a2 >= thresh)
      throw ConvergenceFailure("complex_zeros: residual check failed");
    out.emplace_back(z[k].re.get_d(), z[k].im.get_d());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  return out;
}

}  // namespace expsum
