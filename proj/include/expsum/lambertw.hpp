#pragma once

#include <mpfr.h>

#include <cmath>

#include "expsum/interval.hpp"

namespace expsum {

// Principal-branch Lambert W enclosure: for the input interval x (with
// x >= -1/e), `value` satisfies value*exp(value) ⊇ x and value >= -1.
struct WValue {
  Interval argument;
  Interval value;
};

namespace detail {

// Double-precision starting guess for W(x), x >= -1/e.
inline double lambert_w_guess(double x) {
  const double e = std::exp(1.0);
  if (x < -0.367879441171442) return -1.0;
  if (x < 0.0) {
    // Series around the branch point -1/e.
    double p = std::sqrt(2.0 * (e * x + 1.0));
    return -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0;
  }
  if (x < 1.0) return x * (1.0 - x + 1.5 * x * x / (1.0 + x));
  double l = std::log(x);
  double ll = std::log(l > 1.0 ? l : 1.0);
  return l - ll + ll / (l > 1.0 ? l : 1.0);
}

// Point Halley iteration at precision `prec`; w must be initialized.
inline void lambert_w_halley(mpfr_ptr w, mpfr_srcptr x, mpfr_prec_t prec) {
  mpfr_t ew, f, wp1, num, den, t;
  mpfr_inits2(prec, ew, f, wp1, num, den, t, (mpfr_ptr)nullptr);
  int iters = 2 + static_cast<int>(std::log2(static_cast<double>(prec)));
  for (int i = 0; i < iters; ++i) {
    mpfr_exp(ew, w, MPFR_RNDN);
    mpfr_mul(f, w, ew, MPFR_RNDN);
    mpfr_sub(f, f, x, MPFR_RNDN);  // f = w e^w - x
    mpfr_add_si(wp1, w, 1, MPFR_RNDN);
    // Halley: w -= f / (e^w (w+1) - (w+2) f / (2w+2))
    mpfr_mul(den, ew, wp1, MPFR_RNDN);
    mpfr_add_si(t, w, 2, MPFR_RNDN);
    mpfr_mul(t, t, f, MPFR_RNDN);
    mpfr_mul_si(num, wp1, 2, MPFR_RNDN);
    if (!mpfr_zero_p(num)) {
      mpfr_div(t, t, num, MPFR_RNDN);
      mpfr_sub(den, den, t, MPFR_RNDN);
    }
    if (mpfr_zero_p(den)) break;
    mpfr_div(t, f, den, MPFR_RNDN);
    mpfr_sub(w, w, t, MPFR_RNDN);
    // keep the iterate on the principal branch
    if (mpfr_cmp_si(w, -1) < 0) mpfr_set_si(w, -1, MPFR_RNDN);
  }
  mpfr_clears(ew, f, wp1, num, den, t, (mpfr_ptr)nullptr);
}

// g(w) = w e^w as an interval; strictly increasing for w >= -1.
inline Interval w_exp_w(const Interval& w) { return w * exp(w); }

}  // namespace detail

// Principal-branch W of an interval argument. Enclosure is certified by
// sign-bracketing of w e^w - x (monotone on [-1, +inf)).
inline WValue lambert_w(const Interval& x,
                        mpfr_prec_t prec = Interval::kDefaultPrec) {
  BigRat xlo = x.lo_rat(), xhi = x.hi_rat();
  // Domain gate: -1/e <= x. Outward comparison against an enclosure of -1/e.
  Interval minus_inv_e = -(Interval::from_long(1, prec) / Interval::euler_e(prec));
  if (certainly_less(x, minus_inv_e))
    throw DomainError("lambert_w: argument entirely below -1/e");

  if (xlo == 0 && xhi == 0) {
    WValue r{x, Interval::from_long(0, prec)};
    return r;
  }

  // Point solves at both endpoints, then certified outward bracket.
  mpfr_prec_t wp = prec + 32;
  mpfr_t wlo, whi;
  mpfr_init2(wlo, wp);
  mpfr_init2(whi, wp);
  mpfr_set_d(wlo, detail::lambert_w_guess(x.lo_d()), MPFR_RNDN);
  mpfr_set_d(whi, detail::lambert_w_guess(x.hi_d()), MPFR_RNDN);
  detail::lambert_w_halley(wlo, x.lo_raw(), wp);
  detail::lambert_w_halley(whi, x.hi_raw(), wp);

  if (mpfr_cmp(wlo, whi) > 0) mpfr_swap(wlo, whi);
  Interval w(prec);
  mpfr_set(w.lo_mut(), wlo, MPFR_RNDD);
  mpfr_set(w.hi_mut(), whi, MPFR_RNDU);
  mpfr_clear(wlo);
  mpfr_clear(whi);

  // Widen until g([w.lo]) <= x.lo and g([w.hi]) >= x.hi are certified.
  Interval eps(prec);
  mpfr_set_si_2exp(eps.lo_mut(), 1, -static_cast<long>(prec), MPFR_RNDD);
  mpfr_set_si_2exp(eps.hi_mut(), 1, -static_cast<long>(prec), MPFR_RNDU);
  Interval scale = abs(w) + Interval::from_long(1, prec);
  Interval step = eps * scale;
  for (int attempt = 0; attempt < 200; ++attempt) {
    Interval wa(prec), wb(prec);
    mpfr_sub(wa.lo_mut(), w.lo_raw(), step.hi_raw(), MPFR_RNDD);
    mpfr_set(wa.hi_mut(), wa.lo_raw(), MPFR_RNDU);
    mpfr_add(wb.hi_mut(), w.hi_raw(), step.hi_raw(), MPFR_RNDU);
    mpfr_set(wb.lo_mut(), wb.hi_raw(), MPFR_RNDD);
    // clamp left bracket to the branch floor -1
    if (mpfr_cmp_si(wa.lo_raw(), -1) < 0) {
      mpfr_set_si(wa.lo_mut(), -1, MPFR_RNDD);
      mpfr_set_si(wa.hi_mut(), -1, MPFR_RNDU);
    }
    Interval ga = detail::w_exp_w(wa);
    Interval gb = detail::w_exp_w(wb);
    bool left_ok = mpfr_cmp(ga.hi_raw(), x.lo_raw()) <= 0 ||
                   mpfr_cmp_si(wa.lo_raw(), -1) == 0;
    bool right_ok = mpfr_cmp(gb.lo_raw(), x.hi_raw()) >= 0;
    if (left_ok && right_ok) {
      Interval out(prec);
      mpfr_set(out.lo_mut(), wa.lo_raw(), MPFR_RNDD);
      mpfr_set(out.hi_mut(), wb.hi_raw(), MPFR_RNDU);
      return WValue{x, out};
    }
    step = step * Interval::from_long(2, prec);
  }
  throw ConvergenceFailure("lambert_w: bracket certification failed");
}

// Convenience: W at an exact rational argument.
inline WValue lambert_w(const BigRat& x,
                        mpfr_prec_t prec = Interval::kDefaultPrec) {
  return lambert_w(Interval::from_rat(x, prec), prec);
}

}  // namespace expsum
