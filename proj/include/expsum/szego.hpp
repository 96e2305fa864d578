#pragma once

#include <optional>
#include <vector>

#include "expsum/bigrat.hpp"
#include "expsum/errors.hpp"
#include "expsum/families.hpp"
#include "expsum/interval.hpp"
#include "expsum/lambertw.hpp"
#include "expsum/region.hpp"

namespace expsum {

// --- Sigma_1 membership -----------------------------------------------------
//
// Sigma_1 = { |z e^{1-z}| <= 1 } intersect { |z| <= 1 }. Both constraints are
// evaluated directly: |z e^{1-z}|^2 = (x^2+y^2) e^{2-2x}.

inline ContainResult sigma1_contains(const CInterval& z,
                                     double resolution = 1e-30) {
  for (mpfr_prec_t prec = Interval::kDefaultPrec;; prec *= 2) {
    Interval x = z.re.widened(prec), y = z.im.widened(prec);
    Interval one = Interval::from_long(1, prec);
    Interval m2 = x * x + y * y;
    Interval two = Interval::from_long(2, prec);
    Interval s = m2 * exp(two - two * x);
    Interval d1 = s - one, d2 = m2 - one;
    if (d1.certainly_positive() || d2.certainly_positive())
      return {Membership::Outside, 0.0};
    if (d1.certainly_negative() && d2.certainly_negative())
      return {Membership::Inside, 0.0};
    double w = std::max(d1.width(), d2.width());
    if (w < resolution || prec >= Interval::kMaxPrec)
      return {Membership::Boundary, w};
  }
}

inline ContainResult sigma1_contains(const BigRat& x, const BigRat& y,
                                     double resolution = 1e-30) {
  CInterval z{Interval::from_rat(x, Interval::kDefaultPrec),
              Interval::from_rat(y, Interval::kDefaultPrec)};
  return sigma1_contains(z, resolution);
}

// --- boundary description ---------------------------------------------------

// Abscissa range of the boundary curve: x runs from -W(1/e) to exactly 1.
inline std::pair<Interval, BigRat> sigma1_boundary_x_range(
    mpfr_prec_t prec = 128) {
  Interval ie = Interval::from_long(1, prec) / Interval::euler_e(prec);
  Interval left = Interval::from_long(0, prec) - lambert_w(ie, prec).value;
  return {left, BigRat(1)};
}

// Upper boundary y(x) = sqrt(e^{2x-2} - x^2) for x in [-W(1/e), 1].
inline Interval sigma1_boundary_y(const Interval& x, mpfr_prec_t prec = 128) {
  Interval two = Interval::from_long(2, prec);
  Interval v = exp(two * x.widened(prec) - two) - x.widened(prec) * x.widened(prec);
  // x at the range endpoints makes v a zero-straddling sliver; the true
  // value is >= 0, so clamp the lower end before the square root
  if (v.lo_d() < 0.0) {
    if (v.certainly_negative())
      throw DomainError("sigma1_boundary_y: x outside the boundary range");
    v = intersect(v, Interval::hull(BigRat(0), v.hi_rat(), prec));
  }
  return sqrt(v);
}

// --- distance from circles C_rho to Sigma_1 (Lambert-W construction) --------

// delta_rho = (rho e - 1) / (2 sqrt(e^2+1)).
inline Interval delta_rho(const Interval& rho, mpfr_prec_t prec = 128) {
  Interval e = Interval::euler_e(prec);
  Interval one = Interval::from_long(1, prec);
  Interval num = rho.widened(prec) * e - one;
  if (!num.certainly_positive())
    throw DomainError("delta_rho: rho > 1/e required");
  return num / (Interval::from_long(2, prec) * sqrt(e * e + one));
}

// Lower bound (rho e - 1)/sqrt(e^2+1) for the distance |C_rho, Sigma_1|.
inline Interval distance_lower_bound(const Interval& rho,
                                     mpfr_prec_t prec = 128) {
  Interval e = Interval::euler_e(prec);
  Interval one = Interval::from_long(1, prec);
  Interval num = rho.widened(prec) * e - one;
  if (!num.certainly_positive())
    throw DomainError("distance_lower_bound: rho > 1/e required");
  return num / sqrt(e * e + one);
}

// Pointwise tangent-line distance |A(phi), C(phi)| in its w-form
//   (w+1)(rho e^{w+1} - 1) / sqrt(e^{2w+2}(2w+1) + 1),  w = W(-cos(phi)/e),
// valid for phi in (pi/2, pi); the w -> 0+ limit recovers the lower bound.
inline Interval distance_pointwise(const Interval& rho, const Interval& phi,
                                   mpfr_prec_t prec = 128) {
  Interval e = Interval::euler_e(prec);
  Interval one = Interval::from_long(1, prec);
  Interval arg = Interval::from_long(0, prec) -
                 cos(phi.widened(prec)) / e;  // in (0, 1/e)
  Interval w = lambert_w(arg, prec).value;
  Interval two = Interval::from_long(2, prec);
  Interval ew1 = exp(w + one);
  Interval num = (w + one) * (rho.widened(prec) * ew1 - one);
  Interval den = sqrt(ew1 * ew1 * (two * w + one) + one);
  return num / den;
}

// --- Moebius inf/sup values (w/(w-1) over constraint sets) ------------------

enum class MoebiusVariant { Inf, SupBand };

// Inf over {|w| >= sigma} of |w/(w-1)| is sigma/(1+sigma) exactly; the
// sup over the delta_rho band is 1 on the low rho range and 1.39 above.
inline BigRat moebius_inf(const BigRat& sigma) {
  if (sigma <= 0) throw DomainError("moebius_inf: sigma > 0 required");
  BigRat r = sigma / (1 + sigma);
  r.canonicalize();
  return r;
}

inline BigRat moebius_sup_band(const Interval& rho, mpfr_prec_t prec = 128) {
  Interval e = Interval::euler_e(prec);
  Interval one = Interval::from_long(1, prec);
  Interval split = (one + sqrt(one + e * e)) / e;  // (1+sqrt(1+e^2))/e
  Interval r = rho.widened(prec);
  Interval low = Interval::from_rat(BigRat(95, 100), prec);
  Interval two = Interval::from_long(2, prec);
  if (!(r - low).certainly_nonnegative() || !(two - r).certainly_nonnegative())
    throw DomainError("moebius_sup_band: rho outside [0.95, 2]");
  if ((split - r).certainly_nonnegative()) return BigRat(1);
  if ((r - split).certainly_positive()) return BigRat(139, 100);
  throw Indeterminate("moebius_sup_band: rho straddles the range split");
}

// --- Buckholtz bounds on T_n ------------------------------------------------

struct BuckholtzReport {
  unsigned n = 0;
  std::size_t modulus_samples = 0;     // points with |z| >= 1, bound e sqrt(n)
  std::size_t sigma_samples = 0;       // points outside Sigma_1, bound 2e sqrt(n)
  double max_ratio_modulus = 0.0;      // max |T_n|/(e sqrt n) observed (upper)
  double max_ratio_sigma = 0.0;        // max |T_n|/(2e sqrt n) observed (upper)
  bool all_certified = true;
};

// Certified sampling of the two T_n estimates: |T_n| <= e sqrt(n) on
// |z| >= 1 and |T_n| <= 2e sqrt(n) off Sigma_1. Sample points are exact
// rationals; every individual inequality is interval-certified.
inline BuckholtzReport buckholtz_bounds_check(unsigned n, std::size_t samples,
                                              mpfr_prec_t prec = 256) {
  if (n < 1) throw DomainError("buckholtz_bounds_check: n >= 1 required");
  BuckholtzReport rep;
  rep.n = n;
  Interval e = Interval::euler_e(prec);
  Interval sqn = sqrt(Interval::from_long(static_cast<long>(n), prec));
  Interval bound1 = e * sqn;
  Interval bound2 = Interval::from_long(2, prec) * e * sqn;

  auto tmod = [&](const BigRat& x, const BigRat& y) {
    CInterval z{Interval::from_rat(x, prec), Interval::from_rat(y, prec)};
    return abs(t_n_eval(n, z, prec));
  };
  auto ratio_hi = [&](const Interval& t, const Interval& b) {
    return (t / b).hi_d();
  };

  // deterministic low-discrepancy-ish sweep: radius in [1,3], golden angle
  for (std::size_t i = 0; i < samples; ++i) {
    double r = 1.0 + 2.0 * static_cast<double>(i) / std::max<std::size_t>(samples - 1, 1);
    double th = 2.39996322972865332 * static_cast<double>(i + 1);
    BigRat x(r * std::cos(th)), y(r * std::sin(th));
    x.canonicalize();
    y.canonicalize();
    if (x * x + y * y < 1) {  // snap inside-slips outward
      x *= 2;
      y *= 2;
    }
    Interval t = tmod(x, y);
    rep.max_ratio_modulus = std::max(rep.max_ratio_modulus, ratio_hi(t, bound1));
    if (!(bound1 - t).certainly_nonnegative()) rep.all_certified = false;
    ++rep.modulus_samples;
  }
  // points outside Sigma_1: ring 0.5 <= |z| <= 1.5 filtered by membership
  std::size_t accepted = 0, tries = 0;
  while (accepted < samples && tries < samples * 8) {
    double u = static_cast<double>(tries++);
    double r = 0.5 + std::fmod(0.61803398875 * u, 1.0);
    double th = 2.39996322972865332 * (u + 0.7);
    BigRat x(r * std::cos(th)), y(r * std::sin(th));
    x.canonicalize();
    y.canonicalize();
    if (x == 0 && y == 0) continue;
    if (sigma1_contains(x, y, 1e-12).state != Membership::Outside) continue;
    Interval t = tmod(x, y);
    rep.max_ratio_sigma = std::max(rep.max_ratio_sigma, ratio_hi(t, bound2));
    if (!(bound2 - t).certainly_nonnegative()) rep.all_certified = false;
    ++rep.sigma_samples;
    ++accepted;
  }
  return rep;
}

// --- factorial bounds (standard Stirling-type sandwich) ----------------------

// (n/e)^n sqrt(2 pi n) < n! <= e (n/e)^n sqrt(n), certified per n.
inline bool factorial_bounds_check(unsigned n, mpfr_prec_t prec = 256) {
  if (n < 1) throw DomainError("factorial_bounds_check: n >= 1 required");
  Interval e = Interval::euler_e(prec);
  Interval nn = Interval::from_long(static_cast<long>(n), prec);
  Interval base = pow_ui(nn / e, n);
  Interval fact = Interval::from_int(factorial(n), prec);
  Interval lower = base * sqrt(Interval::from_long(2, prec) * Interval::pi(prec) * nn);
  Interval upper = e * base * sqrt(nn);
  // at n = 1 the upper bound is an exact equality (e * (1/e) * 1 = 1!), so
  // only the strict lower bound needs certification there
  bool upper_ok = (n == 1) || (upper - fact).certainly_positive();
  return (fact - lower).certainly_positive() && upper_ok;
}

// --- contour sampling for |z e^{1-z}| level sets -----------------------------

struct ContourSample {
  double x, y, level;  // level = certified midpoint of |z e^{1-z}|
};

// Grid evaluation for contour plotting (Fig-style reproduction): the level
// value is a midpoint of a certified enclosure at a rational grid point.
inline std::vector<ContourSample> szego_contour_grid(double x0, double x1,
                                                     double y0, double y1,
                                                     std::size_t nx,
                                                     std::size_t ny,
                                                     mpfr_prec_t prec = 64) {
  if (nx < 2 || ny < 2) throw DomainError("szego_contour_grid: need >= 2 points");
  std::vector<ContourSample> out;
  out.reserve(nx * ny);
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      double xd = x0 + (x1 - x0) * static_cast<double>(i) / static_cast<double>(nx - 1);
      double yd = y0 + (y1 - y0) * static_cast<double>(j) / static_cast<double>(ny - 1);
      Interval x = Interval::from_double(xd, prec), y = Interval::from_double(yd, prec);
      Interval one = Interval::from_long(1, prec);
      Interval m = sqrt(x * x + y * y) * exp(one - x);
      out.push_back({xd, yd, m.mid_d()});
    }
  }
  return out;
}

}  // namespace expsum
