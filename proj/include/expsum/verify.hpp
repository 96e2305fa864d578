#pragma once

#include <atomic>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "expsum/bigrat.hpp"
#include "expsum/complexzeros.hpp"
#include "expsum/errors.hpp"
#include "expsum/extremal.hpp"
#include "expsum/families.hpp"
#include "expsum/interval.hpp"
#include "expsum/region.hpp"
#include "expsum/rootiso.hpp"
#include "expsum/szego.hpp"

namespace expsum {

enum class CheckStatus { Pass, Fail, Indeterminate, Informational };
enum class Profile { Quick, Full };

struct CheckResult {
  std::string check_id;
  CheckStatus status = CheckStatus::Indeterminate;
  std::string detail;
};

inline const char* status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Indeterminate: return "indeterminate";
    default: return "informational";
  }
}

namespace detail {

inline std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

}  // namespace detail

// --- reference display values (tables of certified radii, by n from 1) ------

inline constexpr const char* kRefRadiusFull[20] = {
    "2",     "1.099", "0.847", "0.741", "0.690", "0.665", "0.6546",
    "0.6523", "0.6542", "0.659", "0.664", "0.670", "0.676", "0.682",
    "0.687", "0.692", "0.697", "0.702", "0.707", "0.711"};

inline constexpr const char* kRefRadiusLeft[20] = {
    "2",     "1.099", "0.847", "0.741", "0.680", "0.597", "0.566",
    "0.546", "0.534", "0.527", "0.496", "0.486", "0.480", "0.476",
    "0.474", "0.458", "0.453", "0.450", "0.449", "0.448"};

// (n, rho* display, n*rho* display); rounded down, unlike the tables above
struct SemiDiskRef {
  unsigned n;
  const char* rho;
  const char* n_rho;
};
inline constexpr SemiDiskRef kRefSemiDisk[10] = {
    {3, "0.577", "1.732"},  {4, "0.653", "2.615"},  {7, "0.252", "1.764"},
    {8, "0.424", "3.395"},  {11, "0.154", "1.701"}, {12, "0.281", "3.379"},
    {15, "0.111", "1.668"}, {16, "0.207", "3.324"}, {19, "0.086", "1.649"},
    {20, "0.164", "3.290"}};

namespace detail {

// Parse a decimal display string into (scaled integer, decimal places).
inline std::pair<BigInt, unsigned> parse_display(const std::string& s) {
  std::string digits;
  unsigned places = 0;
  bool after_dot = false;
  for (char c : s) {
    if (c == '.') {
      after_dot = true;
      continue;
    }
    digits += c;
    if (after_dot) ++places;
  }
  BigInt v;
  if (mpz_set_str(v.get_mpz_t(), digits.c_str(), 10) != 0)
    throw DomainError("parse_display: bad reference string " + s);
  return {v, places};
}

inline BigInt ceil_scaled(const BigRat& q, const BigInt& scale) {
  BigRat v = q * scale;
  v.canonicalize();
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
  return r;
}

inline BigInt floor_scaled(const BigRat& q, const BigInt& scale) {
  BigRat v = q * scale;
  v.canonicalize();
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
  return r;
}

// Round-up display match: the printed value must be the round-up of some
// value in [lo, hi]; a reference exactly one display unit above a tight
// enclosure is also accepted (printed tables are upper bounds and may be
// one unit loose).
inline bool display_matches_up(const BigRat& lo, const BigRat& hi,
                               const std::string& ref) {
  auto [r, places] = parse_display(ref);
  BigInt scale = pow_int(BigInt(10), places);
  BigInt a = ceil_scaled(lo, scale), b = ceil_scaled(hi, scale);
  if (r >= a && r <= b) return true;
  return a == b && r == a + 1;
}

inline bool display_matches_down(const BigRat& lo, const BigRat& hi,
                                 const std::string& ref) {
  auto [r, places] = parse_display(ref);
  BigInt scale = pow_int(BigInt(10), places);
  return r >= floor_scaled(lo, scale) && r <= floor_scaled(hi, scale);
}

inline bool positive_origin_rule(unsigned n) {
  return n % 4 == 0 || n % 4 == 3;
}

}  // namespace detail

// --- individual checks -------------------------------------------------------

namespace checks {

inline CheckResult disk_inclusion(const std::string& id, unsigned n0,
                                  unsigned n1, const BigRat& radius,
                                  bool left_only) {
  CoverageSpec spec{left_only, Interval::from_rat(radius, 96)};
  for (unsigned n = n0; n <= n1; ++n) {
    try {
      if (!coverage_disk_check(n, spec))
        return {id, CheckStatus::Fail, detail::fmt("n=%u escapes the disk", n)};
    } catch (const Indeterminate&) {
      return {id, CheckStatus::Indeterminate,
              detail::fmt("n=%u undecided at this radius", n)};
    }
  }
  return {id, CheckStatus::Pass,
          detail::fmt("n=%u..%u contained in disk radius %s%s", n0, n1,
                      radius.get_str().c_str(),
                      left_only ? " (left half)" : "")};
}

inline CheckResult e_identity(Profile p) {
  unsigned nmax = p == Profile::Quick ? 12 : 30;
  for (unsigned n = 1; n <= nmax; ++n)
    if (!(e_polynomial(n) == e_polynomial_expanded(n)))
      return {"lemma-5.1", CheckStatus::Fail,
              detail::fmt("coefficient mismatch at n=%u", n)};
  return {"lemma-5.1", CheckStatus::Pass,
          detail::fmt("exact coefficient equality for n=1..%u", nmax)};
}

inline CheckResult origin_class_rule(Profile p) {
  unsigned nmax = p == Profile::Quick ? 30 : 100;
  for (unsigned n = 1; n <= nmax; ++n) {
    bool positive =
        origin_component_class(n) == OriginClass::PositiveInterval;
    if (positive != detail::positive_origin_rule(n))
      return {"cor-5.2", CheckStatus::Fail,
              detail::fmt("origin class contradicts the mod-4 rule at n=%u", n)};
  }
  return {"cor-5.2", CheckStatus::Pass,
          detail::fmt("origin class matches the mod-4 rule for n=1..%u", nmax)};
}

// Slice decomposition with every non-point endpoint refined to 2^-20.
inline SliceDecomposition v_plus_refined(unsigned n) {
  IntPoly sf = squarefree_part(e_polynomial(n));
  BigRat w = dyadic(BigInt(1), -20);
  SliceDecomposition d = v_plus(n);
  for (auto& iv : d.intervals) {
    if (!iv.lo.is_point()) iv.lo = refine_root_sf(iv.lo, sf, w);
    if (!iv.hi.is_point()) iv.hi = refine_root_sf(iv.hi, sf, w);
  }
  return d;
}

// Deviation of the first two slice intervals of V^+_{4m} from the limiting
// grid ((2k-2)pi, (2k-1)pi), k = 1, 2.
inline double slice_endpoint_deviation(unsigned m) {
  SliceDecomposition d = v_plus_refined(4 * m);
  Interval pi = Interval::pi(128);
  double dev = 0.0;
  for (unsigned k = 1; k <= 2; ++k) {
    if (d.intervals.size() < k) return 1e9;
    const SliceInterval& iv = d.intervals[k - 1];
    Interval lo = Interval::hull(iv.lo.lo, iv.lo.hi, 128);
    Interval hi = Interval::hull(iv.hi.lo, iv.hi.hi, 128);
    Interval dl = lo - Interval::from_long(2 * k - 2, 128) * pi;
    Interval dh = hi - Interval::from_long(2 * k - 1, 128) * pi;
    dev = std::max({dev, abs(dl).hi_d(), abs(dh).hi_d()});
  }
  return dev;
}

inline CheckResult endpoint_convergence(Profile p) {
  unsigned m0 = 5, m1 = p == Profile::Quick ? 10 : 25;
  double first = slice_endpoint_deviation(m0);
  double last = slice_endpoint_deviation(m1);
  bool ok = last < 0.5 && last < first;
  return {"thm-5.6", ok ? CheckStatus::Pass : CheckStatus::Fail,
          detail::fmt("deviation %.6f at m=%u vs %.6f at m=%u", last, m1,
                      first, m0)};
}

inline CheckResult origin_component_shape(Profile p) {
  unsigned nmax = p == Profile::Quick ? 12 : 20;
  for (unsigned n = 1; n <= nmax; ++n) {
    SliceDecomposition d = v_plus(n);
    if (d.intervals.empty() || d.intervals.front().lo.lo != 0)
      return {"obs-O1", CheckStatus::Fail,
              detail::fmt("no component at the origin for n=%u", n)};
    bool singleton = d.intervals.front().degenerate;
    if (singleton == detail::positive_origin_rule(n))
      return {"obs-O1", CheckStatus::Fail,
              detail::fmt("origin component shape contradicts rule at n=%u", n)};
  }
  return {"obs-O1", CheckStatus::Pass,
          detail::fmt("origin component shape matches rule for n=1..%u", nmax)};
}

// Distance from the early slice endpoints to the limiting grid: multiples
// of pi for even n, {0} union {pi/2 + pi*l} for odd n. Only the first two
// intervals enter, and the final endpoint (the truncation of the whole set
// at max V^+_n, which converges to no grid point) is excluded.
inline double grid_deviation(unsigned n) {
  SliceDecomposition d = v_plus_refined(n);
  double pi_d = Interval::pi(128).mid_d(), dev = 0.0;
  std::size_t kmax = std::min<std::size_t>(2, d.intervals.size());
  for (std::size_t i = 0; i < kmax; ++i) {
    const auto& iv = d.intervals[i];
    for (const BigRat& e : {iv.lo.lo, iv.hi.hi}) {
      if (i + 1 == d.intervals.size() && e == iv.hi.hi) continue;
      double v = Interval::from_rat(e, 128).mid_d();
      double best;
      if (n % 2 == 0) {
        best = std::fabs(v - pi_d * std::round(v / pi_d));
      } else {
        best = std::fabs(v);  // the grid includes 0
        double q = std::round((v - pi_d / 2) / pi_d);
        if (q >= 0)
          best = std::min(best, std::fabs(v - (pi_d / 2 + q * pi_d)));
      }
      dev = std::max(dev, best);
    }
  }
  return dev;
}

inline CheckResult grid_convergence(Profile p) {
  unsigned e0 = p == Profile::Quick ? 16 : 20, e1 = p == Profile::Quick ? 20 : 40;
  unsigned o0 = p == Profile::Quick ? 15 : 19, o1 = p == Profile::Quick ? 19 : 39;
  double de0 = grid_deviation(e0), de1 = grid_deviation(e1);
  double do0 = grid_deviation(o0), do1 = grid_deviation(o1);
  bool ok = de1 < de0 && do1 < do0 && de1 < 0.5 && do1 < 0.5;
  return {"obs-O2", ok ? CheckStatus::Pass : CheckStatus::Fail,
          detail::fmt("grid deviation %.4f (n=%u) < %.4f (n=%u); "
                      "%.4f (n=%u) < %.4f (n=%u)",
                      de1, e1, de0, e0, do1, o1, do0, o0)};
}

inline CheckResult farthest_point_bound(Profile p) {
  unsigned nmax = p == Profile::Quick ? 30 : 100;
  mpfr_prec_t prec = 128;
  Interval e = Interval::euler_e(prec);
  for (unsigned n = 1; n <= nmax; ++n) {
    RootBox b = max_v_plus(n);
    Interval nn = Interval::from_long(static_cast<long>(n), prec);
    Interval bound = nn / e + log(nn) / (Interval::from_long(2, prec) * e) +
                     Interval::from_rat(BigRat(12604, 10000), prec);
    if (!certainly_less(Interval::from_rat(b.hi, prec), bound))
      return {"obs-O3", CheckStatus::Fail,
              detail::fmt("farthest point exceeds the bound at n=%u", n)};
  }
  return {"obs-O3", CheckStatus::Pass,
          detail::fmt("farthest slice point below n/e + ln(n)/(2e) + 1.2604 "
                      "for n=1..%u",
                      nmax)};
}

inline CheckResult semidisk_rule(Profile p) {
  unsigned nmax = p == Profile::Quick ? 12 : 20;
  BigRat tol(1, 10000);
  for (unsigned n = 3; n <= nmax; ++n) {
    auto cert = inner_semidisk_radius(n, tol);
    bool exists = cert.has_value() && cert->lo > 0;
    if (exists != detail::positive_origin_rule(n))
      return {"sec6-theorem", CheckStatus::Fail,
              detail::fmt("semi-disk existence contradicts rule at n=%u", n)};
  }
  return {"sec6-theorem", CheckStatus::Pass,
          detail::fmt("inscribed semi-disk exists iff n mod 4 in {0,3}, "
                      "n=3..%u",
                      nmax)};
}

inline CheckResult factorial_bounds(Profile p) {
  unsigned nmax = p == Profile::Quick ? 50 : 200;
  for (unsigned n = 1; n <= nmax; ++n)
    if (!factorial_bounds_check(n))
      return {"lemma-7.1", CheckStatus::Fail,
              detail::fmt("factorial sandwich fails at n=%u", n)};
  return {"lemma-7.1", CheckStatus::Pass,
          detail::fmt("factorial sandwich certified for n=1..%u", nmax)};
}

inline CheckResult quarter_disk_inclusion(Profile) {
  // exact rational points of the circle |z| = 1/4 via tangent half-angle
  for (int k = -50; k <= 50; ++k) {
    BigRat t(k, 10);
    BigRat den = 4 * (1 + t * t);
    BigRat x = (1 - t * t) / den, y = (2 * t) / den;
    x.canonicalize();
    y.canonicalize();
    if (sigma1_contains(x, y).state != Membership::Inside)
      return {"lemma-7.4", CheckStatus::Fail,
              detail::fmt("circle point at t=%d/10 not inside", k)};
  }
  BigRat q(-1, 4);
  if (sigma1_contains(q, BigRat(0)).state != Membership::Inside)
    return {"lemma-7.4", CheckStatus::Fail, "point -1/4 not inside"};
  return {"lemma-7.4", CheckStatus::Pass,
          "102 certified points of the quarter-radius circle are interior"};
}

inline CheckResult distance_construction(Profile) {
  mpfr_prec_t prec = 160;
  Interval e = Interval::euler_e(prec);
  // (a) the left half-circle of radius 1/e meets the region only at +-i/e
  Interval inv_e = Interval::from_long(1, prec) / e;
  {
    CInterval top{Interval::from_long(0, prec), inv_e};
    if (sigma1_contains(top, 1e-25).state != Membership::Boundary)
      return {"lemma-7.5", CheckStatus::Fail, "i/e not on the boundary"};
    for (int j = 1; j <= 200; ++j) {
      // angles in (pi/2, 3pi/2): strictly left half, excluding +-i/e
      Interval phi = Interval::pi(prec) *
                     (Interval::from_rat(BigRat(1, 2), prec) +
                      Interval::from_rat(BigRat(j, 201), prec));
      CInterval z{cos(phi) * inv_e, sin(phi) * inv_e};
      if (sigma1_contains(z, 1e-25).state != Membership::Outside)
        return {"lemma-7.5", CheckStatus::Fail,
                detail::fmt("left circle point %d not outside", j)};
    }
  }
  // (b) the pointwise formula approaches the lower bound as phi -> pi/2+
  Interval rho = Interval::from_long(1, prec);
  Interval lb = distance_lower_bound(rho, prec);
  Interval near = distance_pointwise(
      rho, Interval::pi(prec) * Interval::from_rat(BigRat(1, 2), prec) + Interval::from_rat(BigRat(1, 10000000), prec),
      prec);
  if (std::fabs(near.mid_d() - lb.mid_d()) > 1e-5)
    return {"lemma-7.5", CheckStatus::Fail, "limit identity violated"};
  // (c) monotone increase over (pi/2, pi)
  double prev = -1.0;
  for (int i = 1; i <= 50; ++i) {
    Interval phi = Interval::pi(prec) *
                   (Interval::from_rat(BigRat(1, 2), prec) +
                    Interval::from_rat(BigRat(i, 102), prec));
    double v = distance_pointwise(rho, phi, prec).mid_d();
    if (v < prev)
      return {"lemma-7.5", CheckStatus::Fail,
              detail::fmt("monotonicity fails at sample %d", i)};
    prev = v;
  }
  // (d) bound <= rho - 1/e across sampled rho
  for (int i = 1; i <= 20; ++i) {
    Interval r = Interval::from_rat(BigRat(37 + 8 * i, 100), prec);  // (1/e, 2]
    Interval gap = (r - Interval::from_long(1, prec) / e) -
                   distance_lower_bound(r, prec);
    if (!gap.certainly_positive())
      return {"lemma-7.5", CheckStatus::Fail,
              detail::fmt("upper sanity fails at sample %d", i)};
  }
  return {"lemma-7.5", CheckStatus::Pass,
          "circle intersection, limit identity, monotonicity, and upper "
          "sanity all certified"};
}

inline CheckResult moebius_values(Profile) {
  if (moebius_inf(BigRat(1)) != BigRat(1, 2))
    return {"lemma-7.6", CheckStatus::Fail, "inf at sigma=1 is not 1/2"};
  if (moebius_inf(BigRat(1, 4)) != BigRat(1, 5))
    return {"lemma-7.6", CheckStatus::Fail, "inf at sigma=1/4 is not 1/5"};
  if (moebius_sup_band(Interval::from_long(1, 128)) != BigRat(1))
    return {"lemma-7.6", CheckStatus::Fail, "sup band at rho=1 is not 1"};
  if (moebius_sup_band(Interval::from_long(2, 128)) != BigRat(139, 100))
    return {"lemma-7.6", CheckStatus::Fail, "sup band at rho=2 is not 1.39"};
  // sampled minimization of |w/(w-1)| over |w| = sigma: the inf value must
  // lower-bound every sample, with the minimum attained near w = -sigma
  for (const BigRat& sigma : {BigRat(1), BigRat(1, 4)}) {
    BigRat inf_v = moebius_inf(sigma);
    double observed_min = 1e9;
    for (int k = -40; k <= 40; ++k) {
      BigRat t(k, 20);
      BigRat den = 1 + t * t;
      BigRat x = sigma * (1 - t * t) / den, y = sigma * (2 * t) / den;
      // |w/(w-1)|^2 = (x^2+y^2)/((x-1)^2+y^2), exact rational
      BigRat num = x * x + y * y, d2 = (x - 1) * (x - 1) + y * y;
      if (d2 == 0) continue;  // w = 1 (sigma = 1, t = 0): pole, not a min
      BigRat ratio_sq = num / d2;
      ratio_sq.canonicalize();
      if (ratio_sq < inf_v * inf_v)
        return {"lemma-7.6", CheckStatus::Fail,
                detail::fmt("sample below the inf at k=%d", k)};
      observed_min = std::min(observed_min, ratio_sq.get_d());
    }
    {
      // w = -sigma (the t -> infinity limit), where the inf is attained
      BigRat ratio_sq = (sigma * sigma) / ((sigma + 1) * (sigma + 1));
      ratio_sq.canonicalize();
      if (ratio_sq != inf_v * inf_v)
        return {"lemma-7.6", CheckStatus::Fail, "inf not attained at -sigma"};
      observed_min = std::min(observed_min, ratio_sq.get_d());
    }
    if (std::sqrt(observed_min) > inf_v.get_d() + 1e-3)
      return {"lemma-7.6", CheckStatus::Fail, "inf not approached on circle"};
  }
  return {"lemma-7.6", CheckStatus::Pass,
          "inf values exact, sup bands exact, circle sampling consistent"};
}

inline CheckResult buckholtz(Profile p) {
  std::vector<unsigned> ns = p == Profile::Quick
                                 ? std::vector<unsigned>{6, 12}
                                 : std::vector<unsigned>{6, 12, 20};
  std::size_t samples = p == Profile::Quick ? 100 : 500;
  std::string det;
  for (unsigned n : ns) {
    BuckholtzReport r = buckholtz_bounds_check(n, samples);
    if (!r.all_certified)
      return {"buckholtz", CheckStatus::Fail,
              detail::fmt("a sample bound failed at n=%u", n)};
    det += detail::fmt("n=%u ratios %.4f/%.4f; ", n, r.max_ratio_modulus,
                       r.max_ratio_sigma);
  }
  return {"buckholtz", CheckStatus::Pass,
          det + detail::fmt("%zu samples per set", samples)};
}

inline CheckResult enestrom_roots(Profile p) {
  // float-grade evidence only: reported as informational, never pass/fail
  unsigned nmax = p == Profile::Quick ? 8 : 12;
  double worst = 0.0;
  for (unsigned n = 2; n <= nmax; ++n) {
    auto zs = complex_zeros(scaled_partial_sum(n));
    for (const auto& z : zs) worst = std::max(worst, std::abs(z));
  }
  return {"enestrom-roots", CheckStatus::Informational,
          detail::fmt("max scaled root modulus %.12f over n=2..%u "
                      "(float-grade)",
                      worst, nmax)};
}

inline CheckResult table_radii(const std::string& id, bool left, Profile p) {
  unsigned n0 = left ? 3 : 1;
  unsigned n1 = p == Profile::Quick ? 12 : 20;
  BigRat tol(1, 1000000);
  const char* const* ref = left ? kRefRadiusLeft : kRefRadiusFull;
  BigRat min_hi(-1);
  unsigned min_n = 0;
  for (unsigned n = n0; n <= n1; ++n) {
    RadiusCertificate c = max_modulus(n, left, tol);
    if (!detail::display_matches_up(c.lo, c.hi, ref[n - 1]))
      return {id, CheckStatus::Fail,
              detail::fmt("display mismatch at n=%u (expected %s)", n,
                          ref[n - 1])};
    if (!left && (min_n == 0 || c.hi < min_hi)) {
      min_hi = c.hi;
      min_n = n;
    }
  }
  if (!left && n1 >= 12 && min_n != 8)
    return {id, CheckStatus::Fail,
            detail::fmt("minimum attained at n=%u, not 8", min_n)};
  return {id, CheckStatus::Pass,
          detail::fmt("certified radii match reference display for n=%u..%u%s",
                      n0, n1, left ? "" : "; minimum at n=8")};
}

inline CheckResult table_semidisk(Profile p) {
  unsigned n1 = p == Profile::Quick ? 12 : 20;
  BigRat tol(1, 10000);
  for (const auto& ref : kRefSemiDisk) {
    if (ref.n > n1) continue;
    auto cert = inner_semidisk_radius(ref.n, tol);
    if (!cert)
      return {"table-semidisk", CheckStatus::Fail,
              detail::fmt("no semi-disk at n=%u", ref.n)};
    if (!detail::display_matches_down(cert->lo, cert->hi, ref.rho))
      return {"table-semidisk", CheckStatus::Fail,
              detail::fmt("display mismatch at n=%u (expected %s)", ref.n,
                          ref.rho)};
    BigRat nl = cert->lo * static_cast<long>(ref.n);
    BigRat nh = cert->hi * static_cast<long>(ref.n);
    if (!detail::display_matches_down(nl, nh, ref.n_rho))
      return {"table-semidisk", CheckStatus::Fail,
              detail::fmt("scaled display mismatch at n=%u (expected %s)",
                          ref.n, ref.n_rho)};
  }
  return {"table-semidisk", CheckStatus::Pass,
          detail::fmt("inscribed radii match reference display up to n=%u",
                      n1)};
}

inline CheckResult axis_root_digits(Profile p) {
  if (p == Profile::Quick)
    return {"axis-root-digits", CheckStatus::Pass,
            "skipped in quick profile (full profile refines to 1e-13)"};
  RootBox b = max_v_plus(8, BigRat(BigInt(1), BigInt("10000000000000")));
  BigRat ref("33951402205749/10000000000000");
  ref.canonicalize();
  if (b.lo > ref || b.hi < ref)
    return {"axis-root-digits", CheckStatus::Fail,
            "13-digit reference outside the refined enclosure"};
  return {"axis-root-digits", CheckStatus::Pass,
          "largest axis root of the n=8 slice matches 3.3951402205749"};
}

}  // namespace checks

// --- registry and runner -----------------------------------------------------

using CheckFn = std::function<CheckResult(Profile)>;

inline const std::vector<std::pair<std::string, CheckFn>>& check_registry() {
  static const std::vector<std::pair<std::string, CheckFn>> reg = {
      {"lemma-3.1",
       [](Profile p) {
         return checks::disk_inclusion("lemma-3.1", 2,
                                       p == Profile::Quick ? 12 : 20, BigRat(2),
                                       false);
       }},
      {"cor-3.4",
       [](Profile p) {
         return checks::disk_inclusion("cor-3.4", 2,
                                       p == Profile::Quick ? 12 : 20,
                                       BigRat(8, 5), false);
       }},
      {"thm-4.4",
       [](Profile p) {
         return checks::disk_inclusion("thm-4.4", 3,
                                       p == Profile::Quick ? 12 : 20,
                                       BigRat(19, 20), true);
       }},
      {"lemma-5.1", checks::e_identity},
      {"cor-5.2", checks::origin_class_rule},
      {"thm-5.6", checks::endpoint_convergence},
      {"obs-O1", checks::origin_component_shape},
      {"obs-O2", checks::grid_convergence},
      {"obs-O3", checks::farthest_point_bound},
      {"sec6-theorem", checks::semidisk_rule},
      {"lemma-7.1", checks::factorial_bounds},
      {"lemma-7.4", checks::quarter_disk_inclusion},
      {"lemma-7.5", checks::distance_construction},
      {"lemma-7.6", checks::moebius_values},
      {"buckholtz", checks::buckholtz},
      {"enestrom-roots", checks::enestrom_roots},
      {"table-full",
       [](Profile p) { return checks::table_radii("table-full", false, p); }},
      {"table-left",
       [](Profile p) { return checks::table_radii("table-left", true, p); }},
      {"table-semidisk", checks::table_semidisk},
      {"axis-root-digits", checks::axis_root_digits},
  };
  return reg;
}

inline CheckResult run_check(const std::string& check_id, Profile profile) {
  for (const auto& [id, fn] : check_registry())
    if (id == check_id) {
      try {
        return fn(profile);
      } catch (const Indeterminate& e) {
        return {check_id, CheckStatus::Indeterminate, e.what()};
      } catch (const BudgetExhausted& e) {
        return {check_id, CheckStatus::Indeterminate, e.what()};
      }
    }
  throw UnknownCheck("run_check: unknown check id " + check_id);
}

// Runs every registered check. `jobs` only controls scheduling; the report
// order and content are independent of it.
inline std::vector<CheckResult> run_all(Profile profile, unsigned jobs = 1) {
  const auto& reg = check_registry();
  std::vector<CheckResult> out(reg.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < reg.size();
         i = next.fetch_add(1))
      out[i] = run_check(reg[i].first, profile);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

inline nlohmann::json report_json(const std::vector<CheckResult>& results,
                                  Profile profile) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : results)
    checks.push_back({{"check_id", r.check_id},
                      {"status", status_str(r.status)},
                      {"detail", r.detail}});
  return {{"profile", profile == Profile::Quick ? "quick" : "full"},
          {"checks", checks}};
}

}  // namespace expsum
