#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "expsum/bigrat.hpp"
#include "expsum/errors.hpp"
#include "expsum/families.hpp"
#include "expsum/intpoly.hpp"
#include "expsum/interval.hpp"
#include "expsum/ratpoly2.hpp"
#include "expsum/rootiso.hpp"

namespace expsum {

// --- membership ------------------------------------------------------------

enum class Membership { Inside, Outside, Boundary };

struct ContainResult {
  Membership state;
  double boundary_width = 0.0;  // enclosure width when state == Boundary
};

namespace detail {

// Exact rational evaluation of G_n(x,y) = |sum_{k<=n} w^k/k!|^2 - 1 at
// w = x+iy (or n(x+iy) when scaled).
inline BigRat g_exact(unsigned n, const BigRat& x, const BigRat& y,
                      bool scaled) {
  BigRat sx = scaled ? BigRat(x * static_cast<long>(n)) : x;
  BigRat sy = scaled ? BigRat(y * static_cast<long>(n)) : y;
  BigRat pre(1), pim(0);  // running power w^k
  BigRat A(1), B(0);
  BigInt kf(1);
  for (unsigned k = 1; k <= n; ++k) {
    BigRat nre = pre * sx - pim * sy;
    BigRat nim = pre * sy + pim * sx;
    pre = nre;
    pim = nim;
    kf *= k;
    BigRat inv(BigInt(1), kf);
    inv.canonicalize();
    A += pre * inv;
    B += pim * inv;
  }
  BigRat g = A * A + B * B - 1;
  g.canonicalize();
  return g;
}

}  // namespace detail

// Certified membership of z in U_n (or S_n when scaled). Exact rational
// input decides Inside/Outside/Boundary(0) unconditionally.
inline ContainResult contains(unsigned n, const BigRat& x, const BigRat& y,
                              bool scaled) {
  if (n < 1) throw DomainError("contains: n >= 1 required");
  int s = sgn(detail::g_exact(n, x, y, scaled));
  if (s < 0) return {Membership::Inside, 0.0};
  if (s > 0) return {Membership::Outside, 0.0};
  return {Membership::Boundary, 0.0};
}

// Interval input: adaptive precision until the sign of G_n is certified or
// the enclosure width drops below `resolution` (then Boundary).
inline ContainResult contains(unsigned n, const CInterval& z, bool scaled,
                              double resolution = 1e-30) {
  if (n < 1) throw DomainError("contains: n >= 1 required");
  const IntPoly p = scaled ? scaled_partial_sum(n) : partial_sum(n);
  for (mpfr_prec_t prec = Interval::kDefaultPrec;; prec *= 2) {
    CInterval w{z.re.widened(prec), z.im.widened(prec)};
    Interval g = abs_sq(p.eval(w, prec)) - Interval::from_long(1, prec);
    if (g.certainly_negative()) return {Membership::Inside, 0.0};
    if (g.certainly_positive()) return {Membership::Outside, 0.0};
    if (g.width() < resolution || prec >= Interval::kMaxPrec)
      return {Membership::Boundary, g.width()};
  }
}

// --- imaginary-axis slice decomposition ------------------------------------

struct SliceInterval {
  RootBox lo, hi;      // equal for singletons; lo of the first interval is 0
  bool degenerate;     // true when the component is a single point
};

struct SliceDecomposition {
  unsigned n = 0;
  std::vector<SliceInterval> intervals;  // ordered, pairwise disjoint
};

// Decomposition of V_n^+ = {y >= 0 : E_n(y) <= 0} into maximal closed
// components, driven entirely by the sign structure of E_n.
inline SliceDecomposition v_plus(unsigned n) {
  if (n < 1) throw DomainError("v_plus: n >= 1 required");
  IntPoly e = e_polynomial(n);
  auto boxes = isolate_real_roots(e, RootDomain::nonnegative());
  SliceDecomposition out;
  out.n = n;
  std::optional<RootBox> open;  // left endpoint of the component in progress
  for (auto& b : boxes) {
    if (open) {
      if (b.sign_right > 0) {
        out.intervals.push_back({*open, b, false});
        open.reset();
      }
      // sign_right < 0: even-multiplicity touch point interior to the
      // component; keep the component open
    } else {
      if (b.sign_right < 0)
        open = b;
      else
        out.intervals.push_back({b, b, true});
    }
  }
  if (open)
    throw ConvergenceFailure("v_plus: unbounded component (E_n -> +inf fails)");
  return out;
}

// Largest real root of E_n, i.e. max(V_n^+), refined to `width`.
inline RootBox max_v_plus(unsigned n, const BigRat& width = dyadic(BigInt(1), -40)) {
  if (n < 1) throw DomainError("max_v_plus: n >= 1 required");
  IntPoly e = e_polynomial(n);
  auto boxes = isolate_real_roots(e, RootDomain::nonnegative());
  if (boxes.empty()) throw ConvergenceFailure("max_v_plus: no roots found");
  return refine_root_sf(boxes.back(), squarefree_part(e), width);
}

// --- origin component classification ---------------------------------------

enum class OriginClass { Singleton, PositiveInterval };

// The component of 0 in V_n^+ is {0} iff E_n > 0 just right of 0, i.e. iff
// the lowest-order nonzero coefficient of E_n is positive.
inline OriginClass origin_component_class(unsigned n) {
  if (n < 1) throw DomainError("origin_component_class: n >= 1 required");
  IntPoly e = e_polynomial(n);
  std::size_t v = e.valuation();
  int s = sign(e.rat_coeff(v));
  if (s == 0) throw ConvergenceFailure("origin_component_class: zero E_n");
  return s > 0 ? OriginClass::Singleton : OriginClass::PositiveInterval;
}

// --- boundary trace --------------------------------------------------------

struct TraceSample {
  BigRat y;
  bool has_root = false;
  bool root_is_zero = false;
  int sign = 0;                 // sign of x_min
  double log10_abs_x = 0.0;     // midpoint of the certified log10 enclosure
  double log10_width = 0.0;     // enclosure width
  RootBox box;                  // the certified root box itself
};

struct BoundaryTrace {
  unsigned n = 0;
  std::vector<TraceSample> samples;
};

// For each y, the smallest-|x| real root of x -> G_n(x, y), reported with
// its sign and a certified log10 magnitude (the values span hundreds of
// orders of magnitude, so only the logarithm is representable in double).
inline BoundaryTrace boundary_trace(unsigned n, const std::vector<BigRat>& ys) {
  if (n < 1) throw DomainError("boundary_trace: n >= 1 required");
  BoundaryTrace out;
  out.n = n;
  for (const BigRat& y : ys) {
    if (y < 0) throw DomainError("boundary_trace: y >= 0 required");
    TraceSample s;
    s.y = y;
    IntPoly slice = axis_slice_poly(n, y);
    auto r = smallest_abs_root(slice);
    if (r) {
      s.has_root = true;
      s.box = *r;
      if (r->lo == 0 && r->hi == 0) {
        s.root_is_zero = true;
      } else {
        s.sign = r->hi < 0 ? -1 : 1;
        Interval m = Interval::hull(abs_rat(r->lo), abs_rat(r->hi), 128);
        Interval l = log10(m);
        s.log10_abs_x = l.mid_d();
        s.log10_width = l.width();
      }
    }
    out.samples.push_back(std::move(s));
  }
  return out;
}

// --- radial slices ---------------------------------------------------------

struct RadialSlice {
  bool zero_only = false;       // R_n(phi) == {0}
  std::optional<RootBox> component_of_zero_max;  // sup of the component of 0
  std::optional<RootBox> global_max;             // largest r with g(r) = 0
};

namespace detail {

// Feasible-set sweep for a univariate q with q(0) = 0 on [0, inf):
// returns (max of component of 0, global max root).
inline RadialSlice ray_feasibility(const IntPoly& q) {
  RadialSlice out;
  auto boxes = isolate_real_roots(q, RootDomain::nonnegative());
  if (boxes.empty()) throw ConvergenceFailure("ray_feasibility: no root at 0");
  // component of zero: extend while the sign to the right stays <= 0
  std::size_t i = 0;
  while (i + 1 < boxes.size() && boxes[i].sign_right < 0) ++i;
  if (boxes[i].sign_right >= 0) {
    out.component_of_zero_max = boxes[i];
    out.zero_only = (i == 0 && boxes[0].is_point() && boxes[0].lo == 0);
  } else {
    throw ConvergenceFailure("ray_feasibility: unbounded feasible ray");
  }
  out.global_max = boxes.back();
  return out;
}

}  // namespace detail

// Extent of the scaled region S_n along the rational direction t (tangent
// half-angle; t >= 1 covers phi in [pi/2, pi)). Reports both the sup of
// the feasible component containing 0 and the global outermost boundary
// crossing, which differ when the ray re-enters S_n further out.
inline RadialSlice radial_slice_max(unsigned n, const RatPoly2& g_scaled,
                                    const BigRat& t) {
  if (n < 1) throw DomainError("radial_slice_max: n >= 1 required");
  return detail::ray_feasibility(ray_restrict(g_scaled, t));
}

inline RadialSlice radial_slice_max(unsigned n, const BigRat& t) {
  return radial_slice_max(n, membership_poly(n, /*scaled=*/true), t);
}

// Same along the exact direction (-1, 0).
inline RadialSlice radial_slice_max_neg_real(unsigned n,
                                             const RatPoly2& g_scaled) {
  if (n < 1) throw DomainError("radial_slice_max: n >= 1 required");
  return detail::ray_feasibility(ray_restrict_neg_real(g_scaled));
}

}  // namespace expsum
