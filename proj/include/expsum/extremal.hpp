#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "expsum/bigrat.hpp"
#include "expsum/errors.hpp"
#include "expsum/families.hpp"
#include "expsum/interval.hpp"
#include "expsum/ratpoly2.hpp"
#include "expsum/region.hpp"
#include "expsum/rootiso.hpp"

namespace expsum {

// --- double interval (hot path of the branch-and-bound) --------------------
//
// Hardware doubles with one outward nextafter per operation. Rounding is
// to-nearest, so the computed result is within half an ulp of the exact
// one; stepping each endpoint one ulp outward therefore preserves
// containment unconditionally.

struct DInterval {
  double lo, hi;

  static DInterval point(double v) { return {v, v}; }
  static double down(double v) {
    return std::nextafter(v, -std::numeric_limits<double>::infinity());
  }
  static double up(double v) {
    return std::nextafter(v, std::numeric_limits<double>::infinity());
  }

  bool certainly_positive() const { return lo > 0.0; }
  bool certainly_negative() const { return hi < 0.0; }
  bool certainly_nonpositive() const { return hi <= 0.0; }

  friend DInterval operator+(DInterval a, DInterval b) {
    return {down(a.lo + b.lo), up(a.hi + b.hi)};
  }
  friend DInterval operator-(DInterval a, DInterval b) {
    return {down(a.lo - b.hi), up(a.hi - b.lo)};
  }
  friend DInterval operator*(DInterval a, DInterval b) {
    double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo,
           p4 = a.hi * b.hi;
    return {down(std::min(std::min(p1, p2), std::min(p3, p4))),
            up(std::max(std::max(p1, p2), std::max(p3, p4)))};
  }
  friend DInterval sqr(DInterval a) {
    if (a.lo >= 0.0) return {down(a.lo * a.lo), up(a.hi * a.hi)};
    if (a.hi <= 0.0) return {down(a.hi * a.hi), up(a.lo * a.lo)};
    double m = std::max(-a.lo, a.hi);
    return {0.0, up(m * m)};
  }
};

// Outward double enclosure of an exact rational (mpq_get_d truncates
// toward zero, hence within one ulp).
inline DInterval dinterval_from_rat(const BigRat& q) {
  double d = q.get_d();
  return {DInterval::down(d), DInterval::up(d)};
}

inline DInterval dinterval_from(const Interval& v) {
  return {v.lo_d(), v.hi_d()};
}

// Dense evaluator for a bivariate polynomial that is even in y, written as
// a polynomial in (x, u) with u = y^2; Horner in u then x. Box evaluation
// intersects the naive enclosure with a first-order mean-value form
//   G(c) + Gx(box)(x - cx) + Gu(box)(u - cu),
// which stays proportional to the true gradient instead of the sum of
// absolute coefficient contributions (these polynomials cancel heavily).
class BivarEval {
 public:
  explicit BivarEval(const RatPoly2& g) {
    if (!g.only_even_y())
      throw DomainError("BivarEval: polynomial must be even in y");
    dx_ = g.degree_x();
    du_ = g.degree_y() / 2;
    auto grid = [&](unsigned dx, unsigned du) {
      return std::vector<DInterval>((dx + 1) * (du + 1), DInterval{0.0, 0.0});
    };
    c_ = grid(dx_, du_);
    gx_ = grid(dx_ > 0 ? dx_ - 1 : 0, du_);
    gu_ = grid(dx_, du_ > 0 ? du_ - 1 : 0);
    for (const auto& [k, v] : g.terms()) {
      unsigned i = k.first, j = k.second / 2;
      c_[i * (du_ + 1) + j] = dinterval_from_rat(v);
      if (i >= 1)
        gx_[(i - 1) * (du_ + 1) + j] =
            dinterval_from_rat(BigRat(v * static_cast<long>(i)));
      if (j >= 1)
        gu_[i * du_ + (j - 1)] =
            dinterval_from_rat(BigRat(v * static_cast<long>(j)));
    }
  }

  // Enclosure over the box; `center_value` (if given) receives a certified
  // enclosure of G at the box center point, usable as a witness check.
  DInterval eval(DInterval x, DInterval y,
                 DInterval* center_value = nullptr) const {
    DInterval u = sqr(y);
    DInterval naive = horner(c_, dx_, du_, x, u);
    // center at the midpoint of the (x,y) box so that center_value refers
    // to a representable point usable as a feasibility witness
    double mx = 0.5 * (x.lo + x.hi), my = 0.5 * (y.lo + y.hi);
    DInterval cx = DInterval::point(mx), cu = sqr(DInterval::point(my));
    DInterval g0 = horner(c_, dx_, du_, cx, cu);
    if (center_value) *center_value = g0;
    if (x.lo == x.hi && y.lo == y.hi) return g0;
    DInterval dgx = dx_ > 0 ? horner(gx_, dx_ - 1, du_, x, u) : DInterval{0, 0};
    DInterval dgu = du_ > 0 ? horner(gu_, dx_, du_ - 1, x, u) : DInterval{0, 0};
    DInterval mv = g0 + dgx * (x - cx) + dgu * (u - cu);
    return {std::max(naive.lo, mv.lo), std::min(naive.hi, mv.hi)};
  }

 private:
  static DInterval horner(const std::vector<DInterval>& c, unsigned dx,
                          unsigned du, DInterval x, DInterval u) {
    DInterval acc{0.0, 0.0};
    for (unsigned i = dx + 1; i-- > 0;) {
      DInterval row{0.0, 0.0};
      const DInterval* r = &c[i * (du + 1)];
      for (unsigned j = du + 1; j-- > 0;) row = row * u + r[j];
      acc = acc * x + row;
    }
    return acc;
  }

  unsigned dx_ = 0, du_ = 0;
  std::vector<DInterval> c_, gx_, gu_;
};

// Enclosure of G_n = |Q_n|^2 - 1 over a box, where Q_n is the partial sum
// (of nz when scaled). Recentering Q_n at the box midpoint by an exact
// Taylor shift makes the monomial enclosure in the centered variable
// nearly tight; evaluating the expanded square directly loses everything
// to cancellation once the coefficients n^k/k! get large.
class PartialSumEval {
 public:
  PartialSumEval(unsigned n, bool scaled) : n_(n) {
    if (n < 1) throw DomainError("PartialSumEval: n >= 1 required");
    BigInt kf(1), np(1);
    for (unsigned k = 0; k <= n; ++k) {
      BigRat c(np, kf);
      c.canonicalize();
      coef_.push_back(dinterval_from_rat(c));
      kf *= (k + 1);
      if (scaled) np *= n;
    }
  }

  // Enclosure over the box; `center_value` (if given) receives a certified
  // enclosure of G at the box center point, usable as a witness check.
  DInterval eval(DInterval x, DInterval y,
                 DInterval* center_value = nullptr) const {
    const double mx = 0.5 * (x.lo + x.hi), my = 0.5 * (y.lo + y.hi);
    const DInterval cr = DInterval::point(mx), ci = DInterval::point(my);
    // synthetic division: br/bi become the Taylor coefficients Q^(j)(c)/j!
    std::vector<DInterval> br(coef_), bi(coef_.size(), DInterval{0.0, 0.0});
    for (unsigned i = 0; i < n_; ++i) {
      for (unsigned j = n_ - 1;; --j) {
        DInterval tr = br[j + 1] * cr - bi[j + 1] * ci;
        DInterval ti = br[j + 1] * ci + bi[j + 1] * cr;
        br[j] = br[j] + tr;
        bi[j] = bi[j] + ti;
        if (j == i) break;
      }
    }
    const DInterval one{1.0, 1.0};
    DInterval msq = sqr(br[0]) + sqr(bi[0]);
    if (center_value) *center_value = msq - one;
    if (x.lo == x.hi && y.lo == y.hi) return msq - one;
    // |Q| over the box lies within sum_{j>=1} |b_j| r^j of |Q(c)|
    double rx = std::max(DInterval::up(x.hi - mx), DInterval::up(mx - x.lo));
    double ry = std::max(DInterval::up(y.hi - my), DInterval::up(my - y.lo));
    double r = DInterval::up(
        std::sqrt(DInterval::up(DInterval::up(rx * rx) + DInterval::up(ry * ry))));
    double s = 0.0;
    for (unsigned j = n_; j >= 1; --j) {
      double ar = std::max(std::fabs(br[j].lo), std::fabs(br[j].hi));
      double ai = std::max(std::fabs(bi[j].lo), std::fabs(bi[j].hi));
      double ab = DInterval::up(
          std::sqrt(DInterval::up(DInterval::up(ar * ar) + DInterval::up(ai * ai))));
      s = DInterval::up(DInterval::up(s * r) + ab);
    }
    s = DInterval::up(s * r);
    double mlo = DInterval::down(std::sqrt(msq.lo < 0.0 ? 0.0 : msq.lo));
    double mhi = DInterval::up(std::sqrt(msq.hi));
    DInterval a{std::max(0.0, DInterval::down(mlo - s)), DInterval::up(mhi + s)};
    return sqr(a) - one;
  }

 private:
  unsigned n_;
  std::vector<DInterval> coef_;
};

// --- certificates ----------------------------------------------------------

enum class RadiusMode { Full, LeftHalf, InnerSemiDisk };

struct RadiusCertificate {
  unsigned n = 0;
  RadiusMode mode = RadiusMode::Full;
  BigRat lo, hi;          // certified enclosure of the extremal radius
  BigRat witness_x, witness_y;
  std::uint64_t boxes_processed = 0;
};

class BudgetExhaustedWithCertificate : public BudgetExhausted {
 public:
  BudgetExhaustedWithCertificate(const std::string& what, RadiusCertificate c)
      : BudgetExhausted(what), best_so_far(std::move(c)) {}
  RadiusCertificate best_so_far;
};

namespace detail {

struct Box {
  double x0, x1, y0, y1;
  double wx() const { return x1 - x0; }
  double wy() const { return y1 - y0; }
};

// Upper bound (rounded up) of x^2+y^2 over the box: attained at a corner.
inline double box_dist_sq_ub(const Box& b) {
  double ax = std::max(std::fabs(b.x0), std::fabs(b.x1));
  double ay = std::max(std::fabs(b.y0), std::fabs(b.y1));
  return DInterval::up(DInterval::up(ax * ax) + DInterval::up(ay * ay));
}
// Lower bound of x^2+y^2 over the box (0 if the box contains the origin).
inline double box_dist_sq_lb(const Box& b) {
  double ax = (b.x0 > 0.0) ? b.x0 : (b.x1 < 0.0 ? -b.x1 : 0.0);
  double ay = (b.y0 > 0.0) ? b.y0 : (b.y1 < 0.0 ? -b.y1 : 0.0);
  return DInterval::down(DInterval::down(ax * ax) + DInterval::down(ay * ay));
}
// Certified lower bound of sqrt(x^2+y^2) at an exact double point.
inline double point_dist_down(double x, double y) {
  DInterval d = sqr(DInterval::point(x)) + sqr(DInterval::point(y));
  return DInterval::down(std::sqrt(d.lo));
}

inline BigRat rat_from_double(double v) {
  BigRat r(v);  // doubles convert exactly
  r.canonicalize();
  return r;
}

// A certified feasible point together with a lower bound on its distance
// from the origin. Used to prime the branch-and-bound so that pruning is
// effective from the first box.
struct FeasibleSeed {
  double dist_lo = 0.0;
  BigRat x, y;
};

// Outermost boundary crossing along one ray. The tangent half-angle
// parametrization keeps the direction exactly unit-length, so the crossing
// radius is itself the distance of the witness point.
inline void consider_ray_seed(const RatPoly2& g, const BigRat* t,
                              FeasibleSeed& best) {
  IntPoly q = t ? ray_restrict(g, *t) : ray_restrict_neg_real(g);
  auto boxes = isolate_real_roots(q, RootDomain::nonnegative());
  if (boxes.empty()) return;
  RootBox rb = refine_root_sf(boxes.back(), squarefree_part(q),
                              dyadic(BigInt(1), -40));
  BigRat r = rb.lo;
  if (r <= 0) return;
  if (q.sign_at(r) > 0) return;  // endpoint not certifiably feasible
  double d = DInterval::down(r.get_d());  // get_d truncates toward zero
  if (d <= best.dist_lo) return;
  best.dist_lo = d;
  if (t) {
    BigRat den = BigRat(1) + *t * *t;
    best.x = r * (BigRat(1) - *t * *t) / den;
    best.y = r * (BigRat(2) * *t) / den;
    best.x.canonicalize();
    best.y.canonicalize();
  } else {
    best.x = -r;
    best.y = 0;
  }
}

// Coarse angular grid followed by local bisection around the best ray.
// Heuristic placement, certified values: every candidate is an exact
// feasible point, so the returned bound is valid regardless of whether the
// true maximizer was found.
inline FeasibleSeed seed_from_rays(const RatPoly2& g, bool half_plane_only) {
  FeasibleSeed best;
  std::vector<BigRat> grid;
  if (!half_plane_only)
    for (int k = 0; k < 16; ++k) grid.emplace_back(k, 16);  // phi in [0, pi/2)
  for (int k = 0; k <= 16; ++k)
    grid.push_back(BigRat(1) + BigRat(k, 32));              // [pi/2, ~2.09]
  for (const char* s : {"7/4", "2", "5/2", "3", "4", "6", "10", "18"})
    grid.push_back(BigRat(s));                              // up to ~3.03
  std::sort(grid.begin(), grid.end());
  std::vector<std::pair<BigRat, double>> samples;  // (t, certified radius lo)
  for (const BigRat& t : grid) {
    FeasibleSeed cand;
    consider_ray_seed(g, &t, cand);
    samples.emplace_back(t, cand.dist_lo);
    if (cand.dist_lo > best.dist_lo) best = cand;
  }
  consider_ray_seed(g, nullptr, best);  // direction (-1, 0)
  for (int round = 0; round < 12; ++round) {
    std::size_t bi = 0;
    for (std::size_t i = 1; i < samples.size(); ++i)
      if (samples[i].second > samples[bi].second) bi = i;
    BigRat tl = bi > 0 ? samples[bi - 1].first
                       : BigRat(samples[bi].first - BigRat(1, 32));
    BigRat tr = bi + 1 < samples.size() ? samples[bi + 1].first
                                        : BigRat(samples[bi].first * 2);
    for (BigRat tm : {BigRat((tl + samples[bi].first) / 2),
                      BigRat((samples[bi].first + tr) / 2)}) {
      if (half_plane_only && tm < 1) tm = 1;
      tm.canonicalize();
      FeasibleSeed cand;
      consider_ray_seed(g, &tm, cand);
      if (cand.dist_lo > best.dist_lo) best = cand;
      auto pos = std::lower_bound(
          samples.begin(), samples.end(), tm,
          [](const auto& a, const BigRat& v) { return a.first < v; });
      if (pos == samples.end() || pos->first != tm)
        samples.insert(pos, {tm, cand.dist_lo});
    }
  }
  return best;
}

}  // namespace detail

// --- global max-modulus branch-and-bound (Tables 1 and 2) ------------------
//
// Maximizes |z| over S_n (scaled region), optionally restricted to
// Re z <= 0, by best-first interval branch-and-bound on G_n. Upper bounds
// come from box pruning; lower bounds from boxes proven entirely feasible
// (every corner of such a box is a feasible witness). Deterministic and
// single-threaded by construction.
inline RadiusCertificate max_modulus(unsigned n, bool half_plane_only,
                                     const BigRat& tol,
                                     std::uint64_t budget = 80'000'000) {
  if (n < 1) throw DomainError("max_modulus: n >= 1 required");
  if (tol <= 0) throw DomainError("max_modulus: tol > 0 required");
  const double tol_d = tol.get_d();
  RatPoly2 g = membership_poly(n, /*scaled=*/true);
  PartialSumEval G(n, /*scaled=*/true);

  struct Node {
    double ub_sq;
    std::uint64_t seq;
    detail::Box box;
    bool operator<(const Node& o) const {
      return ub_sq < o.ub_sq || (ub_sq == o.ub_sq && seq > o.seq);
    }
  };
  std::priority_queue<Node> pq;
  std::uint64_t seq = 0, processed = 0;
  detail::Box root{-2.05, half_plane_only ? 0.0 : 2.05, 0.0, 2.05};
  pq.push({detail::box_dist_sq_ub(root), seq++, root});

  // Prime the bound with certified ray crossings; without this, the search
  // stalls on regions whose boundary runs nearly tangent to the extremal
  // circle (pronounced for larger n).
  detail::FeasibleSeed seed = detail::seed_from_rays(g, half_plane_only);
  double best_lo = seed.dist_lo;  // certified lower bound on the max radius
  double feas_hi = 0.0;           // upper bound over fully-feasible boxes
  BigRat wit_x = seed.x, wit_y = seed.y;

  auto make_cert = [&](double hi) {
    RadiusCertificate c;
    c.n = n;
    c.mode = half_plane_only ? RadiusMode::LeftHalf : RadiusMode::Full;
    c.lo = detail::rat_from_double(best_lo);
    c.hi = detail::rat_from_double(hi);
    c.witness_x = wit_x;
    c.witness_y = wit_y;
    c.boxes_processed = processed;
    return c;
  };

  while (!pq.empty()) {
    Node nd = pq.top();
    pq.pop();
    double ub = DInterval::up(std::sqrt(nd.ub_sq));
    if (ub - best_lo <= tol_d) return make_cert(ub);
    if (++processed > budget)
      throw BudgetExhaustedWithCertificate(
          "max_modulus: box budget exhausted", make_cert(ub));

    const detail::Box& b = nd.box;
    DInterval gcenter;
    DInterval gx = G.eval({b.x0, b.x1}, {b.y0, b.y1}, &gcenter);
    if (gx.certainly_positive()) continue;  // entirely outside S_n
    if (gx.certainly_nonpositive()) {
      // fully feasible: the farthest corner is a certified witness
      double cx = (std::fabs(b.x0) >= std::fabs(b.x1)) ? b.x0 : b.x1;
      double cy = b.y1;
      double d = detail::point_dist_down(cx, cy);
      if (d > best_lo) {
        best_lo = d;
        wit_x = detail::rat_from_double(cx);
        wit_y = detail::rat_from_double(cy);
      }
      feas_hi = std::max(feas_hi, DInterval::up(std::sqrt(nd.ub_sq)));
      continue;
    }
    // center witness attempt (already computed during box evaluation)
    double mx = 0.5 * (b.x0 + b.x1), my = 0.5 * (b.y0 + b.y1);
    if (gcenter.certainly_nonpositive()) {
      double d = detail::point_dist_down(mx, my);
      if (d > best_lo) {
        best_lo = d;
        wit_x = detail::rat_from_double(mx);
        wit_y = detail::rat_from_double(my);
      }
    }
    // split along the wider edge
    detail::Box c1 = b, c2 = b;
    if (b.wx() >= b.wy()) {
      c1.x1 = mx;
      c2.x0 = mx;
    } else {
      c1.y1 = my;
      c2.y0 = my;
    }
    for (const detail::Box& c : {c1, c2}) {
      double u = detail::box_dist_sq_ub(c);
      if (DInterval::up(std::sqrt(u)) > best_lo) pq.push({u, seq++, c});
    }
  }
  // queue drained: everything is either infeasible, dominated by best_lo,
  // or inside a fully-feasible box whose reach is feas_hi
  return make_cert(std::max(best_lo, feas_hi));
}

// --- inclusion / infeasibility engines -------------------------------------

namespace detail {

enum class SweepOutcome { Proved, Violation, Indeterminate };

struct SweepResult {
  SweepOutcome outcome;
  double vx = 0.0, vy = 0.0;  // a violating point when outcome == Violation
  std::uint64_t processed = 0;
};

// Proves the infeasibility of
//   { (x,y) : x in [x0,x1], y in [0,ymax], dist constraint, G-side }
// or finds a certified violating point. Used in two flavors:
//   inside_disk  = true : set is {|z| <= r, G > 0}   (semi-disk inclusion)
//   inside_disk  = false: set is {|z| >  r, G <= 0}  (coverage by D_r)
// `touch_rule`, when provided, certifies G <= 0 on origin-adjacent boxes
// where plain interval evaluation cannot decide (tangential touch).
template <typename GEval, typename TouchRule>
inline SweepResult infeasibility_sweep(const GEval& G, double x0, double x1,
                                       double ymax, DInterval r_sq,
                                       bool inside_disk, TouchRule&& touch_rule,
                                       std::uint64_t budget, double min_size) {
  std::vector<Box> stack{Box{x0, x1, 0.0, ymax}};
  SweepResult res{SweepOutcome::Proved, 0.0, 0.0, 0};
  bool any_indeterminate = false;
  while (!stack.empty()) {
    Box b = stack.back();
    stack.pop_back();
    if (++res.processed > budget) return {SweepOutcome::Indeterminate, 0, 0, res.processed};

    double dlb = box_dist_sq_lb(b), dub = box_dist_sq_ub(b);
    if (inside_disk && dlb > r_sq.hi) continue;   // entirely outside the disk
    if (!inside_disk && dub <= r_sq.lo) continue; // entirely inside the disk

    DInterval g = G.eval({b.x0, b.x1}, {b.y0, b.y1});
    if (inside_disk) {
      if (g.certainly_nonpositive()) continue;
      if (touch_rule(b)) continue;
      // certified violation: whole box strictly inside the disk, G > 0
      if (g.certainly_positive() && dub < r_sq.lo) {
        return {SweepOutcome::Violation, 0.5 * (b.x0 + b.x1),
                0.5 * (b.y0 + b.y1), res.processed};
      }
    } else {
      if (g.certainly_positive()) continue;  // not in S_n
      if (g.certainly_nonpositive() && dlb > r_sq.hi) {
        return {SweepOutcome::Violation, 0.5 * (b.x0 + b.x1),
                0.5 * (b.y0 + b.y1), res.processed};
      }
    }
    if (b.wx() <= min_size && b.wy() <= min_size) {
      any_indeterminate = true;
      continue;
    }
    Box c1 = b, c2 = b;
    if (b.wx() >= b.wy()) {
      double m = 0.5 * (b.x0 + b.x1);
      c1.x1 = m;
      c2.x0 = m;
    } else {
      double m = 0.5 * (b.y0 + b.y1);
      c1.y1 = m;
      c2.y0 = m;
    }
    stack.push_back(c1);
    stack.push_back(c2);
  }
  if (any_indeterminate) res.outcome = SweepOutcome::Indeterminate;
  return res;
}

inline bool no_touch_rule(const Box&) { return false; }

}  // namespace detail

// --- maximal inscribed left semi-disk (Table 3) ----------------------------

// Smallest positive root of E_n, refined to `width` (unscaled y).
inline RootBox first_positive_e_root(unsigned n, const BigRat& width) {
  IntPoly e = e_polynomial(n);
  auto boxes = isolate_real_roots(e, RootDomain::nonnegative());
  for (auto& b : boxes) {
    if (b.hi == 0) continue;  // the root at the origin
    return refine_root_sf(b, squarefree_part(e), width);
  }
  throw ConvergenceFailure("first_positive_e_root: no positive root");
}

// rho_n^*: the maximal rho such that D_rho cap {Re <= 0} is contained in
// S_n. Returns nullopt when the origin component of V_n^+ is a singleton
// (no positive rho exists). Fast path: rho = y_{n,1}/n, certified by an
// infeasibility sweep in unscaled coordinates; the tangential touches at
// the origin and at (0, y_{n,1}) are discharged through the decomposition
// G_n(x,y) = E_n(y) + x*H_n(x,y), H_n(0,0) = 2 > 0: on boxes with x <= 0,
// y below the first positive root of E_n, and H_n certified positive,
// G_n <= 0 follows without resolving the sign of G_n itself. If the fast
// path finds a genuine violation (n = 4), bisect on rho.
inline std::optional<RadiusCertificate> inner_semidisk_radius(
    unsigned n, const BigRat& tol, std::uint64_t budget = 80'000'000) {
  if (n < 1) throw DomainError("inner_semidisk_radius: n >= 1 required");
  if (origin_component_class(n) == OriginClass::Singleton) return std::nullopt;

  // Unscaled membership polynomial and the H-factor of G - E = x*H.
  RatPoly2 g = membership_poly(n, /*scaled=*/false);
  RatPoly2 h;
  for (const auto& [k, v] : g.terms())
    if (k.first >= 1) h.add_term(k.first - 1, k.second, v);
  PartialSumEval G(n, /*scaled=*/false);
  BivarEval H(h);

  // y_{n,1} to far below tol (tol is in scaled units; multiply by n).
  BigRat width = tol * static_cast<long>(n);
  mpq_div_2exp(width.get_mpq_t(), width.get_mpq_t(), 16);
  RootBox y1 = first_positive_e_root(n, width);
  // Upper-bound validity: the point (0, y1.hi) must lie outside U_n, so
  // that no semi-disk of radius > y1.hi fits. Exact sign check of E_n.
  if (e_polynomial(n).sign_at(y1.hi) <= 0)
    throw ConvergenceFailure(
        "inner_semidisk_radius: component does not end at the first root");
  const double y1_lo_d = Interval::from_rat(y1.lo, 64).lo_d();  // <= y_{n,1}
  const double y1_hi_d = Interval::from_rat(y1.hi, 64).hi_d();

  auto touch = [&](const detail::Box& b) {
    if (b.x0 > 0.0 || b.x1 > 0.0) return false;
    if (b.y1 > y1_lo_d) return false;  // E_n <= 0 only guaranteed below y_{n,1}
    return H.eval({b.x0, b.x1}, {b.y0, b.y1}).certainly_positive();
  };

  auto attempt = [&](double rho) {  // rho exactly representable in double
    DInterval r_sq = sqr(DInterval::point(rho));
    return detail::infeasibility_sweep(G, -rho, 0.0, rho, r_sq,
                                       /*inside_disk=*/true, touch, budget,
                                       1e-14);
  };

  std::uint64_t processed = 0;
  auto finish = [&](double rho_lo, double rho_hi) {
    RadiusCertificate c;
    c.n = n;
    c.mode = RadiusMode::InnerSemiDisk;
    c.lo = detail::rat_from_double(rho_lo) / static_cast<long>(n);
    c.hi = detail::rat_from_double(rho_hi) / static_cast<long>(n);
    c.lo.canonicalize();
    c.hi.canonicalize();
    c.witness_x = 0;
    c.witness_y = c.lo;
    c.boxes_processed = processed;
    return c;
  };

  double cand = y1_lo_d;
  auto first = attempt(cand);
  processed += first.processed;
  if (first.outcome == detail::SweepOutcome::Proved)
    return finish(cand, y1_hi_d);
  if (first.outcome == detail::SweepOutcome::Indeterminate)
    throw BudgetExhaustedWithCertificate(
        "inner_semidisk_radius: sweep undecided", finish(0.0, y1_hi_d));

  // Violation at y_{n,1}: rho^* is strictly smaller; bisect on rho.
  double lo = 0.0, hi = cand;
  const double tol_d = tol.get_d() * static_cast<double>(n);
  while (hi - lo > tol_d) {
    double mid = 0.5 * (lo + hi);
    auto r = attempt(mid);
    processed += r.processed;
    if (r.outcome == detail::SweepOutcome::Proved)
      lo = mid;
    else if (r.outcome == detail::SweepOutcome::Violation)
      hi = mid;
    else
      throw BudgetExhaustedWithCertificate(
          "inner_semidisk_radius: bisection undecided", finish(lo, hi));
  }
  return finish(lo, hi);
}

// --- coverage checks (Lemma 3.1 / Corollary 3.4 / Theorem 4.4 / Cor 4.2) ---

struct CoverageSpec {
  bool left_half_only = true;  // restrict to Re z <= 0
  Interval radius;             // enclosure of the covering radius r
};

// Radius formula of the covering corollary: 1/e + (2+delta)sqrt(e^2+1)/sqrt(n).
inline Interval coverage_radius_formula(unsigned n, const BigRat& delta,
                                        mpfr_prec_t prec = 96) {
  Interval e = Interval::euler_e(prec);
  Interval one = Interval::from_long(1, prec);
  Interval nn = Interval::from_long(static_cast<long>(n), prec);
  return one / e +
         (Interval::from_rat(delta + 2, prec)) * sqrt(e * e + one) / sqrt(nn);
}

// True iff S_n (optionally: its left half) is certifiably contained in the
// closed disk of the given radius; false with a certified witness outside;
// throws Indeterminate when the radius is too close to the true extent.
inline bool coverage_disk_check(unsigned n, const CoverageSpec& spec,
                                std::uint64_t budget = 80'000'000) {
  if (n < 1) throw DomainError("coverage_disk_check: n >= 1 required");
  PartialSumEval G(n, /*scaled=*/true);
  DInterval r_sq = dinterval_from(spec.radius * spec.radius);
  double x0 = -2.05, x1 = spec.left_half_only ? 0.0 : 2.05;
  auto res = detail::infeasibility_sweep(G, x0, x1, 2.05, r_sq,
                                         /*inside_disk=*/false,
                                         detail::no_touch_rule, budget, 1e-12);
  switch (res.outcome) {
    case detail::SweepOutcome::Proved:
      return true;
    case detail::SweepOutcome::Violation:
      return false;
    default:
      throw Indeterminate("coverage_disk_check: radius too close to extent");
  }
}

}  // namespace expsum
