#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "expsum/bigrat.hpp"
#include "expsum/errors.hpp"
#include "expsum/intpoly.hpp"
#include "expsum/interval.hpp"

namespace expsum {

// Isolating interval for one distinct real root. All `multiplicity` roots
// of the isolated polynomial inside [lo,hi] coincide; unless the box is a
// point, the endpoints are exact rationals with p(lo) != 0 != p(hi).
struct RootBox {
  BigRat lo, hi;
  unsigned multiplicity = 1;
  int sign_left = 0;   // sign of the square-free part just left of lo
  int sign_right = 0;  // sign just right of hi
  bool is_point() const { return lo == hi; }
  BigRat mid() const { return (lo + hi) / 2; }
  BigRat width() const { return hi - lo; }
  Interval enclosure(mpfr_prec_t prec = Interval::kDefaultPrec) const {
    return Interval::hull(lo, hi, prec);
  }
  double width_d() const { return BigRat(hi - lo).get_d(); }
};

namespace detail {

// Descartes bound on the number of roots of p in the open interval (a,b).
// Exact when the returned value is 0 or 1. Roots at the endpoints are
// ignored (stripped via valuation after the Moebius transform).
inline int descartes_count(const IntPoly& p, const BigRat& a, const BigRat& b) {
  IntPoly q = p.shift(a).compose_scale(b - a);  // roots of interest now in (0,1)
  std::size_t v = q.valuation();
  if (v > 0) q = q.shifted_down(v);
  IntPoly r = q.reversed();
  std::size_t w = r.valuation();  // root of p exactly at b
  if (w > 0) r = r.shifted_down(w);
  return r.shift1().sign_variations();
}

// Cauchy root bound rounded up to a power of two: all roots in (-B, B).
inline BigRat cauchy_bound_pow2(const IntPoly& p) {
  if (p.is_zero() || p.degree() == 0) return BigRat(1);
  const auto& c = p.coeffs();
  BigInt lead = abs(c.back());
  BigInt maxc(0);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    BigInt a = abs(c[i]);
    if (a > maxc) maxc = a;
  }
  BigInt bound = maxc / lead + 2;  // >= 1 + maxc/lead
  std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  return dyadic(BigInt(1), static_cast<long>(bits + 1));
}

// Given exactly one root of p strictly inside (a,b), shrink any endpoint
// that happens to be a root itself (such roots belong to sibling boxes),
// so that the emitted box carries a genuine sign change.
inline RootBox trim_endpoint_roots(const IntPoly& p, BigRat a, BigRat b) {
  BigRat step = (b - a) / 4;
  while (p.sign_at(a) == 0 || p.sign_at(b) == 0) {
    BigRat na = p.sign_at(a) == 0 ? BigRat(a + step) : a;
    BigRat nb = p.sign_at(b) == 0 ? BigRat(b - step) : b;
    if (p.sign_at(na) != 0 && p.sign_at(nb) != 0 &&
        descartes_count(p, na, nb) == 1) {
      a = na;
      b = nb;
      break;
    }
    step /= 2;  // stepped over the interior root; retry closer in
  }
  return RootBox{a, b, 1, 0, 0};
}

// Recursive bisection isolation on a square-free polynomial over the open
// interval (a,b). Roots exactly at a or b are not reported.
inline void isolate_squarefree(const IntPoly& p, const BigRat& a,
                               const BigRat& b, std::vector<RootBox>& out,
                               int depth = 0) {
  if (depth > 4000) throw PrecisionExhausted("root isolation depth exceeded");
  int v = descartes_count(p, a, b);
  if (v == 0) return;
  if (v == 1) {
    out.push_back(trim_endpoint_roots(p, a, b));
    return;
  }
  BigRat m = (a + b) / 2;
  if (p.sign_at(m) == 0) out.push_back(RootBox{m, m, 1, 0, 0});
  isolate_squarefree(p, a, m, out, depth + 1);
  isolate_squarefree(p, m, b, out, depth + 1);
}

// Shrink the box to width <= w by exact-sign bisection on the square-free
// polynomial sf, which must change sign across the box.
inline RootBox bisect_refine(const IntPoly& sf, RootBox box, const BigRat& w) {
  if (box.is_point()) return box;
  int sa = sf.sign_at(box.lo);
  if (sa == 0) {
    box.hi = box.lo;
    return box;
  }
  if (sf.sign_at(box.hi) == 0) {
    box.lo = box.hi;
    return box;
  }
  if (sa == sf.sign_at(box.hi))
    throw DomainError("bisect_refine: no sign change across the box");
  while (box.hi - box.lo > w) {
    BigRat m = box.mid();
    int sm = sf.sign_at(m);
    if (sm == 0) {
      box.lo = box.hi = m;
      break;
    }
    if (sm == sa)
      box.lo = m;
    else
      box.hi = m;
  }
  return box;
}

}  // namespace detail

struct RootDomain {
  std::optional<BigRat> lo;  // nullopt = -infinity
  std::optional<BigRat> hi;  // nullopt = +infinity
  static RootDomain full() { return {}; }
  static RootDomain nonnegative() { return {BigRat(0), std::nullopt}; }
  static RootDomain closed(const BigRat& a, const BigRat& b) { return {a, b}; }
};

// Certified isolation of all distinct real roots of p inside the domain
// (endpoints included). Boxes are pairwise disjoint and sorted; each
// isolates exactly one distinct root, with its multiplicity in p.
inline std::vector<RootBox> isolate_real_roots(
    const IntPoly& p, const RootDomain& domain = RootDomain::full()) {
  if (p.is_zero()) throw DomainError("isolate_real_roots: zero polynomial");
  struct Item {
    RootBox box;
    std::size_t fi;
  };
  std::vector<std::pair<IntPoly, unsigned>> factors;
  std::vector<Item> items;

  for (auto& [f, mult] : squarefree_decomposition(p)) {
    std::size_t val = f.valuation();
    IntPoly g = val > 0 ? f.shifted_down(val) : f;
    std::size_t fi = factors.size();
    factors.emplace_back(g, mult);

    if (val > 0 && (!domain.lo || *domain.lo <= 0) &&
        (!domain.hi || 0 <= *domain.hi))
      items.push_back({RootBox{BigRat(0), BigRat(0), mult, 0, 0}, fi});
    if (g.degree() == 0) continue;
    BigRat B = detail::cauchy_bound_pow2(g);
    BigRat mB = -B;
    BigRat lo = domain.lo ? std::max(*domain.lo, mB) : mB;
    BigRat hi = domain.hi ? std::min(*domain.hi, B) : B;
    if (lo > hi) continue;
    std::vector<RootBox> boxes;
    if (g.sign_at(lo) == 0) boxes.push_back(RootBox{lo, lo, 1, 0, 0});
    if (lo < hi && g.sign_at(hi) == 0) boxes.push_back(RootBox{hi, hi, 1, 0, 0});
    if (lo < hi) detail::isolate_squarefree(g, lo, hi, boxes);
    for (auto& b : boxes) {
      // the exact root 0 of another factor must not sit inside this box
      if (!b.is_point() && b.lo < 0 && 0 < b.hi) {
        if (g.sign_at(BigRat(0)) == g.sign_at(b.lo))
          b.lo = 0;
        else
          b.hi = 0;
      }
      b.multiplicity = mult;
      items.push_back({std::move(b), fi});
    }
  }

  auto by_lo = [](const Item& a, const Item& b) {
    return a.box.lo < b.box.lo || (a.box.lo == b.box.lo && a.box.hi < b.box.hi);
  };
  std::sort(items.begin(), items.end(), by_lo);
  // Separate touching/overlapping boxes (possible across coprime factors)
  // by refining each against its own polynomial.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < items.size(); ++i) {
      if (items[i].box.hi < items[i + 1].box.lo) continue;
      if (items[i].box.is_point() && items[i + 1].box.is_point())
        throw DomainError("isolate_real_roots: coincident point roots");
      for (Item* it : {&items[i], &items[i + 1]}) {
        if (it->box.is_point()) continue;
        it->box = detail::bisect_refine(factors[it->fi].first, it->box,
                                        it->box.width() / 4);
      }
      changed = true;
    }
    if (changed) std::sort(items.begin(), items.end(), by_lo);
  }

  IntPoly sf = IntPoly::constant(BigInt(1));
  for (auto& [g, mult] : factors) sf = sf * g;
  if (p.valuation() > 0) sf = sf * IntPoly::monomial(BigInt(1), 1);

  std::vector<RootBox> all;
  all.reserve(items.size());
  for (auto& it : items) all.push_back(std::move(it.box));
  for (std::size_t i = 0; i < all.size(); ++i) {
    BigRat left_pt = i == 0 ? BigRat(all[i].lo - 1)
                            : BigRat((all[i - 1].hi + all[i].lo) / 2);
    BigRat right_pt = i + 1 == all.size()
                          ? BigRat(all[i].hi + 1)
                          : BigRat((all[i].hi + all[i + 1].lo) / 2);
    all[i].sign_left = sf.sign_at(left_pt);
    all[i].sign_right = sf.sign_at(right_pt);
  }
  return all;
}

// Refinement of an isolating box to a requested width, by exact-sign
// bisection on a precomputed square-free polynomial.
inline RootBox refine_root_sf(const RootBox& box, const IntPoly& sf,
                              const BigRat& width) {
  if (box.is_point()) return box;
  RootBox r = detail::bisect_refine(sf, box, width);
  r.multiplicity = box.multiplicity;
  r.sign_left = box.sign_left;
  r.sign_right = box.sign_right;
  return r;
}

inline RootBox refine_root(const RootBox& box, const IntPoly& p,
                           const BigRat& width) {
  if (box.is_point()) return box;
  return refine_root_sf(box, squarefree_part(p), width);
}

// The real root of p of smallest absolute value, or nullopt if p has no
// real roots. Ties in magnitude break toward the negative root. Handles
// roots hundreds of orders of magnitude below 1: the magnitude is first
// bracketed between powers of two by certified root counts on nested
// dyadic disks, so no refinement sweeps from the outside in.
inline std::optional<RootBox> smallest_abs_root(const IntPoly& p,
                                                long max_depth_bits = 4000) {
  if (p.is_zero()) throw DomainError("smallest_abs_root: zero polynomial");
  IntPoly pp = p.primitive();
  if (pp.degree() == 0) return std::nullopt;
  std::size_t val = pp.valuation();
  if (val > 0)
    return RootBox{BigRat(0), BigRat(0), static_cast<unsigned>(val), 0, 0};

  const bool sf_cheap = squarefree_certificate_mod_p(pp);
  IntPoly sf = sf_cheap ? pp : squarefree_part(pp);

  BigRat B = detail::cauchy_bound_pow2(sf);
  long e0 = 1 - static_cast<long>(mpz_sizeinbase(B.get_num().get_mpz_t(), 2));
  auto radius = [](long j) { return dyadic(BigInt(1), -j); };  // 2^-j
  auto count_inside = [&](long j) {
    BigRat r = radius(j);
    return detail::descartes_count(sf, -r, r);
  };
  if (count_inside(e0) == 0) return std::nullopt;

  // Exponential then binary search for adjacent exponents j_out < j_in
  // with roots inside radius 2^-j_out but none inside 2^-j_in.
  long j_out = e0, j_in = 0;
  for (long step = 1;; step *= 2) {
    long j = j_out + step;
    if (j > max_depth_bits)
      throw PrecisionExhausted("smallest_abs_root: depth limit reached");
    if (count_inside(j) == 0) {
      j_in = j;
      break;
    }
    j_out = j;
  }
  while (j_in - j_out > 1) {
    long m = j_out + (j_in - j_out) / 2;
    if (count_inside(m) == 0)
      j_in = m;
    else
      j_out = m;
  }

  // Smallest-magnitude roots lie in 2^-j_in <= |x| < 2^-j_out, or exactly
  // on one of the probed dyadic circles.
  BigRat rin = radius(j_in), rout = radius(j_out);
  std::vector<RootBox> cands;
  if (sf.sign_at(-rin) == 0) {
    cands.push_back(RootBox{-rin, -rin, 1, 0, 0});  // nothing can be smaller
  } else if (sf.sign_at(rin) == 0) {
    cands.push_back(RootBox{rin, rin, 1, 0, 0});
  } else {
    if (sf.sign_at(-rout) == 0) cands.push_back(RootBox{-rout, -rout, 1, 0, 0});
    if (sf.sign_at(rout) == 0) cands.push_back(RootBox{rout, rout, 1, 0, 0});
    detail::isolate_squarefree(sf, -rout, -rin, cands);
    detail::isolate_squarefree(sf, rin, rout, cands);
  }
  if (cands.empty()) {
    // The Descartes counts that drove the bracketing are only upper bounds;
    // a complex pair can inflate them while the real roots (if any) sit
    // beyond rout. Re-scan the whole root bound outside rin.
    BigRat rmax = radius(e0);
    if (sf.sign_at(-rmax) == 0) cands.push_back(RootBox{-rmax, -rmax, 1, 0, 0});
    if (sf.sign_at(rmax) == 0) cands.push_back(RootBox{rmax, rmax, 1, 0, 0});
    detail::isolate_squarefree(sf, -rmax, -rin, cands);
    detail::isolate_squarefree(sf, rin, rmax, cands);
    if (cands.empty()) return std::nullopt;
  }

  auto abs_lo = [](const RootBox& b) {
    return std::min(abs_rat(b.lo), abs_rat(b.hi));
  };
  auto abs_hi = [](const RootBox& b) {
    return std::max(abs_rat(b.lo), abs_rat(b.hi));
  };
  // Refine until a single candidate's magnitude range is certainly the
  // minimum; after ~120 halvings surviving ties are treated as equal.
  BigRat w = (rout - rin) / 2;
  for (int round = 0; cands.size() > 1 && round < 120; ++round) {
    for (auto& b : cands) b = detail::bisect_refine(sf, b, w);
    BigRat best_hi = abs_hi(cands[0]);
    for (auto& b : cands) best_hi = std::min(best_hi, abs_hi(b));
    std::erase_if(cands,
                  [&](const RootBox& b) { return abs_lo(b) > best_hi; });
    w /= 2;
  }
  std::sort(cands.begin(), cands.end(), [&](const RootBox& a, const RootBox& b) {
    if (abs_hi(a) < abs_lo(b)) return true;
    if (abs_hi(b) < abs_lo(a)) return false;
    return a.lo < b.lo;  // tie: prefer the negative root
  });

  RootBox best = cands.front();
  if (!best.is_point()) {
    // tighten to ~60 bits of relative width so magnitudes and logarithms
    // read off the box are sharp
    BigRat target = abs_lo(best);
    mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), 60);
    best = detail::bisect_refine(sf, best, target);
  }
  int sl = sf.sign_at(best.is_point() ? BigRat(best.lo - w) : best.lo);
  int sr = sf.sign_at(best.is_point() ? BigRat(best.hi + w) : best.hi);
  best.sign_left = sl;
  best.sign_right = sr;
  best.multiplicity = 1;
  if (!sf_cheap) {
    for (auto& [f, mult] : squarefree_decomposition(pp)) {
      if (best.is_point()) {
        if (f.sign_at(best.lo) == 0) best.multiplicity = mult;
      } else if (f.sign_at(best.lo) * f.sign_at(best.hi) < 0) {
        best.multiplicity = mult;
      }
    }
  }
  return best;
}

}  // namespace expsum
