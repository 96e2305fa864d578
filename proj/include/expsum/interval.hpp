#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "expsum/bigrat.hpp"
#include "expsum/errors.hpp"

namespace expsum {

// Closed interval [lo, hi] with dyadic (binary floating point) endpoints.
// Every operation rounds lo toward -inf and hi toward +inf, so the result
// always contains the exact value. `precision` is the endpoint mantissa
// size in bits.
class Interval {
 public:
  static constexpr mpfr_prec_t kDefaultPrec = 64;
  static constexpr mpfr_prec_t kMaxPrec = 8192;

  explicit Interval(mpfr_prec_t prec = kDefaultPrec) {
    init(prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }

  Interval(const Interval& o) {
    init(o.precision());
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }

  Interval(Interval&& o) noexcept {
    lo_[0] = o.lo_[0];
    hi_[0] = o.hi_[0];
    o.moved_ = true;
  }

  Interval& operator=(Interval o) noexcept {
    swap(o);
    return *this;
  }

  ~Interval() {
    if (!moved_) {
      mpfr_clear(lo_);
      mpfr_clear(hi_);
    }
  }

  void swap(Interval& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

  static Interval from_long(long v, mpfr_prec_t prec = kDefaultPrec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
  }

  static Interval from_double(double v, mpfr_prec_t prec = kDefaultPrec) {
    Interval r(prec);
    mpfr_set_d(r.lo_, v, MPFR_RNDD);
    mpfr_set_d(r.hi_, v, MPFR_RNDU);
    return r;
  }

  static Interval from_rat(const BigRat& q, mpfr_prec_t prec = kDefaultPrec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
  }

  static Interval from_int(const BigInt& z, mpfr_prec_t prec = kDefaultPrec) {
    Interval r(prec);
    mpfr_set_z(r.lo_, z.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, z.get_mpz_t(), MPFR_RNDU);
    return r;
  }

  static Interval hull(const BigRat& a, const BigRat& b,
                       mpfr_prec_t prec = kDefaultPrec) {
    Interval r(prec);
    const BigRat& lo = a <= b ? a : b;
    const BigRat& hi = a <= b ? b : a;
    mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
    return r;
  }

  static Interval pi(mpfr_prec_t prec = kDefaultPrec) {
    Interval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
  }

  static Interval euler_e(mpfr_prec_t prec = kDefaultPrec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, 1, MPFR_RNDN);
    mpfr_exp(r.lo_, r.lo_, MPFR_RNDD);
    mpfr_set_si(r.hi_, 1, MPFR_RNDN);
    mpfr_exp(r.hi_, r.hi_, MPFR_RNDU);
    return r;
  }

  // Raw endpoint access (read-only) for code that needs mpfr directly.
  const __mpfr_struct* lo_raw() const { return lo_; }
  const __mpfr_struct* hi_raw() const { return hi_; }

  double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_d() const { return 0.5 * (lo_d() + hi_d()); }

  BigRat lo_rat() const { return mpfr_to_rat(lo_); }
  BigRat hi_rat() const { return mpfr_to_rat(hi_); }
  BigRat mid_rat() const {
    BigRat m = lo_rat() + hi_rat();
    m /= 2;
    return m;
  }

  double width() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
  }

  bool is_point() const { return mpfr_equal_p(lo_, hi_); }
  bool contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
  }
  bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
  bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }
  bool certainly_nonpositive() const { return mpfr_sgn(hi_) <= 0; }
  bool certainly_nonnegative() const { return mpfr_sgn(lo_) >= 0; }

  bool contains(const BigRat& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
  }
  bool contains(const Interval& o) const {
    return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(hi_, o.hi_) >= 0;
  }

  // Certified sign: -1, 0 (only when the interval is the exact point 0),
  // +1; throws Indeterminate when the interval straddles zero.
  int certified_sign() const {
    if (certainly_positive()) return 1;
    if (certainly_negative()) return -1;
    if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return 0;
    throw Indeterminate("interval sign undecided, width " +
                        std::to_string(width()));
  }

  friend bool certainly_less(const Interval& a, const Interval& b) {
    return mpfr_cmp(a.hi_, b.lo_) < 0;
  }
  friend bool certainly_leq(const Interval& a, const Interval& b) {
    return mpfr_cmp(a.hi_, b.lo_) <= 0;
  }

  friend Interval operator-(const Interval& a) {
    Interval r(a.precision());
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    return r;
  }

  friend Interval operator+(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }

  friend Interval operator-(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
  }

  friend Interval operator*(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_t t;
    mpfr_init2(t, r.precision());
    // lo: min of the four products rounded down
    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // hi: max of the four products rounded up
    mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
    mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
  }

  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero())
      throw DomainError("interval division by interval containing zero");
    Interval inv(b.precision());
    // b does not contain 0, so 1/b = [1/b.hi, 1/b.lo]
    mpfr_si_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
    mpfr_si_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
    return a * inv;
  }

  friend Interval intersect(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    if (mpfr_cmp(r.lo_, r.hi_) > 0) throw DomainError("empty intersection");
    return r;
  }

  friend Interval hull(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }

  friend Interval abs(const Interval& a) {
    Interval r(a.precision());
    if (mpfr_sgn(a.lo_) >= 0) return a;
    if (mpfr_sgn(a.hi_) <= 0) return -a;
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, a.hi_, MPFR_RNDU);
    return r;
  }

  friend Interval sqrt(const Interval& a) {
    if (mpfr_sgn(a.hi_) < 0)
      throw DomainError("sqrt of an interval entirely below 0");
    Interval r(a.precision());
    if (mpfr_sgn(a.lo_) <= 0) {
      mpfr_set_zero(r.lo_, 1);
    } else {
      mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
    }
    mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
    return r;
  }

  friend Interval exp(const Interval& a) {
    Interval r(a.precision());
    mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
    return r;
  }

  friend Interval log(const Interval& a) {
    if (mpfr_sgn(a.hi_) <= 0)
      throw DomainError("log of an interval entirely <= 0");
    if (mpfr_sgn(a.lo_) <= 0)
      throw DomainError("log of an interval touching 0");
    Interval r(a.precision());
    mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
    return r;
  }

  friend Interval log10(const Interval& a) {
    if (mpfr_sgn(a.lo_) <= 0)
      throw DomainError("log10 of an interval touching 0");
    Interval r(a.precision());
    mpfr_log10(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log10(r.hi_, a.hi_, MPFR_RNDU);
    return r;
  }

  friend Interval cosh(const Interval& a) {
    // cosh decreases on (-inf,0], increases on [0,inf)
    Interval m = abs(a);
    Interval r(a.precision());
    mpfr_cosh(r.lo_, m.lo_, MPFR_RNDD);
    mpfr_cosh(r.hi_, m.hi_, MPFR_RNDU);
    return r;
  }

  friend Interval sinh(const Interval& a) {
    Interval r(a.precision());
    mpfr_sinh(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sinh(r.hi_, a.hi_, MPFR_RNDU);
    return r;
  }

  friend Interval sin(const Interval& a) { return sin_cos_impl(a, /*is_sin=*/true); }
  friend Interval cos(const Interval& a) { return sin_cos_impl(a, /*is_sin=*/false); }

  friend Interval pow_ui(const Interval& a, unsigned long e) {
    if (e == 0) return from_long(1, a.precision());
    if (e % 2 == 0) {
      Interval m = abs(a);
      Interval r(a.precision());
      mpfr_pow_ui(r.lo_, m.lo_, e, MPFR_RNDD);
      mpfr_pow_ui(r.hi_, m.hi_, e, MPFR_RNDU);
      return r;
    }
    Interval r(a.precision());
    mpfr_pow_ui(r.lo_, a.lo_, e, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, a.hi_, e, MPFR_RNDU);
    return r;
  }

  Interval widened(mpfr_prec_t prec) const {
    Interval r(prec);
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
  }

  std::string str(int digits = 20) const {
    return "[" + endpoint_str(lo_, digits, MPFR_RNDD) + ", " +
           endpoint_str(hi_, digits, MPFR_RNDU) + "]";
  }

  // Internal: mutable endpoint access for module implementations that
  // build intervals directly (e.g. Lambert W bracketing).
  mpfr_ptr lo_mut() { return lo_; }
  mpfr_ptr hi_mut() { return hi_; }

 private:
  void init(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
  }

  static BigRat mpfr_to_rat(mpfr_srcptr x) {
    if (mpfr_zero_p(x)) return BigRat(0);
    if (!mpfr_number_p(x)) throw DomainError("non-finite endpoint");
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), x);
    return q;
  }

  static std::string endpoint_str(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*R*g", digits, rnd, x) < 0)
      return "<fmt-error>";
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  static Interval sin_cos_impl(const Interval& a, bool is_sin) {
    mpfr_prec_t prec = a.precision();
    Interval r(prec);
    if (a.width() >= 7.0) {  // wider than a full period
      mpfr_set_si(r.lo_, -1, MPFR_RNDD);
      mpfr_set_si(r.hi_, 1, MPFR_RNDU);
      return r;
    }
    // Candidate values: the function at both endpoints.
    Interval v1(prec), v2(prec);
    if (is_sin) {
      mpfr_sin(v1.lo_, a.lo_, MPFR_RNDD);
      mpfr_sin(v1.hi_, a.lo_, MPFR_RNDU);
      mpfr_sin(v2.lo_, a.hi_, MPFR_RNDD);
      mpfr_sin(v2.hi_, a.hi_, MPFR_RNDU);
    } else {
      mpfr_cos(v1.lo_, a.lo_, MPFR_RNDD);
      mpfr_cos(v1.hi_, a.lo_, MPFR_RNDU);
      mpfr_cos(v2.lo_, a.hi_, MPFR_RNDD);
      mpfr_cos(v2.hi_, a.hi_, MPFR_RNDU);
    }
    Interval r0(prec);
    mpfr_min(r0.lo_, v1.lo_, v2.lo_, MPFR_RNDD);
    mpfr_max(r0.hi_, v1.hi_, v2.hi_, MPFR_RNDU);
    // Critical points of sin: x = pi/2 + k*pi (max at even k, min at odd).
    // Critical points of cos: x = k*pi (max at even k, min at odd).
    Interval p = pi(prec);
    Interval half = from_rat(BigRat(1, 2), prec);
    Interval shift = is_sin ? half : from_long(0, prec);
    // q = (a - shift*pi)/pi; any integer k possibly inside q is critical.
    Interval q = (a - shift * p) / p;
    double qlo = std::floor(q.lo_d());
    double qhi = std::ceil(q.hi_d());
    bool touch_max = false, touch_min = false;
    for (double k = qlo; k <= qhi; k += 1.0) {
      if (k < q.lo_d() - 1 || k > q.hi_d() + 1) continue;
      // Conservative: include k if [k,k] intersects q's outward hull.
      if (k >= std::floor(q.lo_d()) && k <= std::ceil(q.hi_d())) {
        long ki = static_cast<long>(k);
        // Only count k that cannot be excluded: k in [ceil(q.lo), floor(q.hi)]
        if (k >= std::ceil(q.lo_d()) && k <= std::floor(q.hi_d())) {
          if (((ki % 2) + 2) % 2 == 0)
            touch_max = true;
          else
            touch_min = true;
        }
      }
    }
    if (touch_max) mpfr_set_si(r0.hi_, 1, MPFR_RNDU);
    if (touch_min) mpfr_set_si(r0.lo_, -1, MPFR_RNDD);
    // Clamp to [-1,1]
    mpfr_t one, mone;
    mpfr_init2(one, prec);
    mpfr_init2(mone, prec);
    mpfr_set_si(one, 1, MPFR_RNDN);
    mpfr_set_si(mone, -1, MPFR_RNDN);
    mpfr_min(r0.hi_, r0.hi_, one, MPFR_RNDU);
    mpfr_max(r0.lo_, r0.lo_, mone, MPFR_RNDD);
    mpfr_clear(one);
    mpfr_clear(mone);
    return r0;
  }

  mpfr_t lo_, hi_;
  bool moved_ = false;
};

inline Interval operator*(long a, const Interval& b) {
  return Interval::from_long(a, b.precision()) * b;
}
inline Interval operator+(long a, const Interval& b) {
  return Interval::from_long(a, b.precision()) + b;
}
inline Interval operator-(long a, const Interval& b) {
  return Interval::from_long(a, b.precision()) - b;
}

// Rectangle complex interval: independent Re/Im enclosures.
struct CInterval {
  Interval re, im;

  CInterval() = default;
  CInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

  static CInterval from_rat(const BigRat& x, const BigRat& y,
                            mpfr_prec_t prec = Interval::kDefaultPrec) {
    return {Interval::from_rat(x, prec), Interval::from_rat(y, prec)};
  }

  friend CInterval operator+(const CInterval& a, const CInterval& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend CInterval operator-(const CInterval& a, const CInterval& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend CInterval operator*(const CInterval& a, const CInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CInterval operator/(const CInterval& a, const CInterval& b) {
    Interval n = abs_sq(b);
    return {(a.re * b.re + a.im * b.im) / n,
            (a.im * b.re - a.re * b.im) / n};
  }

  friend Interval abs_sq(const CInterval& z) {
    return pow_ui(z.re, 2) + pow_ui(z.im, 2);
  }
  friend Interval abs(const CInterval& z) { return sqrt(abs_sq(z)); }

  bool contains_zero() const {
    return re.contains_zero() && im.contains_zero();
  }
};

// Adaptive refinement driver: evaluates `f(prec)` with doubling precision
// until `done(result)` holds or the precision cap is hit.
template <typename F, typename Done>
auto refine_until(F&& f, Done&& done,
                  mpfr_prec_t start = Interval::kDefaultPrec,
                  mpfr_prec_t cap = Interval::kMaxPrec) {
  for (mpfr_prec_t p = start;; p *= 2) {
    auto r = f(p);
    if (done(r)) return r;
    if (p >= cap)
      throw PrecisionExhausted("no decision at precision cap " +
                               std::to_string(cap));
  }
}

}  // namespace expsum
