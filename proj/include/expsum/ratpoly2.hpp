#pragma once

#include <map>
#include <utility>
#include <vector>

#include "expsum/bigrat.hpp"
#include "expsum/errors.hpp"
#include "expsum/intpoly.hpp"
#include "expsum/interval.hpp"

namespace expsum {

// Sparse exact bivariate polynomial over Q, monomials x^i y^j.
class RatPoly2 {
 public:
  using Key = std::pair<unsigned, unsigned>;

  RatPoly2() = default;

  void add_term(unsigned i, unsigned j, const BigRat& v) {
    if (v == 0) return;
    auto it = c_.find({i, j});
    if (it == c_.end()) {
      c_.emplace(Key{i, j}, v);
    } else {
      it->second += v;
      if (it->second == 0) c_.erase(it);
    }
  }

  BigRat coeff(unsigned i, unsigned j) const {
    auto it = c_.find({i, j});
    return it == c_.end() ? BigRat(0) : it->second;
  }

  const std::map<Key, BigRat>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [k, v] : c_) d = std::max(d, k.first + k.second);
    return d;
  }
  unsigned degree_x() const {
    unsigned d = 0;
    for (const auto& [k, v] : c_) d = std::max(d, k.first);
    return d;
  }
  unsigned degree_y() const {
    unsigned d = 0;
    for (const auto& [k, v] : c_) d = std::max(d, k.second);
    return d;
  }

  bool only_even_y() const {
    for (const auto& [k, v] : c_)
      if (k.second % 2 != 0) return false;
    return true;
  }

  friend RatPoly2 operator+(const RatPoly2& a, const RatPoly2& b) {
    RatPoly2 r = a;
    for (const auto& [k, v] : b.c_) r.add_term(k.first, k.second, v);
    return r;
  }

  friend RatPoly2 operator*(const RatPoly2& a, const RatPoly2& b) {
    RatPoly2 r;
    for (const auto& [ka, va] : a.c_)
      for (const auto& [kb, vb] : b.c_)
        r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
    return r;
  }

  BigRat eval(const BigRat& x, const BigRat& y) const {
    // dense Horner in x over rows of y-powers
    unsigned dx = degree_x(), dy = degree_y();
    std::vector<BigRat> ypow(dy + 1, BigRat(1));
    for (unsigned j = 1; j <= dy; ++j) ypow[j] = ypow[j - 1] * y;
    std::vector<BigRat> row(dx + 1, BigRat(0));
    for (const auto& [k, v] : c_) row[k.first] += v * ypow[k.second];
    BigRat acc(0);
    for (unsigned i = dx + 1; i-- > 0;) acc = acc * x + row[i];
    acc.canonicalize();
    return acc;
  }

  // Substitute y = y0, returning a univariate polynomial in x.
  IntPoly substitute_y(const BigRat& y0) const {
    unsigned dx = degree_x(), dy = degree_y();
    std::vector<BigRat> ypow(dy + 1, BigRat(1));
    for (unsigned j = 1; j <= dy; ++j) ypow[j] = ypow[j - 1] * y0;
    std::vector<BigRat> row(dx + 1, BigRat(0));
    for (const auto& [k, v] : c_) row[k.first] += v * ypow[k.second];
    return IntPoly::from_rat_coeffs(row);
  }

  IntPoly substitute_x(const BigRat& x0) const {
    unsigned dx = degree_x(), dy = degree_y();
    std::vector<BigRat> xpow(dx + 1, BigRat(1));
    for (unsigned i = 1; i <= dx; ++i) xpow[i] = xpow[i - 1] * x0;
    std::vector<BigRat> row(dy + 1, BigRat(0));
    for (const auto& [k, v] : c_) row[k.second] += v * xpow[k.first];
    return IntPoly::from_rat_coeffs(row);
  }

  // (x,y) -> (s*x, s*y)
  RatPoly2 scale_args(const BigRat& s) const {
    RatPoly2 r;
    for (const auto& [k, v] : c_)
      r.add_term(k.first, k.second, v * pow_rat(s, k.first + k.second));
    return r;
  }

  Interval eval(const Interval& x, const Interval& y, mpfr_prec_t prec) const {
    unsigned dx = degree_x(), dy = degree_y();
    std::vector<Interval> ypow;
    ypow.reserve(dy + 1);
    ypow.push_back(Interval::from_long(1, prec));
    for (unsigned j = 1; j <= dy; ++j) ypow.push_back(pow_ui(y, j));
    std::vector<Interval> row(dx + 1, Interval::from_long(0, prec));
    for (const auto& [k, v] : c_)
      row[k.first] = row[k.first] + Interval::from_rat(v, prec) * ypow[k.second];
    Interval acc = Interval::from_long(0, prec);
    for (unsigned i = dx + 1; i-- > 0;) acc = acc * x + row[i];
    return acc;
  }

 private:
  std::map<Key, BigRat> c_;
};

}  // namespace expsum
