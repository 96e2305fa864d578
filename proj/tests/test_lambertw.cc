#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "expsum/lambertw.hpp"

using namespace expsum;

namespace {

bool encloses(const Interval& v, const BigRat& q) {
  return v.lo_rat() <= q && q <= v.hi_rat();
}

}  // namespace

TEST_CASE("defining identity w e^w = x holds on the certified value") {
  const BigRat xs[] = {BigRat(1, 100), BigRat(1, 3),  BigRat(1),
                       BigRat(5, 2),   BigRat(4),     BigRat(-1, 4),
                       BigRat(-1, 3),  BigRat(-9, 25)};
  for (const BigRat& x : xs) {
    WValue w = lambert_w(x, 128);
    Interval resid = w.value * exp(w.value) - Interval::from_rat(x, 128);
    CHECK(encloses(resid, BigRat(0)));
    CHECK(resid.width() < 1e-25);
  }
}

TEST_CASE("W(0) = 0 and W(e) = 1") {
  CHECK(encloses(lambert_w(BigRat(0), 96).value, BigRat(0)));
  WValue we = lambert_w(Interval::euler_e(128), 128);
  CHECK(encloses(we.value, BigRat(1)));
}

TEST_CASE("omega constant digits") {
  // W(1) = 0.56714329040978387...
  Interval w = lambert_w(BigRat(1), 128).value;
  CHECK(w.lo_rat() > BigRat("56714329040978387/100000000000000000"));
  CHECK(w.hi_rat() < BigRat("56714329040978388/100000000000000000"));
}

TEST_CASE("monotone on the principal branch") {
  Interval a = lambert_w(BigRat(1, 2), 96).value;
  Interval b = lambert_w(BigRat(2), 96).value;
  CHECK(certainly_less(a, b));
}

TEST_CASE("near the branch point -1/e") {
  // W(-1/e + eps) is close to -1 from above
  WValue w = lambert_w(BigRat(-36, 100), 192);
  CHECK(w.value.lo_d() > -1.0);
  CHECK(w.value.hi_d() < -0.7);
  Interval resid = w.value * exp(w.value) - Interval::from_rat(BigRat(-36, 100), 192);
  CHECK(encloses(resid, BigRat(0)));
}
