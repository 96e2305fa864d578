#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "expsum/extremal.hpp"
#include "expsum/region.hpp"

using namespace expsum;

namespace {
const BigRat kTol(1, 1000000);
}

TEST_CASE("double intervals keep directed containment under arithmetic") {
  DInterval a{0.1, 0.2}, b{-0.3, 0.05};
  DInterval s = a + b;
  CHECK(s.lo <= 0.1 - 0.3);
  CHECK(s.hi >= 0.2 + 0.05);
  DInterval p = a * b;
  CHECK(p.lo <= -0.06);
  CHECK(p.hi >= 0.2 * 0.05);
  DInterval q = sqr(DInterval{-2.0, 1.0});
  CHECK(q.lo <= 0.0);
  CHECK(q.hi >= 4.0);
}

TEST_CASE("box evaluator agrees in sign with exact evaluation") {
  for (unsigned n : {3u, 7u}) {
    PartialSumEval G(n, /*scaled=*/true);
    RatPoly2 g = membership_poly(n, /*scaled=*/true);
    const double pts[][2] = {{-0.5, 0.25}, {0.1, 0.1}, {-1.2, 0.8},
                             {0.6, 0.9},   {-0.05, 0.65}};
    for (const auto& p : pts) {
      DInterval v = G.eval(DInterval::point(p[0]), DInterval::point(p[1]));
      BigRat exact = g.eval(detail::rat_from_double(p[0]),
                            detail::rat_from_double(p[1]));
      CHECK(v.lo <= exact.get_d());
      CHECK(v.hi >= exact.get_d());
      // a fattened box must still contain the exact point value
      DInterval w = G.eval(DInterval{p[0] - 0.01, p[0] + 0.01},
                           DInterval{p[1] - 0.01, p[1] + 0.01});
      CHECK(w.lo <= exact.get_d());
      CHECK(w.hi >= exact.get_d());
    }
  }
}

TEST_CASE("full-plane extremal radius of n=1 is exactly 2") {
  RadiusCertificate c = max_modulus(1, /*half_plane_only=*/false, kTol);
  CHECK(c.lo <= 2);
  CHECK(c.hi >= 2);
  CHECK(c.hi - c.lo <= kTol);
  // the witness is feasible and as far out as lo claims
  CHECK(contains(1, c.witness_x, c.witness_y, true).state != Membership::Outside);
}

TEST_CASE("n=2 radius encloses the closed-form value") {
  // max|z| over the n=2 region is sqrt((1+sqrt 2)/2)
  RadiusCertificate c = max_modulus(2, false, kTol);
  Interval r = Interval::hull(c.lo, c.hi, 128);
  Interval target = (Interval::from_long(1, 128) + sqrt(Interval::from_long(2, 128))) /
                    Interval::from_long(2, 128);
  Interval diff = r * r - target;
  CHECK(diff.lo_rat() <= 0);
  CHECK(0 <= diff.hi_rat());
}

TEST_CASE("left-half restriction never exceeds the full-plane radius") {
  for (unsigned n : {5u, 6u}) {
    RadiusCertificate full = max_modulus(n, false, kTol);
    RadiusCertificate left = max_modulus(n, true, kTol);
    CHECK(left.hi <= full.hi + kTol);
    CHECK(left.witness_x <= 0);
  }
}

TEST_CASE("inscribed semi-disk radius: existence pattern and values") {
  CHECK(!inner_semidisk_radius(5, kTol).has_value());
  CHECK(!inner_semidisk_radius(6, kTol).has_value());

  auto c3 = inner_semidisk_radius(3, BigRat(1, 1000000000));
  REQUIRE(c3.has_value());
  // rho_3 = sqrt(3)/3, i.e. 3 rho^2 = 1
  CHECK(c3->lo * c3->lo * 3 <= 1);
  CHECK(c3->hi * c3->hi * 3 >= 1);

  auto c4 = inner_semidisk_radius(4, kTol);
  REQUIRE(c4.has_value());
  CHECK(c4->hi * c4->hi < BigRat(1, 2));  // strictly below sqrt(8)/4
  CHECK(c4->lo > BigRat(13, 20));
}

TEST_CASE("semi-disk certificate is consistent with pointwise membership") {
  auto c = inner_semidisk_radius(8, kTol);
  REQUIRE(c.has_value());
  // a couple of exact points strictly inside the certified semi-disk
  BigRat r = c->lo * BigRat(99, 100);
  const std::pair<BigRat, BigRat> dirs[] = {
      {BigRat(-1), BigRat(0)}, {BigRat(-3, 5), BigRat(4, 5)},
      {BigRat(-4, 5), BigRat(-3, 5)}, {BigRat(0), BigRat(1)}};
  for (const auto& [dx, dy] : dirs) {
    ContainResult m = contains(8, BigRat(r * dx), BigRat(r * dy), false);
    CHECK(m.state == Membership::Inside);
  }
}

TEST_CASE("ray seeding produces a feasible witness") {
  RatPoly2 g = membership_poly(7, /*scaled=*/true);
  detail::FeasibleSeed s = detail::seed_from_rays(g, /*half_plane_only=*/false);
  CHECK(s.dist_lo > 0.0);
  CHECK(contains(7, s.x, s.y, true).state != Membership::Outside);
}

TEST_CASE("coverage radius formula and sweep") {
  Interval r = coverage_radius_formula(10000, BigRat(1, 10));
  // 1/e + 2.1*sqrt(e^2+1)/100 ~ 0.4285
  CHECK(r.lo_d() > 0.42);
  CHECK(r.hi_d() < 0.44);

  // very coarse sanity run of the sweep machinery on a generous radius
  CoverageSpec spec{true, Interval::from_rat(BigRat(2), 96)};
  CHECK(coverage_disk_check(2, spec));
}
