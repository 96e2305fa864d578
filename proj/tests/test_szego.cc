#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "expsum/szego.hpp"

using namespace expsum;

TEST_CASE("region membership at hand-checked points") {
  // origin and small reals are inside; the unit point z=1 is on both
  // constraint boundaries; everything with |z| > 1 is out
  CHECK(sigma1_contains(BigRat(1, 10), BigRat(0)).state == Membership::Inside);
  CHECK(sigma1_contains(BigRat(0), BigRat(1, 5)).state == Membership::Inside);
  CHECK(sigma1_contains(BigRat(2), BigRat(0)).state == Membership::Outside);
  CHECK(sigma1_contains(BigRat(0), BigRat(2)).state == Membership::Outside);
  CHECK(sigma1_contains(BigRat(-1, 2), BigRat(0)).state == Membership::Outside);
  CHECK(sigma1_contains(BigRat(1), BigRat(0), 1e-10).state == Membership::Boundary);
}

TEST_CASE("i/e lies exactly on the curve") {
  // |z| = 1/e < 1 and |z e^{1-z}| = (1/e) e |e^{-i/e}| = 1
  mpfr_prec_t prec = 192;
  Interval ie = Interval::from_long(1, prec) / Interval::euler_e(prec);
  CInterval z{Interval::from_long(0, prec), ie};
  CHECK(sigma1_contains(z, 1e-20).state == Membership::Boundary);
}

TEST_CASE("boundary curve: x-range and y(x) identity") {
  auto [left, right] = sigma1_boundary_x_range(128);
  CHECK(left.lo_d() < -0.27);
  CHECK(left.hi_d() > -0.29);
  CHECK(right == BigRat(1));
  // points (x, y(x)) satisfy (x^2+y^2) e^{2-2x} = 1
  for (const BigRat& x : {BigRat(0), BigRat(1, 2), BigRat(9, 10)}) {
    Interval xi = Interval::from_rat(x, 128);
    Interval y = sigma1_boundary_y(xi, 128);
    Interval two = Interval::from_long(2, 128);
    Interval resid = (xi * xi + y * y) * exp(two - two * xi) -
                     Interval::from_long(1, 128);
    CHECK(resid.lo_rat() <= 0);
    CHECK(0 <= resid.hi_rat());
  }
  // y(0) = 1/e
  Interval y0 = sigma1_boundary_y(Interval::from_long(0, 128), 128);
  Interval diff = y0 * Interval::euler_e(128) - Interval::from_long(1, 128);
  CHECK(diff.lo_rat() <= 0);
  CHECK(0 <= diff.hi_rat());
}

TEST_CASE("distance bounds: positivity, ordering, limit") {
  Interval rho = Interval::from_rat(BigRat(1, 2), 128);
  Interval lb = distance_lower_bound(rho, 128);
  Interval d = delta_rho(rho, 128);
  CHECK(lb.certainly_positive());
  // delta_rho is half the lower bound
  Interval twice = d * Interval::from_long(2, 128) - lb;
  CHECK(twice.lo_rat() <= 0);
  CHECK(0 <= twice.hi_rat());
  // pointwise distance beats the uniform lower bound on (pi/2, pi)
  for (const BigRat& phi_frac : {BigRat(9, 16), BigRat(3, 4), BigRat(15, 16)}) {
    Interval phi = Interval::pi(128) * Interval::from_rat(phi_frac, 128);
    Interval pw = distance_pointwise(rho, phi, 128);
    CHECK((pw - lb).certainly_nonnegative());
  }
  CHECK_THROWS_AS(delta_rho(Interval::from_rat(BigRat(1, 10), 128), 128),
                  DomainError);
}

TEST_CASE("moebius values") {
  CHECK(moebius_inf(BigRat(1)) == BigRat(1, 2));
  CHECK(moebius_inf(BigRat(1, 4)) == BigRat(1, 5));
  CHECK(moebius_sup_band(Interval::from_rat(BigRat(1), 128)) == BigRat(1));
  CHECK(moebius_sup_band(Interval::from_rat(BigRat(19, 10), 128)) ==
        BigRat(139, 100));
  CHECK_THROWS_AS(moebius_sup_band(Interval::from_rat(BigRat(3), 128)),
                  DomainError);
}

TEST_CASE("factorial sandwich for assorted n") {
  for (unsigned n : {1u, 2u, 5u, 17u, 60u, 150u})
    CHECK(factorial_bounds_check(n));
}

TEST_CASE("sampled tail bounds certify on a small run") {
  BuckholtzReport rep = buckholtz_bounds_check(6, 40);
  CHECK(rep.all_certified);
  CHECK(rep.modulus_samples == 40);
  CHECK(rep.sigma_samples == 40);
  CHECK(rep.max_ratio_modulus <= 1.0);
  CHECK(rep.max_ratio_sigma <= 1.0);
}

TEST_CASE("contour grid is deterministic and level-correct at a known point") {
  auto a = szego_contour_grid(-1, 1, -1, 1, 5, 5);
  auto b = szego_contour_grid(-1, 1, -1, 1, 5, 5);
  REQUIRE(a.size() == 25);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].x == b[i].x);
    CHECK(a[i].level == b[i].level);
  }
  // at z = 1 the level is exactly 1
  auto g = szego_contour_grid(1, 2, 0, 1, 2, 2);
  CHECK(g[0].level == doctest::Approx(1.0).epsilon(1e-12));
}
