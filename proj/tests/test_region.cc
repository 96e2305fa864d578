#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "expsum/families.hpp"
#include "expsum/region.hpp"

using namespace expsum;

TEST_CASE("membership sign agrees with the bivariate polynomial oracle") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<long> num(-20, 20);
  for (unsigned n : {1u, 3u, 6u, 9u}) {
    RatPoly2 g = membership_poly(n, /*scaled=*/true);
    for (int it = 0; it < 25; ++it) {
      BigRat x(num(rng), 10), y(num(rng), 10);
      x.canonicalize();
      y.canonicalize();
      int s = sgn(g.eval(x, y));
      ContainResult r = contains(n, x, y, /*scaled=*/true);
      if (s < 0) CHECK(r.state == Membership::Inside);
      if (s > 0) CHECK(r.state == Membership::Outside);
      if (s == 0) CHECK(r.state == Membership::Boundary);
    }
  }
}

TEST_CASE("rectangle membership is consistent with exact point membership") {
  for (unsigned n : {2u, 5u}) {
    const std::pair<BigRat, BigRat> pts[] = {
        {BigRat(-1, 10), BigRat(1, 10)}, {BigRat(2), BigRat(2)},
        {BigRat(0), BigRat(0)},          {BigRat(-1, 2), BigRat(0)}};
    for (const auto& [x, y] : pts) {
      ContainResult exact = contains(n, x, y, true);
      CInterval z{Interval::from_rat(x, 64), Interval::from_rat(y, 64)};
      ContainResult boxed = contains(n, z, true);
      if (boxed.state != Membership::Boundary)
        CHECK(boxed.state == exact.state);
    }
  }
}

TEST_CASE("axis decomposition shapes for small n") {
  // the component of 0 degenerates to a point exactly when n = 1, 2 mod 4
  SliceDecomposition d6 = v_plus(6);
  REQUIRE(d6.intervals.size() == 1);
  CHECK(d6.intervals[0].degenerate);
  CHECK(d6.intervals[0].lo.lo == 0);

  SliceDecomposition d5 = v_plus(5);
  REQUIRE(d5.intervals.size() == 2);
  CHECK(d5.intervals[0].degenerate);
  CHECK(!d5.intervals[1].degenerate);

  SliceDecomposition d8 = v_plus(8);
  REQUIRE(d8.intervals.size() == 1);
  CHECK(!d8.intervals[0].degenerate);
  CHECK(d8.intervals[0].lo.lo == 0);
}

TEST_CASE("largest axis point of n=3 is sqrt(3)") {
  RootBox b = max_v_plus(3);
  CHECK(b.lo * b.lo <= 3);
  CHECK(b.hi * b.hi >= 3);
  CHECK(b.hi - b.lo <= dyadic(BigInt(1), -40));
}

TEST_CASE("origin component class matches the lowest-coefficient sign") {
  for (unsigned n = 1; n <= 24; ++n) {
    IntPoly e = e_polynomial(n);
    int s = sign(e.rat_coeff(e.valuation()));
    OriginClass c = origin_component_class(n);
    CHECK((c == OriginClass::Singleton) == (s > 0));
  }
}

TEST_CASE("boundary trace of n=1 against the closed-form circle") {
  // G_1(x,y) = (1+x)^2 + y^2 - 1; for y <= 1 the root of smallest |x| is
  // -1 + sqrt(1-y^2), and for y > 1 there is no real root
  std::vector<BigRat> ys{BigRat(0), BigRat(1, 2), BigRat(4, 5), BigRat(1),
                         BigRat(3, 2)};
  BoundaryTrace tr = boundary_trace(1, ys);
  REQUIRE(tr.samples.size() == 5);

  CHECK(tr.samples[0].root_is_zero);

  for (int i : {1, 2}) {
    const TraceSample& s = tr.samples[i];
    REQUIRE(s.has_root);
    CHECK(s.sign == -1);
    // (1 + x)^2 must equal 1 - y^2 at the root
    BigRat y = s.y;
    Interval x = Interval::hull(s.box.lo, s.box.hi, 128);
    Interval one = Interval::from_long(1, 128);
    Interval resid = (one + x) * (one + x) - (one - Interval::from_rat(BigRat(y * y), 128));
    CHECK(resid.lo_rat() <= 0);
    CHECK(0 <= resid.hi_rat());
  }

  REQUIRE(tr.samples[3].has_root);  // y=1: x_min = -1 exactly... root at -1
  CHECK(!tr.samples[4].has_root);   // y=3/2: outside the disk entirely
}

TEST_CASE("trace magnitudes shrink toward the axis") {
  // for n=6 the boundary hugs the axis near 0: |x_min| grows with y
  std::vector<BigRat> ys{BigRat(1, 4), BigRat(1), BigRat(2)};
  BoundaryTrace tr = boundary_trace(6, ys);
  REQUIRE(tr.samples.size() == 3);
  for (const auto& s : tr.samples) {
    REQUIRE(s.has_root);
    CHECK(s.sign == -1);
  }
  CHECK(tr.samples[0].log10_abs_x < tr.samples[1].log10_abs_x);
  CHECK(tr.samples[1].log10_abs_x < tr.samples[2].log10_abs_x);
}

TEST_CASE("vertical ray extent equals the axis maximum") {
  // t = 1 is the direction straight up; the scaled extent is max(V_n^+)/n
  for (unsigned n : {4u, 8u}) {
    RadialSlice rs = radial_slice_max(n, BigRat(1));
    REQUIRE(rs.global_max.has_value());
    RootBox axis = max_v_plus(n);
    BigRat lo = axis.lo / static_cast<long>(n), hi = axis.hi / static_cast<long>(n);
    CHECK(rs.global_max->lo <= hi);
    CHECK(lo <= rs.global_max->hi);
  }
}

TEST_CASE("R_6(pi/2) is the origin alone") {
  RadialSlice rs = radial_slice_max(6, BigRat(1));
  CHECK(rs.zero_only);
}
