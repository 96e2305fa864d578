#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "expsum/interval.hpp"

using namespace expsum;

namespace {

BigRat rand_rat(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
  BigRat q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

bool encloses(const Interval& v, const BigRat& q) {
  return v.lo_rat() <= q && q <= v.hi_rat();
}

}  // namespace

TEST_CASE("arithmetic encloses the exact rational result") {
  std::mt19937 rng(20240817);
  for (int it = 0; it < 300; ++it) {
    BigRat a = rand_rat(rng), b = rand_rat(rng);
    Interval ia = Interval::from_rat(a, 64), ib = Interval::from_rat(b, 64);
    CHECK(encloses(ia + ib, a + b));
    CHECK(encloses(ia - ib, a - b));
    CHECK(encloses(ia * ib, BigRat(a * b)));
    if (b != 0) CHECK(encloses(ia / ib, BigRat(a / b)));
  }
}

TEST_CASE("low precision still yields correct (just wider) enclosures") {
  std::mt19937 rng(7);
  for (int it = 0; it < 100; ++it) {
    BigRat a = rand_rat(rng), b = rand_rat(rng);
    // prec far below what the rationals need exactly
    Interval p = Interval::from_rat(a, 64) * Interval::from_rat(b, 64);
    CHECK(encloses(p, BigRat(a * b)));
  }
}

TEST_CASE("transcendental functions hit known values") {
  Interval e = Interval::euler_e(128);
  CHECK(encloses(exp(Interval::from_long(1, 128)) - e, BigRat(0)));
  CHECK(encloses(log(e), BigRat(1)));
  Interval s2 = sqrt(Interval::from_long(2, 128));
  CHECK(encloses(s2 * s2, BigRat(2)));
  CHECK(encloses(sin(Interval::pi(128)), BigRat(0)));
  CHECK(encloses(cos(Interval::pi(128)) + Interval::from_long(1, 128),
                 BigRat(0)));
  CHECK(encloses(log10(Interval::from_long(1000, 128)), BigRat(3)));
  // 2^10 via pow_ui
  CHECK(encloses(pow_ui(Interval::from_long(2, 64), 10), BigRat(1024)));
}

TEST_CASE("pi between classic bounds") {
  Interval pi = Interval::pi(64);
  CHECK(pi.lo_rat() > BigRat(223, 71));
  CHECK(pi.hi_rat() < BigRat(22, 7));
}

TEST_CASE("directed predicates") {
  Interval a = Interval::from_rat(BigRat(1, 3), 64);
  CHECK(a.certainly_positive());
  CHECK(!(a - a).certainly_positive());
  CHECK((a - a - Interval::from_long(1, 64)).certainly_negative());
  Interval h = Interval::hull(BigRat(-1, 2), BigRat(1, 3), 64);
  CHECK(encloses(h, BigRat(0)));
  CHECK(encloses(h, BigRat(-1, 2)));
  CHECK(encloses(h, BigRat(1, 3)));
}

TEST_CASE("widening to higher precision keeps containment") {
  BigRat q(355, 113);
  Interval v = Interval::from_rat(q, 64);
  CHECK(encloses(v.widened(256), q));
  CHECK(encloses(v.widened(64), q));
}

TEST_CASE("complex rectangle modulus") {
  CInterval z{Interval::from_long(3, 64), Interval::from_long(4, 64)};
  CHECK(encloses(abs_sq(z), BigRat(25)));
  CHECK(encloses(abs(z), BigRat(5)));
  CInterval w = z * z;  // (3+4i)^2 = -7+24i
  CHECK(encloses(w.re, BigRat(-7)));
  CHECK(encloses(w.im, BigRat(24)));
}

TEST_CASE("from_double is exact for representable doubles") {
  Interval v = Interval::from_double(0.375, 64);
  CHECK(v.lo_rat() == BigRat(3, 8));
  CHECK(v.hi_rat() == BigRat(3, 8));
}
