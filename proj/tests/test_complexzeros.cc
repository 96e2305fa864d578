#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "expsum/complexzeros.hpp"
#include "expsum/families.hpp"

using namespace expsum;

TEST_CASE("recovers a known factorization") {
  // (x^2 + 1)(x - 2) = x^3 - 2x^2 + x - 2
  IntPoly p = IntPoly::from_rat_coeffs(
      {BigRat(-2), BigRat(1), BigRat(-2), BigRat(1)});
  auto zs = complex_zeros(p);
  REQUIRE(zs.size() == 3);
  // sorted by real part: -i and i first (tie broken by imag), then 2
  CHECK(std::abs(zs[0] - std::complex<double>(0, -1)) < 1e-10);
  CHECK(std::abs(zs[1] - std::complex<double>(0, 1)) < 1e-10);
  CHECK(std::abs(zs[2] - std::complex<double>(2, 0)) < 1e-10);
}

TEST_CASE("origin roots come from the valuation") {
  // x^2 (x - 1)
  IntPoly p = IntPoly::from_rat_coeffs(
      {BigRat(0), BigRat(0), BigRat(-1), BigRat(1)});
  auto zs = complex_zeros(p);
  REQUIRE(zs.size() == 3);
  CHECK(zs[0] == std::complex<double>(0, 0));
  CHECK(zs[1] == std::complex<double>(0, 0));
  CHECK(std::abs(zs[2] - std::complex<double>(1, 0)) < 1e-10);
}

TEST_CASE("scaled partial sum zeros stay near the unit disk") {
  // every zero of the scaled partial sum has modulus below 1 + eps
  for (unsigned n : {4u, 8u, 12u}) {
    auto zs = complex_zeros(scaled_partial_sum(n));
    REQUIRE(zs.size() == n);
    for (const auto& z : zs) CHECK(std::abs(z) < 1.0 + 1e-9);
  }
}

TEST_CASE("conjugate symmetry of real-coefficient zeros") {
  auto zs = complex_zeros(partial_sum(7));
  REQUIRE(zs.size() == 7);
  for (const auto& z : zs) {
    bool found = false;
    for (const auto& w : zs)
      found |= std::abs(w - std::conj(z)) < 1e-9;
    CHECK(found);
  }
}
