#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace expsum {

// Exact arithmetic scalars. mpq_class keeps gcd(num,den)=1 and den>0
// after canonicalize(), which all gmpxx arithmetic maintains.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt pow_int(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline BigRat pow_rat(const BigRat& b, unsigned long e) {
  BigRat r(pow_int(b.get_num(), e), pow_int(b.get_den(), e));
  r.canonicalize();
  return r;
}

// A dyadic rational m * 2^k as an exact BigRat.
inline BigRat dyadic(const BigInt& mantissa, long exp2) {
  BigRat r(mantissa);
  if (exp2 >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(exp2));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(),
                 static_cast<unsigned long>(-exp2));
  }
  return r;
}

inline int sign(const BigRat& q) { return sgn(q); }
inline int sign(const BigInt& z) { return sgn(z); }

inline BigRat abs_rat(const BigRat& q) { return q < 0 ? BigRat(-q) : q; }

inline std::string to_string(const BigRat& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline BigRat rat_from_string(const std::string& s) {
  BigRat q(s);
  q.canonicalize();
  return q;
}

}  // namespace expsum
