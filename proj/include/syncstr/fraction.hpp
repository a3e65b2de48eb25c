#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace syncstr {

using bigint = boost::multiprecision::cpp_int;

/* Exact rational, always reduced, denominator > 0. Every verdict in this
 * library is decided through this type or through integer thresholds derived
 * from it; floating point is for display only. */
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}
  Fraction(long long v) : num_(v), den_(1) {}
  Fraction(bigint num, bigint den);

  /* Accepts "NUM/DEN" or a bare integer "NUM". */
  static Fraction parse(const std::string& text);

  const bigint& num() const { return num_; }
  const bigint& den() const { return den_; }

  Fraction operator+(const Fraction& o) const;
  Fraction operator-(const Fraction& o) const;
  Fraction operator*(const Fraction& o) const;
  Fraction operator/(const Fraction& o) const;
  Fraction operator-() const;

  bool operator==(const Fraction& o) const;
  bool operator!=(const Fraction& o) const { return !(*this == o); }
  bool operator<(const Fraction& o) const;
  bool operator<=(const Fraction& o) const;
  bool operator>(const Fraction& o) const { return o < *this; }
  bool operator>=(const Fraction& o) const { return o <= *this; }

  bigint floor() const;
  bigint ceil() const;
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  /* Canonical serialization, always "NUM/DEN". */
  std::string str() const;
  /* Display aid only; never feeds a comparison. */
  double approx() const;

 private:
  bigint num_;
  bigint den_;
  void reduce();
};

bigint ceil_div(const bigint& a, const bigint& b);

/* Smallest integer x with x >= c*log2(n), computed exactly via
 * 2^(x*q) >= n^p for c = p/q. Requires c >= 0, n >= 1. */
long long ceil_mul_log2(const Fraction& c, unsigned long long n);

/* floor(2^e) for e >= 0, exact (integer root of a power of two). */
bigint floor_pow2(const Fraction& e);

/* Smallest prime >= n (n >= 2), by trial division; desk-scale sizes. */
unsigned long long next_prime(unsigned long long n);

}  // namespace syncstr
