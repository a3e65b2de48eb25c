#include "syncstr/fraction.hpp"

#include <boost/multiprecision/integer.hpp>
#include <stdexcept>

namespace syncstr {

Fraction::Fraction(bigint num, bigint den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::invalid_argument("fraction: zero denominator");
  reduce();
}

void Fraction::reduce() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  bigint g = boost::multiprecision::gcd(num_ < 0 ? bigint(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Fraction Fraction::parse(const std::string& text) {
  auto strip = [](std::string s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) return std::string();
    return s.substr(a, b - a + 1);
  };
  std::string t = strip(text);
  if (t.empty()) throw std::invalid_argument("fraction: empty string");
  try {
    size_t slash = t.find('/');
    if (slash == std::string::npos) return Fraction(bigint(t), 1);
    return Fraction(bigint(strip(t.substr(0, slash))), bigint(strip(t.substr(slash + 1))));
  } catch (const std::exception&) {
    throw std::invalid_argument("fraction: cannot parse '" + text + "'");
  }
}

Fraction Fraction::operator+(const Fraction& o) const {
  return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
Fraction Fraction::operator-(const Fraction& o) const {
  return Fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
Fraction Fraction::operator*(const Fraction& o) const {
  return Fraction(num_ * o.num_, den_ * o.den_);
}
Fraction Fraction::operator/(const Fraction& o) const {
  if (o.num_ == 0) throw std::invalid_argument("fraction: division by zero");
  return Fraction(num_ * o.den_, den_ * o.num_);
}
Fraction Fraction::operator-() const { return Fraction(-num_, den_); }

bool Fraction::operator==(const Fraction& o) const { return num_ == o.num_ && den_ == o.den_; }
bool Fraction::operator<(const Fraction& o) const { return num_ * o.den_ < o.num_ * den_; }
bool Fraction::operator<=(const Fraction& o) const { return num_ * o.den_ <= o.num_ * den_; }

bigint Fraction::floor() const {
  bigint q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) q -= 1;
  return q;
}

bigint Fraction::ceil() const {
  bigint q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) q += 1;
  return q;
}

std::string Fraction::str() const { return num_.str() + "/" + den_.str(); }

double Fraction::approx() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

bigint ceil_div(const bigint& a, const bigint& b) {
  if (b <= 0) throw std::invalid_argument("ceil_div: non-positive divisor");
  bigint q = a / b;
  if (a % b != 0 && a > 0) q += 1;
  return q;
}

long long ceil_mul_log2(const Fraction& c, unsigned long long n) {
  if (c.is_negative()) throw std::invalid_argument("ceil_mul_log2: negative factor");
  if (n == 0) throw std::invalid_argument("ceil_mul_log2: n must be >= 1");
  if (n == 1 || c.is_zero()) return 0;
  if (c.num() > 1000000) throw std::invalid_argument("ceil_mul_log2: factor too large");
  unsigned p = c.num().convert_to<unsigned>();
  unsigned q = c.den().convert_to<unsigned>();
  bigint np = boost::multiprecision::pow(bigint(n), p);
  long long lo = 0, hi = (64LL * p) / q + 2;  // 2^(hi*q) > 2^(64p) >= n^p
  while (lo < hi) {
    long long mid = lo + (hi - lo) / 2;
    bigint lhs = bigint(1) << static_cast<unsigned>(mid * q);
    if (lhs >= np)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

bigint floor_pow2(const Fraction& e) {
  if (e.is_negative()) throw std::invalid_argument("floor_pow2: negative exponent");
  if (e.num() > 65536) throw std::invalid_argument("floor_pow2: exponent too large");
  unsigned a = e.num().convert_to<unsigned>();
  unsigned b = e.den().convert_to<unsigned>();
  bigint target = bigint(1) << a;
  // largest v with v^b <= 2^a
  bigint lo = 1, hi = (bigint(1) << (a / b + 1));
  while (lo < hi) {
    bigint mid = (lo + hi + 1) / 2;
    if (boost::multiprecision::pow(mid, b) <= target)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

unsigned long long next_prime(unsigned long long n) {
  if (n <= 2) return 2;
  unsigned long long c = n | 1ULL;
  for (;; c += 2) {
    bool prime = true;
    for (unsigned long long d = 3; d * d <= c; d += 2) {
      if (c % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) return c;
  }
}

}  // namespace syncstr
