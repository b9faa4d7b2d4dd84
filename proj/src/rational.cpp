#include "dimdatum/rational.hpp"

#include <limits>
#include <stdexcept>

namespace dimdatum {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

u128 uabs(i128 v) { return v < 0 ? u128(-(v + 1)) + 1 : u128(v); }

u128 gcd_u128(u128 a, u128 b) {
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr i128 kMax = std::numeric_limits<long long>::max();
constexpr i128 kMin = std::numeric_limits<long long>::min();

}  // namespace

Rational Rational::make(i128 n, i128 d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    Rational r;
    return r;
  }
  u128 g = gcd_u128(uabs(n), uabs(d));
  n /= i128(g);
  d /= i128(g);
  if (n > kMax || n < kMin || d > kMax) throw std::overflow_error("Rational: value out of 64-bit range");
  Rational r;
  r.num_ = (long long)n;
  r.den_ = (long long)d;
  return r;
}

Rational::Rational(long long n, long long d) { *this = make(n, d); }

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  *this = make(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = make(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = make(i128(num_) * o.num_, i128(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  *this = make(i128(num_) * o.den_, i128(den_) * o.num_);
  return *this;
}

bool operator<(const Rational& a, const Rational& b) {
  return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(s));
  long long p = std::stoll(s.substr(0, slash));
  long long q = std::stoll(s.substr(slash + 1));
  return Rational(p, q);
}

}  // namespace dimdatum
