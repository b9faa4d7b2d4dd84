#ifndef DIMDATUM_RATIONAL_HPP
#define DIMDATUM_RATIONAL_HPP

#include <cstdint>
#include <string>

namespace dimdatum {

/// Exact rational with 64-bit numerator/denominator, always reduced,
/// denominator positive. Intermediates run through 128-bit arithmetic;
/// a reduced value that no longer fits throws std::overflow_error, so
/// results are never silently wrong.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  double to_double() const { return double(num_) / double(den_); }

  /// Canonical text form: "p" when integral, else "p/q".
  std::string str() const;
  /// Parses "p" or "p/q".
  static Rational parse(const std::string& s);

private:
  long long num_;
  long long den_;

  static Rational make(__int128 n, __int128 d);
};

}  // namespace dimdatum

#endif
