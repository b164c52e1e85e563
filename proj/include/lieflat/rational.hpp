#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace lieflat {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar with arbitrary-precision numerator and denominator.
///
/// Values are always reduced to lowest terms with a positive denominator.
/// The constructor set is deliberately closed (no template constructors) so
/// the type can serve as an Eigen scalar without tripping over foreign
/// conversion probes.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
  Rational(BigInt num, BigInt den);
  explicit Rational(BigInt n) : v_(std::move(n)) {}

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
  boost::multiprecision::cpp_rational v_;
  explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
};

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

/// Parses "p/q" or "p" with optional sign. Returns nullopt on anything else,
/// including a zero denominator.
std::optional<Rational> try_parse_rational(std::string_view text);

/// Like try_parse_rational but throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace lieflat
