#include "lieflat/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace lieflat {

Rational::Rational(BigInt num, BigInt den) {
  if (den.is_zero()) {
    throw std::invalid_argument("rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  // cpp_rational reduces on its own once the denominator is positive.
  v_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
}

Rational Rational::operator-() const { return Rational(-v_); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw std::invalid_argument("division by zero rational");
  }
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  std::string s = numerator().str();
  if (!is_integer()) {
    s += "/";
    s += denominator().str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return false;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  out = BigInt(std::string(text));
  if (negative) out = -out;
  return true;
}

}  // namespace

std::optional<Rational> try_parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  BigInt num;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) return std::nullopt;
    return Rational(std::move(num), 1);
  }
  BigInt den;
  if (!parse_integer(text.substr(0, slash), num)) return std::nullopt;
  if (!parse_integer(text.substr(slash + 1), den)) return std::nullopt;
  if (den.is_zero()) return std::nullopt;
  return Rational(std::move(num), std::move(den));
}

Rational parse_rational(std::string_view text) {
  auto r = try_parse_rational(text);
  if (!r) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  return *r;
}

}  // namespace lieflat
