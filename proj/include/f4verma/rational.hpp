#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace f4verma {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number backed by an arbitrary-precision integer type.
/// Always stored in lowest terms with a positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(int n) : v_(n) {}
  Rational(long long n) : v_(n) {}
  Rational(const BigInt& n) : v_(n) {}
  Rational(BigInt num, BigInt den) {
    if (den == 0)
      throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    v_ = boost::multiprecision::cpp_rational(num, den);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  bool is_positive() const { return v_ > 0; }
  bool is_negative() const { return v_ < 0; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero())
      throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Canonical text form: "p" for integers, "p/q" otherwise.
  std::string str() const {
    std::string s = numerator().str();
    if (!is_integer())
      s += "/" + denominator().str();
    return s;
  }

  /// Inverse of str(); accepts "p" and "p/q" with an optional leading sign.
  static Rational parse(std::string_view text);

private:
  boost::multiprecision::cpp_rational v_;
};

inline Rational Rational::parse(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  };
  if (text.empty())
    throw bad();
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos)
      return Rational(BigInt(std::string(text)));
    BigInt num{std::string(text.substr(0, slash))};
    BigInt den{std::string(text.substr(slash + 1))};
    if (den <= 0)
      throw bad();
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

} // namespace f4verma
