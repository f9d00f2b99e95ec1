#pragma once

#include "f4verma/rational.hpp"

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace f4verma {

/// Generic sign of a homogeneous linear form over positive parameter values.
enum class SignClass { GenericPositive, GenericNegative, Zero, Mixed };

/// Linear form c1*m1 + c2*m2 + c3*m3 + c4*m4 + constant in the four
/// multiplet parameters. Equality and ordering are coefficient-wise.
class LinForm {
public:
  static constexpr int kParams = 4;

  LinForm() = default;
  explicit LinForm(Rational constant) : constant_(std::move(constant)) {}
  LinForm(std::array<Rational, kParams> coeffs, Rational constant)
      : coeffs_(std::move(coeffs)), constant_(std::move(constant)) {}

  /// The basis form m_n (n is 1-based).
  static LinForm basis(int n);

  const Rational& coeff(int n) const { return coeffs_.at(static_cast<size_t>(n - 1)); }
  const Rational& constant() const { return constant_; }

  bool is_zero() const;
  bool is_constant() const;
  /// n if the form is exactly the basis form m_n, otherwise nullopt.
  std::optional<int> basis_index() const;

  Rational eval(const std::array<Rational, kParams>& at) const;

  /// Requires a homogeneous form (zero constant term).
  SignClass sign_class() const;

  LinForm& operator+=(const LinForm& o);
  LinForm& operator-=(const LinForm& o);
  LinForm& operator*=(const Rational& s);
  friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
  friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
  friend LinForm operator*(const Rational& s, LinForm f) { return f *= s; }
  friend LinForm operator*(LinForm f, const Rational& s) { return f *= s; }
  friend LinForm operator-(const LinForm& a);

  friend bool operator==(const LinForm&, const LinForm&) = default;
  friend std::strong_ordering operator<=>(const LinForm& a, const LinForm& b);

  /// Canonical text form with terms in order m1..m4 followed by the
  /// constant, e.g. "m1+m2+1/2*m4" or "2*m2+m3-1".
  std::string str() const;

  /// Parses the canonical syntax (tolerates terms in any order; repeated
  /// terms are summed).
  static LinForm parse(std::string_view text);

private:
  std::array<Rational, kParams> coeffs_{};
  Rational constant_{};
};

} // namespace f4verma
