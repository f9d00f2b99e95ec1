#include "f4verma/linform.hpp"

#include <cctype>
#include <stdexcept>

namespace f4verma {

LinForm LinForm::basis(int n) {
  if (n < 1 || n > kParams)
    throw std::invalid_argument("LinForm::basis: index out of range");
  LinForm f;
  f.coeffs_[static_cast<size_t>(n - 1)] = 1;
  return f;
}

bool LinForm::is_zero() const {
  if (!constant_.is_zero())
    return false;
  for (const auto& c : coeffs_)
    if (!c.is_zero())
      return false;
  return true;
}

bool LinForm::is_constant() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero())
      return false;
  return true;
}

std::optional<int> LinForm::basis_index() const {
  if (!constant_.is_zero())
    return std::nullopt;
  int found = 0;
  for (int n = 1; n <= kParams; ++n) {
    const auto& c = coeffs_[static_cast<size_t>(n - 1)];
    if (c.is_zero())
      continue;
    if (c != Rational(1) || found != 0)
      return std::nullopt;
    found = n;
  }
  return found == 0 ? std::nullopt : std::optional<int>(found);
}

Rational LinForm::eval(const std::array<Rational, kParams>& at) const {
  Rational r = constant_;
  for (int i = 0; i < kParams; ++i)
    r += coeffs_[static_cast<size_t>(i)] * at[static_cast<size_t>(i)];
  return r;
}

SignClass LinForm::sign_class() const {
  if (!constant_.is_zero())
    throw std::invalid_argument("LinForm::sign_class: form has a constant term");
  bool any_pos = false, any_neg = false;
  for (const auto& c : coeffs_) {
    any_pos = any_pos || c.is_positive();
    any_neg = any_neg || c.is_negative();
  }
  if (any_pos && any_neg)
    return SignClass::Mixed;
  if (any_pos)
    return SignClass::GenericPositive;
  if (any_neg)
    return SignClass::GenericNegative;
  return SignClass::Zero;
}

LinForm& LinForm::operator+=(const LinForm& o) {
  for (int i = 0; i < kParams; ++i)
    coeffs_[static_cast<size_t>(i)] += o.coeffs_[static_cast<size_t>(i)];
  constant_ += o.constant_;
  return *this;
}

LinForm& LinForm::operator-=(const LinForm& o) {
  for (int i = 0; i < kParams; ++i)
    coeffs_[static_cast<size_t>(i)] -= o.coeffs_[static_cast<size_t>(i)];
  constant_ -= o.constant_;
  return *this;
}

LinForm& LinForm::operator*=(const Rational& s) {
  for (auto& c : coeffs_)
    c *= s;
  constant_ *= s;
  return *this;
}

LinForm operator-(const LinForm& a) {
  LinForm r = a;
  return r *= Rational(-1);
}

std::strong_ordering operator<=>(const LinForm& a, const LinForm& b) {
  for (int i = 0; i < LinForm::kParams; ++i) {
    const auto c = a.coeffs_[static_cast<size_t>(i)] <=> b.coeffs_[static_cast<size_t>(i)];
    if (c != std::strong_ordering::equal)
      return c;
  }
  return a.constant_ <=> b.constant_;
}

std::string LinForm::str() const {
  std::string out;
  const auto append = [&out](const Rational& value, int var) {
    if (value.is_zero())
      return;
    const bool neg = value.is_negative();
    if (neg)
      out += '-';
    else if (!out.empty())
      out += '+';
    const Rational mag = neg ? -value : value;
    if (var == 0) {
      out += mag.str();
    } else {
      if (mag != Rational(1))
        out += mag.str() + "*";
      out += "m" + std::to_string(var);
    }
  };
  for (int n = 1; n <= kParams; ++n)
    append(coeffs_[static_cast<size_t>(n - 1)], n);
  append(constant_, 0);
  return out.empty() ? "0" : out;
}

namespace {

// One signed term of the canonical syntax: [rational '*'] 'm' digit, or a
// bare rational constant.
struct TermParser {
  std::string_view text;
  size_t at = 0;

  bool done() const { return at == text.size(); }
  char peek() const { return text[at]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("LinForm: cannot parse '" + std::string(text) + "': " + why);
  }

  Rational number() {
    const size_t start = at;
    while (at < text.size() && (std::isdigit(static_cast<unsigned char>(text[at])) || text[at] == '/'))
      ++at;
    if (at == start)
      fail("expected a number at position " + std::to_string(start));
    return Rational::parse(text.substr(start, at - start));
  }

  void term(LinForm& into, bool negate) {
    Rational coef(1);
    bool have_coef = false;
    if (done())
      fail("dangling sign");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = number();
      have_coef = true;
      if (!done() && peek() == '*')
        ++at;
      else {
        // plain constant term
        into += LinForm(negate ? -coef : coef);
        return;
      }
    }
    if (done() || peek() != 'm')
      fail(have_coef ? "expected a parameter after '*'" : "expected a term");
    ++at;
    if (done() || peek() < '1' || peek() > '4')
      fail("parameter index must be 1..4");
    const int var = peek() - '0';
    ++at;
    into += (negate ? -coef : coef) * LinForm::basis(var);
  }
};

} // namespace

LinForm LinForm::parse(std::string_view text) {
  if (text == "0")
    return LinForm();
  TermParser p{text};
  if (p.done())
    p.fail("empty input");
  LinForm out;
  bool first = true;
  while (!p.done()) {
    bool negate = false;
    if (p.peek() == '-') {
      negate = true;
      ++p.at;
    } else if (p.peek() == '+') {
      if (first)
        p.fail("leading '+'");
      ++p.at;
    } else if (!first) {
      p.fail("expected '+' or '-' between terms");
    }
    p.term(out, negate);
    first = false;
  }
  return out;
}

} // namespace f4verma
