#include "f4verma/parabolic.hpp"

#include "f4verma/error.hpp"

#include <algorithm>

namespace f4verma {

ParabolicSpec f4_max_parabolic() {
  return ParabolicSpec{{1, 2, 4}, {1, 1, 1, Rational(1, 2)}};
}

RootPartition classify_roots(const RootSystem& rs, const ParabolicSpec& p) {
  std::vector<bool> in_m(static_cast<size_t>(rs.rank()), false);
  for (int i : p.m_simple)
    in_m.at(static_cast<size_t>(i - 1)) = true;
  RootPartition out;
  for (const auto& b : rs.positive()) {
    bool compact = true;
    for (int j = 0; j < rs.rank(); ++j)
      if (b.coords[static_cast<size_t>(j)] != 0 && !in_m[static_cast<size_t>(j)])
        compact = false;
    (compact ? out.m_compact : out.m_noncompact).push_back(b);
  }
  return out;
}

namespace {

// Sign of a form that is either homogeneous (symbolic weights) or a plain
// constant (evaluated weights).
Side side_of(const LinForm& c) {
  if (c.is_constant()) {
    if (c.constant().is_negative())
      return Side::Minus;
    if (c.constant().is_positive())
      return Side::Plus;
    throw InvariantError("signature: c vanishes (labels outside the generic regime)");
  }
  switch (c.sign_class()) {
  case SignClass::GenericNegative:
    return Side::Minus;
  case SignClass::GenericPositive:
    return Side::Plus;
  default:
    throw InvariantError("signature: sign of c is not determined: " + c.str());
  }
}

} // namespace

Signature signature_of(const Weight& w, const ParabolicSpec& p) {
  LinForm c;
  for (size_t j = 0; j < 4; ++j)
    c -= w.labels[j] * p.c_coeffs[j];
  Signature s{w.labels[0], w.labels[1], c, w.labels[3], side_of(c)};
  return s;
}

LinForm c_via_gram(const RootSystem& rs, const Weight& w) {
  // -(Lambda+rho, gamma) for gamma = a1+a2+2a3+a4, expanded through
  // (Lambda+rho, alpha_j) = d_j * l_j.
  const RootVector gamma{{1, 1, 2, 1}};
  LinForm c;
  for (int j = 0; j < 4; ++j)
    c -= w.labels[static_cast<size_t>(j)] *
         (Rational(gamma.coords[static_cast<size_t>(j)]) * rs.data().halfnorm[static_cast<size_t>(j)]);
  return c;
}

Signature ks_dual(const Signature& s) {
  return Signature{s.n2, s.n1, -s.c, s.n4, s.side == Side::Minus ? Side::Plus : Side::Minus};
}

std::string render_signature(const Signature& s) {
  return "{" + s.n1.str() + ", " + s.n2.str() + ", " + s.c.str() + ", " + s.n4.str() + "}";
}

std::optional<bool> discrete_series_check(const RootSystem& rs, const ParabolicSpec& p,
                                          const Weight& w) {
  for (const auto& beta : classify_roots(rs, p).m_noncompact) {
    const LinForm f = hc_param(rs, w, beta);
    if (f.is_constant()) {
      if (!f.constant().is_negative())
        return false;
      continue;
    }
    switch (f.sign_class()) {
    case SignClass::GenericNegative:
      break;
    case SignClass::Mixed:
      return std::nullopt;
    default:
      return false;
    }
  }
  return true;
}

} // namespace f4verma
