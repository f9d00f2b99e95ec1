#pragma once

#include "f4verma/weight.hpp"

#include <optional>
#include <string>
#include <vector>

namespace f4verma {

/// The maximal parabolic with M = sl(3,R) + sl(2,R): M is generated by the
/// simple roots {a1, a2, a4}, and the a-parameter of an induced
/// representation is c = -(l1 + l2 + l3 + l4/2) on the current labels.
struct ParabolicSpec {
  std::vector<int> m_simple;              // 1-based simple-root indices of M
  std::array<Rational, 4> c_coeffs;       // c = -sum_j c_coeffs[j] * l_j
};

ParabolicSpec f4_max_parabolic();

struct RootPartition {
  std::vector<RootVector> m_compact;
  std::vector<RootVector> m_noncompact;
};

/// Splits the positive roots into M-compact ones (supported on the
/// M-simple subset) and the rest, which span the nilradical.
RootPartition classify_roots(const RootSystem& rs, const ParabolicSpec& p);

enum class Side { Minus, Plus };

inline const char* side_str(Side s) { return s == Side::Minus ? "-" : "+"; }

/// Induced-representation signature chi = {n1, n2, c, n4}. The side records
/// the sign of c; the conformal weight d = 7/2 + c is derived.
struct Signature {
  LinForm n1, n2, c, n4;
  Side side = Side::Minus;

  LinForm d() const { return c + LinForm(Rational(7, 2)); }

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Reads the signature off the weight's labels. Throws InvariantError when
/// the sign of c is not determined (mixed symbolic form), which cannot
/// happen for multiplet members.
Signature signature_of(const Weight& w, const ParabolicSpec& p);

/// c computed through the Gram form as -(Lambda+rho, a1+a2+2a3+a4);
/// agrees with the label functional (cross-checked in tests).
LinForm c_via_gram(const RootSystem& rs, const Weight& w);

/// Knapp-Stein duality on signatures: {n1,n2,c,n4} -> {n2,n1,-c,n4}.
Signature ks_dual(const Signature& s);

/// "{n1, n2, c, n4}" in canonical form syntax.
std::string render_signature(const Signature& s);

/// True when every M-noncompact Harish-Chandra parameter of w is
/// generically negative (the Harish-Chandra criterion candidates);
/// nullopt when some parameter has mixed sign.
std::optional<bool> discrete_series_check(const RootSystem& rs, const ParabolicSpec& p,
                                          const Weight& w);

} // namespace f4verma
