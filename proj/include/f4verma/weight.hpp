#pragma once

#include "f4verma/linform.hpp"
#include "f4verma/rootsystem.hpp"

#include <array>
#include <compare>
#include <optional>

namespace f4verma {

/// A weight stored through the simple-root Harish-Chandra labels of
/// Lambda+rho: labels[j] = (Lambda+rho, alpha_{j+1}^vee). The plain weight
/// Lambda appears only at export boundaries (subtract rho).
struct Weight {
  std::array<LinForm, 4> labels;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Top weight of the multiplet family: labels are the basis forms m1..m4.
Weight top_weight();

/// Labels of rho itself (all ones).
Weight rho_labels();

/// Harish-Chandra parameter m_beta = (Lambda+rho, beta^vee), as a form in
/// m1..m4. beta must be a positive root.
LinForm hc_param(const RootSystem& rs, const Weight& w, const RootVector& beta);

/// Labels of s_beta(Lambda+rho), i.e. of the shifted weight
/// Lambda' = Lambda - m_beta * beta.
Weight shifted_reflect(const RootSystem& rs, const Weight& w, const RootVector& beta);

/// rho in simple-root coordinates, from (rho, alpha_j^vee) = 1.
std::vector<Rational> rho_in_root_basis(const CartanData& data);

/// Coordinates of Lambda+rho over the simple roots (solved exactly;
/// entries are forms when the weight is symbolic).
std::array<LinForm, 4> weight_in_root_basis(const CartanData& data, const Weight& w);

struct Reducibility {
  enum class Kind {
    Generic,             ///< reducible along beta for every positive assignment
    AssignmentDependent, ///< mixed-sign parameter: depends on the labels
    None                 ///< parameter generically negative or zero
  };
  Kind kind = Kind::None;
  std::optional<LinForm> degree; ///< m_beta when kind != None
};

/// Symbolic reducibility of the Verma module along beta.
Reducibility reducibility_degree(const RootSystem& rs, const Weight& w, const RootVector& beta);

/// Concrete mode: the evaluated degree when it is a positive integer.
std::optional<BigInt> reducibility_degree_at(const RootSystem& rs, const Weight& w,
                                             const RootVector& beta,
                                             const std::array<Rational, 4>& at);

} // namespace f4verma
