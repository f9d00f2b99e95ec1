#pragma once

#include "f4verma/multiplet.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace f4verma {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::optional<std::array<long long, 4>> labels;

  bool all_pass() const;
  /// Headline facts, e.g. "96/96 signatures matched; oracle set equal; |W|=1152".
  std::string summary() const;
};

/// Runs the full verification battery: root data against the published
/// lists, rho, Weyl orders, the parabolic partition, multiplet size and
/// histogram, oracle equivalence, the 96-signature fixture bijection,
/// KS duality, the conformal-weight spot values, arrow structure, and the
/// property sweep. Concrete labels add a cross-check of the evaluated
/// graph against an independent concrete generation.
VerificationReport run_verification(const std::string& fixture_path,
                                    std::optional<std::array<long long, 4>> labels = {});

} // namespace f4verma
