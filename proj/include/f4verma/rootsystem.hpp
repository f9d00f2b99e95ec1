#pragma once

#include "f4verma/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace f4verma {

/// Cartan matrix, Gram matrix of the simple roots, and half-norms d_i.
/// Constructed for F4 from fixed values; the algorithms below are
/// rank-generic.
struct CartanData {
  int rank = 0;
  std::vector<std::vector<int>> cartan;    // a[j][k] = 2(a_j,a_k)/(a_j,a_j)
  std::vector<std::vector<Rational>> gram; // B[i][j] = (a_i,a_j)
  std::vector<Rational> halfnorm;          // d_i = (a_i,a_i)/2
};

/// F4 Cartan data: diagram o--o=>o--o with simple-root norms (2,2,1,1).
CartanData build_f4();

/// A root in simple-root coordinates.
struct RootVector {
  std::vector<int> coords;

  int height() const;
  bool all_nonneg() const;
  bool all_nonpos() const;
  RootVector negated() const;

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

/// Canonical ordering used for every exported root list: by height, then
/// lexicographically by coordinates.
bool canonical_root_less(const RootVector& a, const RootVector& b);

/// s_i(beta) = beta - <beta, alpha_i^vee> alpha_i (i is 1-based).
RootVector simple_reflection(const CartanData& data, int i, const RootVector& beta);

enum class LengthClass { Long, Short };

/// The set of positive roots with norms, immutable after construction.
class RootSystem {
public:
  RootSystem(CartanData data, std::vector<RootVector> positive);

  const CartanData& data() const { return data_; }
  int rank() const { return data_.rank; }
  const std::vector<RootVector>& positive() const { return positive_; }

  bool is_positive_root(const RootVector& v) const;
  bool is_root(const RootVector& v) const;

  /// (u, v) in the Gram form; defined for arbitrary coordinate vectors.
  Rational inner(const RootVector& u, const RootVector& v) const;
  Rational norm(const RootVector& v) const { return inner(v, v); }
  LengthClass length_class(const RootVector& beta) const;

  /// <beta, alpha_j^vee> = 2(beta, alpha_j)/(alpha_j, alpha_j), an integer
  /// (j is 1-based).
  int pairing(const RootVector& beta, int j) const;

  /// Coordinates k_j with beta^vee = sum_j k_j alpha_j^vee. Requires beta
  /// to be a root (up to sign).
  std::vector<Rational> coroot_coords(const RootVector& beta) const;

  /// Positive roots supported on the given simple-root subset (1-based).
  RootSystem subsystem(const std::vector<int>& simple_subset) const;

private:
  CartanData data_;
  std::vector<RootVector> positive_;
  std::map<RootVector, Rational> norms_;
  Rational max_norm_;
};

/// Generates the positive roots by reflection saturation from the simple
/// roots. Throws InvariantError if the saturation does not reach a fixed
/// point within sweep_cap sweeps (non-finite input).
RootSystem positive_roots(const CartanData& data, int sweep_cap = 100);

/// Order of the Weyl group generated by the chosen simple reflections
/// (all of them if subset is empty), by orbit enumeration of a regular
/// weight. Throws InvariantError when the orbit exceeds the cap.
std::uint64_t weyl_order(const CartanData& data, const std::vector<int>& subset = {},
                         std::uint64_t cap = 4000000);

/// Coordinates in the orthonormal basis e1..e4.
using EpsilonVector = std::array<Rational, 4>;

/// Linear extension of the F4 simple-root assignment
/// a1 = e2-e3, a2 = e3-e4, a3 = e4, a4 = (e1-e2-e3-e4)/2.
EpsilonVector epsilon_coords(const RootVector& beta);

Rational epsilon_inner(const EpsilonVector& u, const EpsilonVector& v);

} // namespace f4verma
