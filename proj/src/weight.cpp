#include "f4verma/weight.hpp"

#include "f4verma/linalg.hpp"

namespace f4verma {

Weight top_weight() {
  return Weight{{LinForm::basis(1), LinForm::basis(2), LinForm::basis(3), LinForm::basis(4)}};
}

Weight rho_labels() {
  const LinForm one{Rational(1)};
  return Weight{{one, one, one, one}};
}

LinForm hc_param(const RootSystem& rs, const Weight& w, const RootVector& beta) {
  const auto k = rs.coroot_coords(beta);
  LinForm m;
  for (size_t j = 0; j < 4; ++j)
    m += w.labels[j] * k[j];
  return m;
}

Weight shifted_reflect(const RootSystem& rs, const Weight& w, const RootVector& beta) {
  const LinForm m = hc_param(rs, w, beta);
  Weight out = w;
  for (int j = 1; j <= 4; ++j) {
    const int pair = rs.pairing(beta, j);
    if (pair != 0)
      out.labels[static_cast<size_t>(j - 1)] -= m * Rational(pair);
  }
  return out;
}

std::vector<Rational> rho_in_root_basis(const CartanData& data) {
  // (sum_k x_k alpha_k, alpha_j^vee) = sum_k a_jk x_k = 1 for every j
  std::vector<std::vector<Rational>> a(static_cast<size_t>(data.rank));
  for (int j = 0; j < data.rank; ++j)
    for (int k = 0; k < data.rank; ++k)
      a[static_cast<size_t>(j)].push_back(data.cartan[static_cast<size_t>(j)][static_cast<size_t>(k)]);
  return solve_linear(a, std::vector<Rational>(static_cast<size_t>(data.rank), Rational(1)));
}

std::array<LinForm, 4> weight_in_root_basis(const CartanData& data, const Weight& w) {
  std::vector<std::vector<Rational>> a(static_cast<size_t>(data.rank));
  for (int j = 0; j < data.rank; ++j)
    for (int k = 0; k < data.rank; ++k)
      a[static_cast<size_t>(j)].push_back(data.cartan[static_cast<size_t>(j)][static_cast<size_t>(k)]);
  const auto x = solve_linear(a, std::vector<LinForm>(w.labels.begin(), w.labels.end()));
  return {x[0], x[1], x[2], x[3]};
}

Reducibility reducibility_degree(const RootSystem& rs, const Weight& w, const RootVector& beta) {
  LinForm m = hc_param(rs, w, beta);
  switch (m.sign_class()) {
  case SignClass::GenericPositive:
    return {Reducibility::Kind::Generic, std::move(m)};
  case SignClass::Mixed:
    return {Reducibility::Kind::AssignmentDependent, std::move(m)};
  default:
    return {Reducibility::Kind::None, std::nullopt};
  }
}

std::optional<BigInt> reducibility_degree_at(const RootSystem& rs, const Weight& w,
                                             const RootVector& beta,
                                             const std::array<Rational, 4>& at) {
  const Rational v = hc_param(rs, w, beta).eval(at);
  if (v.is_positive() && v.is_integer())
    return v.numerator();
  return std::nullopt;
}

} // namespace f4verma
