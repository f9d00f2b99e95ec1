#include "f4verma/rootsystem.hpp"

#include "f4verma/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

namespace f4verma {

CartanData build_f4() {
  CartanData d;
  d.rank = 4;
  d.cartan = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
  const Rational h(1, 2);
  d.gram = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 1, -h}, {0, 0, -h, 1}};
  d.halfnorm = {1, 1, h, h};
  // a_jk = 2 B_jk / B_jj must tie the two matrices together
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k)
      if (Rational(d.cartan[j][k]) * d.gram[j][j] != Rational(2) * d.gram[j][k])
        throw InvariantError("build_f4: Cartan/Gram mismatch");
  return d;
}

int RootVector::height() const {
  return std::accumulate(coords.begin(), coords.end(), 0);
}

bool RootVector::all_nonneg() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

bool RootVector::all_nonpos() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c <= 0; });
}

RootVector RootVector::negated() const {
  RootVector r = *this;
  for (int& c : r.coords)
    c = -c;
  return r;
}

bool canonical_root_less(const RootVector& a, const RootVector& b) {
  if (a.height() != b.height())
    return a.height() < b.height();
  return a.coords < b.coords;
}

RootVector simple_reflection(const CartanData& data, int i, const RootVector& beta) {
  if (i < 1 || i > data.rank)
    throw std::invalid_argument("simple_reflection: index out of range");
  long long pair = 0;
  for (int k = 0; k < data.rank; ++k)
    pair += static_cast<long long>(data.cartan[static_cast<size_t>(i - 1)][static_cast<size_t>(k)]) *
            beta.coords[static_cast<size_t>(k)];
  RootVector r = beta;
  r.coords[static_cast<size_t>(i - 1)] -= static_cast<int>(pair);
  return r;
}

RootSystem::RootSystem(CartanData data, std::vector<RootVector> positive)
    : data_(std::move(data)), positive_(std::move(positive)) {
  std::sort(positive_.begin(), positive_.end(), canonical_root_less);
  for (const auto& b : positive_) {
    const Rational n = inner(b, b);
    norms_.emplace(b, n);
    max_norm_ = std::max(max_norm_, n);
  }
}

bool RootSystem::is_positive_root(const RootVector& v) const {
  return norms_.count(v) != 0;
}

bool RootSystem::is_root(const RootVector& v) const {
  return is_positive_root(v) || is_positive_root(v.negated());
}

Rational RootSystem::inner(const RootVector& u, const RootVector& v) const {
  Rational r;
  for (int i = 0; i < data_.rank; ++i) {
    if (u.coords[static_cast<size_t>(i)] == 0)
      continue;
    for (int j = 0; j < data_.rank; ++j)
      r += Rational(u.coords[static_cast<size_t>(i)]) *
           data_.gram[static_cast<size_t>(i)][static_cast<size_t>(j)] *
           Rational(v.coords[static_cast<size_t>(j)]);
  }
  return r;
}

LengthClass RootSystem::length_class(const RootVector& beta) const {
  return norm(beta) == max_norm_ ? LengthClass::Long : LengthClass::Short;
}

int RootSystem::pairing(const RootVector& beta, int j) const {
  if (j < 1 || j > data_.rank)
    throw std::invalid_argument("pairing: index out of range");
  long long p = 0;
  for (int k = 0; k < data_.rank; ++k)
    p += static_cast<long long>(data_.cartan[static_cast<size_t>(j - 1)][static_cast<size_t>(k)]) *
         beta.coords[static_cast<size_t>(k)];
  return static_cast<int>(p);
}

std::vector<Rational> RootSystem::coroot_coords(const RootVector& beta) const {
  if (!is_root(beta))
    throw std::invalid_argument("coroot_coords: not a root");
  // beta^vee = 2 beta/(beta,beta) = sum_j n_j d_j / ((beta,beta)/2) alpha_j^vee
  const Rational half = norm(beta) / Rational(2);
  std::vector<Rational> k(static_cast<size_t>(data_.rank));
  for (int j = 0; j < data_.rank; ++j)
    k[static_cast<size_t>(j)] =
        Rational(beta.coords[static_cast<size_t>(j)]) * data_.halfnorm[static_cast<size_t>(j)] / half;
  return k;
}

RootSystem RootSystem::subsystem(const std::vector<int>& simple_subset) const {
  std::vector<bool> keep(static_cast<size_t>(data_.rank), false);
  for (int i : simple_subset) {
    if (i < 1 || i > data_.rank)
      throw std::invalid_argument("subsystem: index out of range");
    keep[static_cast<size_t>(i - 1)] = true;
  }
  std::vector<RootVector> sub;
  for (const auto& b : positive_) {
    bool inside = true;
    for (int j = 0; j < data_.rank; ++j)
      if (b.coords[static_cast<size_t>(j)] != 0 && !keep[static_cast<size_t>(j)])
        inside = false;
    if (inside)
      sub.push_back(b);
  }
  return RootSystem(data_, std::move(sub));
}

RootSystem positive_roots(const CartanData& data, int sweep_cap) {
  // Coordinates of genuine roots stay tiny; anything past this bound means
  // the input is not of finite type.
  constexpr int kCoordLimit = 1000000;
  std::set<RootVector> known;
  for (int i = 1; i <= data.rank; ++i) {
    RootVector e{std::vector<int>(static_cast<size_t>(data.rank), 0)};
    e.coords[static_cast<size_t>(i - 1)] = 1;
    known.insert(e);
  }
  for (int sweep = 0; sweep < sweep_cap; ++sweep) {
    std::set<RootVector> next = known;
    for (const auto& b : known) {
      for (int i = 1; i <= data.rank; ++i) {
        RootVector r = simple_reflection(data, i, b);
        if (r.all_nonpos())
          r = r.negated();
        else if (!r.all_nonneg())
          continue; // mixed signs: not a root of a finite system
        for (int c : r.coords)
          if (std::abs(c) > kCoordLimit)
            throw InvariantError("positive_roots: coordinates diverge (input not of finite type)");
        next.insert(std::move(r));
      }
    }
    if (next == known)
      return RootSystem(data, {known.begin(), known.end()});
    known.swap(next);
  }
  throw InvariantError("positive_roots: saturation did not terminate within the sweep cap");
}

std::uint64_t weyl_order(const CartanData& data, const std::vector<int>& subset, std::uint64_t cap) {
  std::vector<int> gens = subset;
  if (gens.empty()) {
    gens.resize(static_cast<size_t>(data.rank));
    std::iota(gens.begin(), gens.end(), 1);
  }
  for (int i : gens)
    if (i < 1 || i > data.rank)
      throw std::invalid_argument("weyl_order: index out of range");

  // Orbit of a strictly dominant weight, acting on its labels
  // l_j = (w, alpha_j^vee): s_i sends l_j to l_j - l_i * a_ji.
  using Labels = std::vector<Rational>;
  const Labels start(static_cast<size_t>(data.rank), Rational(1));
  std::set<Labels> seen{start};
  std::vector<Labels> queue{start};
  while (!queue.empty()) {
    const Labels w = std::move(queue.back());
    queue.pop_back();
    for (int i : gens) {
      Labels v = w;
      const Rational li = w[static_cast<size_t>(i - 1)];
      for (int j = 0; j < data.rank; ++j)
        v[static_cast<size_t>(j)] -=
            li * Rational(data.cartan[static_cast<size_t>(j)][static_cast<size_t>(i - 1)]);
      if (seen.insert(v).second) {
        if (seen.size() > cap)
          throw InvariantError("weyl_order: orbit enumeration cap exceeded");
        queue.push_back(std::move(v));
      }
    }
  }
  return seen.size();
}

EpsilonVector epsilon_coords(const RootVector& beta) {
  if (beta.coords.size() != 4)
    throw std::invalid_argument("epsilon_coords: rank-4 vector required");
  const Rational h(1, 2);
  static const std::array<EpsilonVector, 4> simple = {{
      {0, 1, -1, 0},  // a1
      {0, 0, 1, -1},  // a2
      {0, 0, 0, 1},   // a3
      {h, -h, -h, -h} // a4
  }};
  EpsilonVector out{};
  for (size_t j = 0; j < 4; ++j)
    for (size_t t = 0; t < 4; ++t)
      out[t] += Rational(beta.coords[j]) * simple[j][t];
  return out;
}

Rational epsilon_inner(const EpsilonVector& u, const EpsilonVector& v) {
  Rational r;
  for (size_t t = 0; t < 4; ++t)
    r += u[t] * v[t];
  return r;
}

} // namespace f4verma
