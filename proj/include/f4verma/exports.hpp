#pragma once

#include "f4verma/multiplet.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace f4verma {

/// Root list: [{coords, norm, length_class, epsilon}], canonical order.
/// Rationals render as canonical strings ("1", "-1/2").
nlohmann::json roots_to_json(const RootSystem& rs);

/// {labels: [4 forms], root_basis: [4 forms]} for Lambda+rho.
nlohmann::json weight_to_json(const CartanData& data, const Weight& w,
                              bool include_root_basis = true);

/// {n1, n2, c, n4, d, side}.
nlohmann::json signature_to_json(const Signature& s);

/// {params, nodes, edges, diagram_edges} as documented in the README.
nlohmann::json multiplet_to_json(const MultipletGraph& g);

/// Layered digraph of the diagram (unit-degree) arrows; stable ordering.
std::string multiplet_to_dot(const MultipletGraph& g);

std::string roots_to_text(const RootSystem& rs);
std::string multiplet_to_text(const MultipletGraph& g);

} // namespace f4verma
