#pragma once

#include "f4verma/parabolic.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace f4verma {

struct MultipletNode {
  int id = -1;
  Weight weight;
  Signature sig;
  /// Number of positive roots with generically negative Harish-Chandra
  /// parameter; 0 for the top weight, 20 for the bottom.
  int level = 0;
  /// Table name chi^-_{k,l} / chi^+_{k,l}, assigned by fixture matching.
  std::optional<std::string> name;
};

struct MultipletEdge {
  int src = -1;
  int dst = -1;
  RootVector root;     // M-noncompact positive root of the embedding
  LinForm degree;      // m_beta at the source weight
  /// n when the degree is exactly the basis form m_n; these are the
  /// diagram arrows.
  std::optional<int> arrow_level;
};

struct MultipletGraph {
  /// Concrete labels when generated (or evaluated) at a point; nullopt for
  /// a symbolic run.
  std::optional<std::array<long long, 4>> params;
  std::vector<MultipletNode> nodes;
  std::vector<MultipletEdge> edges;
  std::vector<int> diagram_edges; // indices into edges, generation order

  bool symbolic() const { return !params.has_value(); }
  const MultipletNode* find_by_signature(const Signature& s) const;
};

struct GenerateOptions {
  std::size_t node_cap = 11520; // 10 * |W(F4)|
};

/// Breadth-first closure from the top weight: along every M-noncompact
/// positive root with generically positive Harish-Chandra parameter,
/// reflect and keep the target when it is again M-dominant. Symbolic mode;
/// one run covers every positive-integer assignment.
MultipletGraph generate_multiplet(const RootSystem& rs, const ParabolicSpec& p,
                                  GenerateOptions opt = {});

/// Same closure at concrete positive integer labels (degrees must be
/// positive integers, dominance is numeric). Used to cross-check the
/// symbolic run; arrow levels and diagram edges are a symbolic notion and
/// are not assigned here.
MultipletGraph generate_multiplet(const RootSystem& rs, const ParabolicSpec& p,
                                  const std::array<long long, 4>& labels,
                                  GenerateOptions opt = {});

/// Evaluates a symbolic graph at concrete labels, keeping names, levels,
/// arrow labels and diagram edges.
MultipletGraph evaluate_at(const MultipletGraph& g, const std::array<long long, 4>& labels);

/// Independent oracle: the full Weyl orbit of the top weight under simple
/// shifted reflections, filtered by M-dominance. Aborts if the orbit size
/// is not the Weyl group order.
std::vector<Weight> orbit_quotient_oracle(const RootSystem& rs, const ParabolicSpec& p);

struct KsPair {
  int minus_node = -1; // the partner with the lower (or equal) level
  int plus_node = -1;
};

/// The involution {n1,n2,c,n4} -> {n2,n1,-c,n4} on node signatures.
/// Throws InvariantError on a missing partner or a fixed point.
std::vector<KsPair> ks_pairing(const MultipletGraph& g);

struct ArrowIssue {
  int edge = -1;
  std::string what;
};

struct ArrowReport {
  std::vector<ArrowIssue> issues;           // level jumps etc., never suppressed
  bool weakly_connected = false;            // under diagram edges only
  std::vector<int> nodes_without_diagram_out; // should be just the bottom node
};

/// Validates the diagram-arrow structure of a generated graph.
ArrowReport check_arrows(const MultipletGraph& g);

/// Level histogram indexed by level 0..20.
std::vector<int> level_histogram(const MultipletGraph& g);

} // namespace f4verma
