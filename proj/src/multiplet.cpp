#include "f4verma/multiplet.hpp"

#include "f4verma/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace f4verma {

namespace {

std::array<LinForm, 4> signature_key(const Signature& s) {
  return {s.n1, s.n2, s.c, s.n4};
}

std::array<Rational, 4> to_rationals(const std::array<long long, 4>& labels) {
  return {Rational(labels[0]), Rational(labels[1]), Rational(labels[2]), Rational(labels[3])};
}

Weight constant_weight(const std::array<Rational, 4>& values) {
  Weight w;
  for (size_t j = 0; j < 4; ++j)
    w.labels[j] = LinForm(values[j]);
  return w;
}

// Sign tests that work in both modes: symbolic weights carry homogeneous
// forms, evaluated weights carry plain constants.
bool generically_positive(const LinForm& f) {
  if (f.is_constant())
    return f.constant().is_positive();
  return f.sign_class() == SignClass::GenericPositive;
}

bool generically_negative(const LinForm& f) {
  if (f.is_constant())
    return f.constant().is_negative();
  return f.sign_class() == SignClass::GenericNegative;
}

bool m_dominant(const Weight& w, const ParabolicSpec& p) {
  for (int i : p.m_simple)
    if (!generically_positive(w.labels[static_cast<size_t>(i - 1)]))
      return false;
  return true;
}

// Embedding test for the BFS: generically positive degree in symbolic
// mode, a positive integer in concrete mode. Mixed symbolic forms abort:
// the Weyl-orbit structure rules them out for multiplet members.
bool embeddable(const LinForm& degree, bool symbolic) {
  if (!symbolic)
    return degree.constant().is_positive() && degree.constant().is_integer();
  switch (degree.sign_class()) {
  case SignClass::GenericPositive:
    return true;
  case SignClass::GenericNegative:
    return false;
  case SignClass::Mixed:
    throw InvariantError("generate: assignment-dependent degree encountered: " + degree.str());
  default:
    throw InvariantError("generate: vanishing Harish-Chandra parameter");
  }
}

int level_of(const RootSystem& rs, const Weight& w) {
  int level = 0;
  for (const auto& beta : rs.positive())
    if (generically_negative(hc_param(rs, w, beta)))
      ++level;
  return level;
}

MultipletGraph generate_impl(const RootSystem& rs, const ParabolicSpec& p, const Weight& top,
                             bool symbolic, GenerateOptions opt) {
  const auto noncompact = classify_roots(rs, p).m_noncompact;

  MultipletGraph g;
  std::map<std::array<LinForm, 4>, int> index;
  std::deque<int> queue;

  const auto intern = [&](const Weight& w) {
    const auto [it, inserted] = index.try_emplace(w.labels, static_cast<int>(g.nodes.size()));
    if (inserted) {
      if (g.nodes.size() >= opt.node_cap)
        throw InvariantError("generate: node cap exceeded");
      g.nodes.push_back(MultipletNode{it->second, w, signature_of(w, p), level_of(rs, w), {}});
      queue.push_back(it->second);
    }
    return it->second;
  };

  intern(top);
  while (!queue.empty()) {
    const int src = queue.front();
    queue.pop_front();
    for (const auto& beta : noncompact) {
      const Weight w = g.nodes[static_cast<size_t>(src)].weight; // copy: nodes may reallocate
      const LinForm degree = hc_param(rs, w, beta);
      if (!embeddable(degree, symbolic))
        continue;
      const Weight target = shifted_reflect(rs, w, beta);
      // Targets outside the M-dominant chamber are not weights of
      // generalized Verma modules; the multiplet does not contain them.
      if (!m_dominant(target, p))
        continue;
      const int dst = intern(target);
      std::optional<int> arrow;
      if (symbolic)
        arrow = degree.basis_index();
      const int edge_id = static_cast<int>(g.edges.size());
      g.edges.push_back(MultipletEdge{src, dst, beta, degree, arrow});
      if (arrow)
        g.diagram_edges.push_back(edge_id);
    }
  }
  return g;
}

} // namespace

const MultipletNode* MultipletGraph::find_by_signature(const Signature& s) const {
  for (const auto& n : nodes)
    if (signature_key(n.sig) == signature_key(s))
      return &n;
  return nullptr;
}

MultipletGraph generate_multiplet(const RootSystem& rs, const ParabolicSpec& p,
                                  GenerateOptions opt) {
  return generate_impl(rs, p, top_weight(), true, opt);
}

MultipletGraph generate_multiplet(const RootSystem& rs, const ParabolicSpec& p,
                                  const std::array<long long, 4>& labels, GenerateOptions opt) {
  for (long long v : labels)
    if (v < 1)
      throw std::invalid_argument("generate: concrete labels must be positive integers");
  MultipletGraph g = generate_impl(rs, p, constant_weight(to_rationals(labels)), false, opt);
  g.params = labels;
  return g;
}

MultipletGraph evaluate_at(const MultipletGraph& g, const std::array<long long, 4>& labels) {
  if (!g.symbolic())
    throw std::invalid_argument("evaluate_at: graph is already concrete");
  for (long long v : labels)
    if (v < 1)
      throw std::invalid_argument("evaluate_at: labels must be positive integers");
  const auto at = to_rationals(labels);
  const auto ev = [&](const LinForm& f) { return LinForm(f.eval(at)); };

  MultipletGraph out;
  out.params = labels;
  out.diagram_edges = g.diagram_edges;
  out.nodes.reserve(g.nodes.size());
  for (const auto& n : g.nodes) {
    MultipletNode m = n;
    for (auto& l : m.weight.labels)
      l = ev(l);
    m.sig = Signature{ev(n.sig.n1), ev(n.sig.n2), ev(n.sig.c), ev(n.sig.n4), n.sig.side};
    // evaluation at positive labels preserves every generic sign
    if ((m.sig.c.constant().is_negative() ? Side::Minus : Side::Plus) != n.sig.side)
      throw InvariantError("evaluate_at: side flipped under evaluation");
    out.nodes.push_back(std::move(m));
  }
  out.edges.reserve(g.edges.size());
  for (const auto& e : g.edges)
    out.edges.push_back(MultipletEdge{e.src, e.dst, e.root, ev(e.degree), e.arrow_level});
  return out;
}

std::vector<Weight> orbit_quotient_oracle(const RootSystem& rs, const ParabolicSpec& p) {
  const std::uint64_t expected = weyl_order(rs.data());
  std::set<Weight> orbit{top_weight()};
  std::deque<Weight> queue{top_weight()};
  std::vector<RootVector> simples;
  for (int i = 1; i <= rs.rank(); ++i) {
    RootVector e{std::vector<int>(static_cast<size_t>(rs.rank()), 0)};
    e.coords[static_cast<size_t>(i - 1)] = 1;
    simples.push_back(std::move(e));
  }
  while (!queue.empty()) {
    const Weight w = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : simples) {
      Weight v = shifted_reflect(rs, w, s);
      if (orbit.insert(v).second) {
        if (orbit.size() > expected)
          throw InvariantError("oracle: orbit larger than the Weyl group order");
        queue.push_back(std::move(v));
      }
    }
  }
  if (orbit.size() != expected)
    throw InvariantError("oracle: orbit size " + std::to_string(orbit.size()) +
                         " != Weyl order " + std::to_string(expected));
  std::vector<Weight> dominant;
  for (const auto& w : orbit)
    if (m_dominant(w, p))
      dominant.push_back(w);
  return dominant;
}

std::vector<KsPair> ks_pairing(const MultipletGraph& g) {
  std::map<std::array<LinForm, 4>, int> by_sig;
  for (const auto& n : g.nodes)
    by_sig.emplace(signature_key(n.sig), n.id);
  if (by_sig.size() != g.nodes.size())
    throw InvariantError("ks_pairing: node signatures are not distinct");

  std::vector<KsPair> pairs;
  std::set<int> done;
  for (const auto& n : g.nodes) {
    if (done.count(n.id))
      continue;
    const auto it = by_sig.find(signature_key(ks_dual(n.sig)));
    if (it == by_sig.end())
      throw InvariantError("ks_pairing: no partner for node " + std::to_string(n.id));
    if (it->second == n.id)
      throw InvariantError("ks_pairing: fixed point at node " + std::to_string(n.id));
    done.insert(n.id);
    done.insert(it->second);
    const auto& other = g.nodes[static_cast<size_t>(it->second)];
    if (n.level <= other.level)
      pairs.push_back(KsPair{n.id, other.id});
    else
      pairs.push_back(KsPair{other.id, n.id});
  }
  return pairs;
}

ArrowReport check_arrows(const MultipletGraph& g) {
  ArrowReport r;
  std::vector<std::set<int>> undirected(g.nodes.size());
  std::vector<int> outdeg(g.nodes.size(), 0);
  for (int ei : g.diagram_edges) {
    const auto& e = g.edges[static_cast<size_t>(ei)];
    if (!e.arrow_level || *e.arrow_level < 1 || *e.arrow_level > 4)
      r.issues.push_back({ei, "diagram edge without a 1..4 arrow label"});
    const int ls = g.nodes[static_cast<size_t>(e.src)].level;
    const int ld = g.nodes[static_cast<size_t>(e.dst)].level;
    if (ld != ls + 1)
      r.issues.push_back({ei, "unit-degree edge jumps from level " + std::to_string(ls) +
                                  " to level " + std::to_string(ld)});
    undirected[static_cast<size_t>(e.src)].insert(e.dst);
    undirected[static_cast<size_t>(e.dst)].insert(e.src);
    ++outdeg[static_cast<size_t>(e.src)];
  }
  // weak connectivity sweep
  if (!g.nodes.empty()) {
    std::set<int> seen{0};
    std::deque<int> queue{0};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : undirected[static_cast<size_t>(u)])
        if (seen.insert(v).second)
          queue.push_back(v);
    }
    r.weakly_connected = seen.size() == g.nodes.size();
  }
  for (const auto& n : g.nodes)
    if (outdeg[static_cast<size_t>(n.id)] == 0)
      r.nodes_without_diagram_out.push_back(n.id);
  return r;
}

std::vector<int> level_histogram(const MultipletGraph& g) {
  int max_level = 0;
  for (const auto& n : g.nodes)
    max_level = std::max(max_level, n.level);
  std::vector<int> hist(static_cast<size_t>(max_level + 1), 0);
  for (const auto& n : g.nodes)
    ++hist[static_cast<size_t>(n.level)];
  return hist;
}

} // namespace f4verma
