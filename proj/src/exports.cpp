#include "f4verma/exports.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace f4verma {

using nlohmann::json;

namespace {

json rational_array(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v)
    a.push_back(r.str());
  return a;
}

} // namespace

json roots_to_json(const RootSystem& rs) {
  json out = json::array();
  for (const auto& b : rs.positive()) {
    const auto eps = epsilon_coords(b);
    out.push_back(json{
        {"coords", b.coords},
        {"norm", rs.norm(b).str()},
        {"length_class", rs.length_class(b) == LengthClass::Long ? "long" : "short"},
        {"epsilon", rational_array({eps.begin(), eps.end()})},
    });
  }
  return out;
}

json weight_to_json(const CartanData& data, const Weight& w, bool include_root_basis) {
  json labels = json::array();
  for (const auto& l : w.labels)
    labels.push_back(l.str());
  json out{{"labels", labels}};
  if (include_root_basis) {
    json rb = json::array();
    for (const auto& x : weight_in_root_basis(data, w))
      rb.push_back(x.str());
    out["root_basis"] = rb;
  }
  return out;
}

json signature_to_json(const Signature& s) {
  return json{
      {"n1", s.n1.str()}, {"n2", s.n2.str()},   {"c", s.c.str()},
      {"n4", s.n4.str()}, {"d", s.d().str()},   {"side", side_str(s.side)},
  };
}

json multiplet_to_json(const MultipletGraph& g) {
  json out;
  if (g.params)
    out["params"] = *g.params;
  else
    out["params"] = "symbolic";
  json nodes = json::array();
  for (const auto& n : g.nodes) {
    json labels = json::array();
    for (const auto& l : n.weight.labels)
      labels.push_back(l.str());
    nodes.push_back(json{
        {"id", n.id},
        {"name", n.name ? json(*n.name) : json(nullptr)},
        {"level", n.level},
        {"side", side_str(n.sig.side)},
        {"labels", labels},
        {"signature", signature_to_json(n.sig)},
        {"d", n.sig.d().str()},
    });
  }
  out["nodes"] = std::move(nodes);
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back(json{
        {"src", e.src},
        {"dst", e.dst},
        {"root", e.root.coords},
        {"degree", e.degree.str()},
        {"arrow_level", e.arrow_level ? json(*e.arrow_level) : json(nullptr)},
    });
  out["edges"] = std::move(edges);
  out["diagram_edges"] = g.diagram_edges;
  return out;
}

std::string multiplet_to_dot(const MultipletGraph& g) {
  std::ostringstream out;
  out << "digraph f4_multiplet {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=box, fontsize=10];\n";
  std::map<int, std::vector<int>> by_level;
  for (const auto& n : g.nodes)
    by_level[n.level].push_back(n.id);
  for (const auto& [level, ids] : by_level) {
    out << "  { rank=same;";
    for (int id : ids)
      out << " n" << id << ";";
    out << " }  // level " << level << "\n";
  }
  for (const auto& n : g.nodes) {
    const std::string label = n.name ? *n.name : render_signature(n.sig);
    out << "  n" << n.id << " [label=\"" << label << "\"];\n";
  }
  for (int ei : g.diagram_edges) {
    const auto& e = g.edges[static_cast<size_t>(ei)];
    out << "  n" << e.src << " -> n" << e.dst;
    if (e.arrow_level)
      out << " [label=\"" << *e.arrow_level << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string roots_to_text(const RootSystem& rs) {
  std::ostringstream out;
  int n_long = 0, n_short = 0;
  for (const auto& b : rs.positive()) {
    const bool is_long = rs.length_class(b) == LengthClass::Long;
    (is_long ? n_long : n_short)++;
    out << "(";
    for (size_t j = 0; j < b.coords.size(); ++j)
      out << (j ? "," : "") << b.coords[j];
    out << ")  norm=" << rs.norm(b).str() << "  " << (is_long ? "long " : "short") << "  eps=(";
    const auto eps = epsilon_coords(b);
    for (size_t t = 0; t < eps.size(); ++t)
      out << (t ? ", " : "") << eps[t].str();
    out << ")\n";
  }
  out << rs.positive().size() << " (" << n_long << " long, " << n_short << " short)\n";
  return out.str();
}

std::string multiplet_to_text(const MultipletGraph& g) {
  std::ostringstream out;
  if (g.params) {
    const auto& p = *g.params;
    out << "labels: [" << p[0] << ", " << p[1] << ", " << p[2] << ", " << p[3] << "]\n";
  } else {
    out << "labels: symbolic\n";
  }
  out << "nodes: " << g.nodes.size() << "\n";
  const auto hist = level_histogram(g);
  out << "levels:";
  for (int h : hist)
    out << " " << h;
  out << "\n";
  out << "edges: " << g.edges.size() << " (" << g.diagram_edges.size() << " diagram arrows)\n";
  const auto pairs = ks_pairing(g);
  out << "ks pairs: " << pairs.size() << "\n";
  for (const auto& n : g.nodes) {
    out << "  [" << n.id << "] level " << n.level << "  "
        << (n.name ? *n.name : std::string("(unnamed)")) << "  " << render_signature(n.sig)
        << "  d=" << n.sig.d().str() << "\n";
  }
  return out.str();
}

} // namespace f4verma
