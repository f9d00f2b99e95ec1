#include "f4verma/verify.hpp"

#include "f4verma/exports.hpp"
#include "f4verma/fixtures.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace f4verma {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::set<std::vector<int>> published_long_roots() {
  return {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {0, 1, 2, 0},
          {1, 1, 2, 0}, {1, 2, 2, 0}, {0, 1, 2, 2}, {1, 1, 2, 2},
          {1, 2, 2, 2}, {1, 2, 4, 2}, {1, 3, 4, 2}, {2, 3, 4, 2}};
}

std::set<std::vector<int>> published_short_roots() {
  return {{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1},
          {1, 1, 1, 0}, {0, 1, 1, 1}, {1, 1, 1, 1}, {0, 1, 2, 1},
          {1, 2, 2, 1}, {1, 1, 2, 1}, {1, 2, 3, 1}, {1, 2, 3, 2}};
}

// The positive system in the orthonormal basis: e_i, e_j +- e_k (j<k),
// (e1 +- e2 +- e3 +- e4)/2.
std::set<EpsilonVector> expected_epsilon_set() {
  std::set<EpsilonVector> out;
  const Rational h(1, 2);
  for (int i = 0; i < 4; ++i) {
    EpsilonVector v{};
    v[static_cast<size_t>(i)] = 1;
    out.insert(v);
  }
  for (int j = 0; j < 4; ++j)
    for (int k = j + 1; k < 4; ++k)
      for (int s : {1, -1}) {
        EpsilonVector v{};
        v[static_cast<size_t>(j)] = 1;
        v[static_cast<size_t>(k)] = s;
        out.insert(v);
      }
  for (int s2 : {1, -1})
    for (int s3 : {1, -1})
      for (int s4 : {1, -1})
        out.insert(EpsilonVector{h, s2 * h, s3 * h, s4 * h});
  return out;
}

struct Runner {
  VerificationReport report;

  void check(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    CheckResult r{name, false, ""};
    try {
      const auto [pass, detail] = body();
      r.pass = pass;
      r.detail = detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    report.checks.push_back(std::move(r));
  }
};

} // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string VerificationReport::summary() const {
  std::vector<std::string> parts;
  for (const char* want : {"fixtures", "oracle", "weyl-order", "concrete-labels"})
    for (const auto& c : checks)
      if (c.name == want && c.pass && !c.detail.empty())
        parts.push_back(c.detail);
  std::string out;
  for (const auto& p : parts)
    out += (out.empty() ? "" : "; ") + p;
  return out;
}

VerificationReport run_verification(const std::string& fixture_path,
                                    std::optional<std::array<long long, 4>> labels) {
  Runner r;
  r.report.labels = labels;

  const CartanData data = build_f4();
  const RootSystem rs = positive_roots(data);
  const ParabolicSpec par = f4_max_parabolic();

  // Shared state across checks; generation failures surface in the checks
  // that need the graph.
  std::optional<MultipletGraph> graph;
  std::string graph_error;
  const auto t_generate = Clock::now();
  try {
    graph = generate_multiplet(rs, par);
  } catch (const std::exception& e) {
    graph_error = e.what();
  }
  const double generate_seconds = seconds_since(t_generate);

  r.check("root-system", [&]() -> std::pair<bool, std::string> {
    const auto t0 = Clock::now();
    const RootSystem fresh = positive_roots(build_f4());
    std::set<std::vector<int>> longs, shorts;
    std::set<EpsilonVector> eps;
    for (const auto& b : fresh.positive()) {
      (fresh.length_class(b) == LengthClass::Long ? longs : shorts).insert(b.coords);
      eps.insert(epsilon_coords(b));
    }
    const double dt = seconds_since(t0);
    const bool pass = fresh.positive().size() == 24 && longs == published_long_roots() &&
                      shorts == published_short_roots() && eps == expected_epsilon_set() &&
                      dt < 1.0;
    std::ostringstream d;
    d << fresh.positive().size() << " positive roots (" << longs.size() << " long, "
      << shorts.size() << " short), published lists and epsilon image matched";
    return {pass, d.str()};
  });

  r.check("rho", [&]() -> std::pair<bool, std::string> {
    const auto rho = rho_in_root_basis(data);
    const std::vector<Rational> want{8, 15, 21, 11};
    return {rho == want, "rho = (8, 15, 21, 11) in the simple-root basis"};
  });

  r.check("weyl-order", [&]() -> std::pair<bool, std::string> {
    const auto t0 = Clock::now();
    const auto full = weyl_order(data);
    const auto a2 = weyl_order(data, {1, 2});
    const auto a1 = weyl_order(data, {4});
    const double dt = seconds_since(t0);
    const bool pass = full == 1152 && a2 == 6 && a1 == 2 && dt < 5.0;
    return {pass, "|W|=" + std::to_string(full)};
  });

  r.check("parabolic", [&]() -> std::pair<bool, std::string> {
    const auto part = classify_roots(rs, par);
    const std::set<std::vector<int>> compact_want{
        {1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 0, 1}};
    std::set<std::vector<int>> compact_got;
    for (const auto& b : part.m_compact)
      compact_got.insert(b.coords);
    const bool pass = compact_got == compact_want && part.m_noncompact.size() == 20;
    return {pass, "M-compact roots {a1, a2, a1+a2, a4}; 20 noncompact"};
  });

  r.check("multiplet-size", [&]() -> std::pair<bool, std::string> {
    if (!graph)
      return {false, graph_error};
    const std::vector<int> want{1, 1, 2, 3, 4, 5, 6, 7, 7, 8, 8, 8, 7, 7, 6, 5, 4, 3, 2, 1, 1};
    const bool pass = graph->nodes.size() == 96 && level_histogram(*graph) == want &&
                      generate_seconds < 10.0;
    return {pass, std::to_string(graph->nodes.size()) + " nodes, level histogram matched"};
  });

  r.check("oracle", [&]() -> std::pair<bool, std::string> {
    if (!graph)
      return {false, graph_error};
    const auto oracle = orbit_quotient_oracle(rs, par);
    std::set<Weight> want(oracle.begin(), oracle.end());
    std::set<Weight> got;
    for (const auto& n : graph->nodes)
      got.insert(n.weight);
    const bool pass = want.size() == 96 && got == want;
    return {pass, "oracle set equal"};
  });

  r.check("fixtures", [&]() -> std::pair<bool, std::string> {
    if (!graph)
      return {false, graph_error};
    const auto fixtures = load_fixtures(fixture_path);
    const auto match = match_fixtures(*graph, fixtures);
    std::ostringstream d;
    d << match.matched_count << "/" << graph->nodes.size() << " signatures matched";
    if (!match.all_ok())
      for (const auto& p : match.problems)
        d << "; " << p;
    return {match.all_ok(), d.str()};
  });

  r.check("ks-duality", [&]() -> std::pair<bool, std::string> {
    if (!graph)
      return {false, graph_error};
    const auto pairs = ks_pairing(*graph);
    bool pass = pairs.size() == 48;
    for (const auto& p : pairs) {
      const auto& a = graph->nodes[static_cast<size_t>(p.minus_node)];
      const auto& b = graph->nodes[static_cast<size_t>(p.plus_node)];
      pass = pass && a.level + b.level == 20;
    }
    return {pass, "48 KS pairs, fixed-point-free, paired levels sum to 20"};
  });

  r.check("remark3", [&]() -> std::pair<bool, std::string> {
    if (!graph)
      return {false, graph_error};
    const std::array<Rational, 4> ones{1, 1, 1, 1};
    const auto& top = graph->nodes[0];
    const auto dual_sig = ks_dual(top.sig);
    const auto* bottom = graph->find_by_signature(dual_sig);
    if (!bottom)
      return {false, "KS dual of the top signature is not in the graph"};
    const Rational d_top = top.sig.d().eval(ones);
    const Rational d_bottom = bottom->sig.d().eval(ones);
    const auto ds = discrete_series_check(rs, par, bottom->weight);
    const bool pass = d_top == Rational(0) && d_bottom == Rational(7) && bottom->level == 20 &&
                      ds.has_value() && *ds;
    return {pass, "at (1,1,1,1): d(chi^-_0)=0, d(chi^+_0)=7; all 20 noncompact entries of "
                  "chi^+_0 generically negative"};
  });

  r.check("arrows", [&]() -> std::pair<bool, std::string> {
    if (!graph)
      return {false, graph_error};
    const auto rep = check_arrows(*graph);
    std::ostringstream d;
    d << graph->diagram_edges.size() << " diagram arrows, level step 1, weakly connected";
    bool pass = rep.issues.empty() && rep.weakly_connected &&
                rep.nodes_without_diagram_out.size() == 1;
    if (pass) {
      const int sink = rep.nodes_without_diagram_out.front();
      pass = graph->nodes[static_cast<size_t>(sink)].level == 20;
    }
    for (const auto& i : rep.issues)
      d << "; edge " << i.edge << ": " << i.what;
    return {pass, d.str()};
  });

  r.check("properties", [&]() -> std::pair<bool, std::string> {
    if (!graph)
      return {false, graph_error};
    bool pass = true;
    // every Harish-Chandra form at every node is sign-definite
    for (const auto& n : graph->nodes)
      for (const auto& beta : rs.positive()) {
        const auto sc = hc_param(rs, n.weight, beta).sign_class();
        pass = pass && (sc == SignClass::GenericPositive || sc == SignClass::GenericNegative);
      }
    // shifted reflection is an involution
    for (const auto& beta : rs.positive())
      pass = pass && shifted_reflect(rs, shifted_reflect(rs, top_weight(), beta), beta) ==
                         top_weight();
    // dual-Coxeter cross-check at the highest long root
    const RootVector theta{{2, 3, 4, 2}};
    pass = pass && hc_param(rs, rho_labels(), theta) == LinForm(Rational(8));
    // byte-identical repeated exports (two independent generations)
    const MultipletGraph run1 = generate_multiplet(rs, par);
    const MultipletGraph run2 = generate_multiplet(positive_roots(build_f4()), f4_max_parabolic());
    pass = pass && multiplet_to_json(run1).dump() == multiplet_to_json(run2).dump();
    pass = pass && multiplet_to_dot(run1) == multiplet_to_dot(run2);
    pass = pass && roots_to_json(rs).dump() == roots_to_json(positive_roots(build_f4())).dump();
    return {pass, "sign-definiteness, involution, (rho,theta^vee)=8, deterministic exports"};
  });

  if (labels) {
    r.check("concrete-labels", [&]() -> std::pair<bool, std::string> {
      if (!graph)
        return {false, graph_error};
      const MultipletGraph conc = generate_multiplet(rs, par, *labels);
      const MultipletGraph eval = evaluate_at(*graph, *labels);
      // node sets must agree as evaluated label vectors
      std::set<std::array<LinForm, 4>> a, b;
      std::map<std::array<LinForm, 4>, int> conc_ids;
      for (const auto& n : conc.nodes) {
        a.insert(n.weight.labels);
        conc_ids.emplace(n.weight.labels, n.id);
      }
      for (const auto& n : eval.nodes)
        b.insert(n.weight.labels);
      bool pass = conc.nodes.size() == 96 && a == b;
      // edge sets must agree through the label-vector identification
      std::set<std::tuple<int, int, std::vector<int>>> ce, ee;
      for (const auto& e : conc.edges)
        ce.insert({e.src, e.dst, e.root.coords});
      for (const auto& e : eval.edges)
        ee.insert({conc_ids.at(eval.nodes[static_cast<size_t>(e.src)].weight.labels),
                   conc_ids.at(eval.nodes[static_cast<size_t>(e.dst)].weight.labels),
                   e.root.coords});
      pass = pass && ce == ee;
      std::ostringstream d;
      const auto* bottom = eval.find_by_signature(ks_dual(eval.nodes[0].sig));
      d << "concrete run matches (96 nodes); d(chi^-_0)=" << eval.nodes[0].sig.d().str();
      if (bottom)
        d << "; d(chi^+_0)=" << bottom->sig.d().str();
      return {pass, d.str()};
    });
  }

  return r.report;
}

} // namespace f4verma
