#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "f4verma/error.hpp"
#include "f4verma/exports.hpp"
#include "f4verma/fixtures.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <set>
#include <sstream>

using namespace f4verma;

namespace {

const LinForm m1 = LinForm::basis(1), m2 = LinForm::basis(2), m3 = LinForm::basis(3),
              m4 = LinForm::basis(4);

struct Fixture {
  RootSystem rs = positive_roots(build_f4());
  ParabolicSpec par = f4_max_parabolic();
  MultipletGraph graph = generate_multiplet(rs, par);
};

const Fixture& fx() {
  static Fixture f;
  return f;
}

MultipletGraph named_graph() {
  MultipletGraph g = fx().graph;
  const auto fixtures = load_fixtures(F4V_FIXTURES);
  const auto match = match_fixtures(g, fixtures);
  REQUIRE(match.all_ok());
  return g;
}

const MultipletNode& node_named(const MultipletGraph& g, const std::string& name) {
  for (const auto& n : g.nodes)
    if (n.name == name)
      return n;
  FAIL("no node named " << name);
  static MultipletNode dummy;
  return dummy;
}

} // namespace

TEST_CASE("symbolic generation yields the 96-member multiplet") {
  const auto& g = fx().graph;
  CHECK(g.nodes.size() == 96);
  CHECK(g.symbolic());
  const std::vector<int> expected{1, 1, 2, 3, 4, 5, 6, 7, 7, 8, 8, 8, 7, 7, 6, 5, 4, 3, 2, 1, 1};
  CHECK(level_histogram(g) == expected);
  // histogram symmetric under level -> 20-level
  const auto h = level_histogram(g);
  for (int l = 0; l <= 20; ++l)
    CHECK(h[static_cast<size_t>(l)] == h[static_cast<size_t>(20 - l)]);
  CHECK(g.nodes[0].weight == top_weight());
  CHECK(g.nodes[0].level == 0);
}

TEST_CASE("node weights are pairwise distinct and signatures injective") {
  const auto& g = fx().graph;
  std::set<std::array<LinForm, 4>> weights, sigs;
  for (const auto& n : g.nodes) {
    weights.insert(n.weight.labels);
    sigs.insert({n.sig.n1, n.sig.n2, n.sig.c, n.sig.n4});
  }
  CHECK(weights.size() == 96);
  CHECK(sigs.size() == 96);
}

TEST_CASE("every harish-chandra form at every node is sign-definite") {
  const auto& f = fx();
  for (const auto& n : f.graph.nodes)
    for (const auto& beta : f.rs.positive()) {
      const auto sc = hc_param(f.rs, n.weight, beta).sign_class();
      CHECK((sc == SignClass::GenericPositive || sc == SignClass::GenericNegative));
    }
}

TEST_CASE("signature entries restate the labels at a1, a2, a4") {
  for (const auto& n : fx().graph.nodes) {
    CHECK(n.sig.n1 == n.weight.labels[0]);
    CHECK(n.sig.n2 == n.weight.labels[1]);
    CHECK(n.sig.n4 == n.weight.labels[3]);
  }
}

TEST_CASE("edges increase the level and carry positive degrees") {
  const auto& g = fx().graph;
  CHECK(g.edges.size() == 370);
  CHECK(g.diagram_edges.size() == 160);
  for (const auto& e : g.edges) {
    CHECK(e.degree.sign_class() == SignClass::GenericPositive);
    CHECK(g.nodes[static_cast<size_t>(e.dst)].level > g.nodes[static_cast<size_t>(e.src)].level);
  }
}

TEST_CASE("first embeddings off the top weight") {
  const auto& g = fx().graph;
  // exactly one diagram arrow out of the top node: along a3 with label 3
  std::vector<int> top_arrows;
  for (int ei : g.diagram_edges)
    if (g.edges[static_cast<size_t>(ei)].src == 0)
      top_arrows.push_back(ei);
  REQUIRE(top_arrows.size() == 1);
  const auto& e = g.edges[static_cast<size_t>(top_arrows[0])];
  CHECK(e.root.coords == std::vector<int>{0, 0, 1, 0});
  CHECK(e.arrow_level == 3);
  CHECK(e.degree == m3);
  const auto& lvl1 = g.nodes[static_cast<size_t>(e.dst)];
  CHECK(lvl1.level == 1);
  CHECK(lvl1.weight.labels == std::array<LinForm, 4>{m1, m2 + m3, -m3, m3 + m4});
}

TEST_CASE("level-2 nodes carry the expected weights") {
  const auto& g = fx().graph;
  std::set<std::array<LinForm, 4>> level2;
  for (const auto& n : g.nodes)
    if (n.level == 2)
      level2.insert(n.weight.labels);
  const std::array<LinForm, 4> w21{m1 + m2, m2 + m3, -(m2 * Rational(2) + m3),
                                   m2 * Rational(2) + m3 + m4};
  const std::array<LinForm, 4> w22{m1, m2 + m3 + m4, -(m3 + m4), m3};
  CHECK(level2 == std::set<std::array<LinForm, 4>>{w21, w22});
}

TEST_CASE("generation agrees with the orbit-quotient oracle") {
  const auto& f = fx();
  const auto oracle = orbit_quotient_oracle(f.rs, f.par);
  CHECK(oracle.size() == 96);
  std::set<Weight> expect(oracle.begin(), oracle.end());
  CHECK(expect.count(top_weight()) == 1);
  std::set<Weight> got;
  for (const auto& n : f.graph.nodes)
    got.insert(n.weight);
  CHECK(got == expect);
}

TEST_CASE("knapp-stein pairing") {
  const auto& g = fx().graph;
  const auto pairs = ks_pairing(g);
  CHECK(pairs.size() == 48);
  int bottom = -1;
  for (const auto& n : g.nodes)
    if (n.level == 20)
      bottom = n.id;
  for (const auto& p : pairs) {
    CHECK(p.minus_node != p.plus_node);
    const auto& a = g.nodes[static_cast<size_t>(p.minus_node)];
    const auto& b = g.nodes[static_cast<size_t>(p.plus_node)];
    CHECK(a.level + b.level == 20);
    if (p.minus_node == 0)
      CHECK(p.plus_node == bottom);
  }
}

TEST_CASE("arrow structure") {
  const auto& g = fx().graph;
  const auto rep = check_arrows(g);
  CHECK(rep.issues.empty());
  CHECK(rep.weakly_connected);
  REQUIRE(rep.nodes_without_diagram_out.size() == 1);
  CHECK(g.nodes[static_cast<size_t>(rep.nodes_without_diagram_out[0])].level == 20);
  for (int ei : g.diagram_edges) {
    const auto& e = g.edges[static_cast<size_t>(ei)];
    REQUIRE(e.arrow_level.has_value());
    CHECK(*e.arrow_level >= 1);
    CHECK(*e.arrow_level <= 4);
    CHECK(e.degree == LinForm::basis(*e.arrow_level));
  }
}

TEST_CASE("fixture table matches 96/96 with consistent names") {
  MultipletGraph g = fx().graph;
  const auto fixtures = load_fixtures(F4V_FIXTURES);
  REQUIRE(fixtures.size() == 48);
  const auto match = match_fixtures(g, fixtures);
  CHECK(match.matched_count == 96);
  CHECK(match.bijection);
  CHECK(match.problems.empty());
  for (const auto& e : match.entries) {
    CHECK(e.matched);
    CHECK(e.level_ok);
  }
  // names: minus side fills levels 0..9, plus side 11..20, both at 10
  for (const auto& n : g.nodes) {
    REQUIRE(n.name.has_value());
    const bool minus_name = n.name->rfind("chi^-", 0) == 0;
    if (n.level <= 9)
      CHECK(minus_name);
    else if (n.level >= 11)
      CHECK(!minus_name);
  }
  int minus_at_10 = 0, plus_at_10 = 0;
  for (const auto& n : g.nodes)
    if (n.level == 10)
      (n.name->rfind("chi^-", 0) == 0 ? minus_at_10 : plus_at_10)++;
  CHECK(minus_at_10 == 4);
  CHECK(plus_at_10 == 4);
}

TEST_CASE("specific table entries sit at their levels") {
  const MultipletGraph g = named_graph();
  const auto& top = node_named(g, "chi^-_0");
  CHECK(top.id == 0);
  const auto& chi22 = node_named(g, "chi^-_{2,2}");
  CHECK(chi22.level == 2);
  CHECK(chi22.sig.n2 == m2 + m3 + m4);
  CHECK(chi22.sig.n4 == m3);
  const auto& bottom = node_named(g, "chi^+_0");
  CHECK(bottom.level == 20);
  CHECK(bottom.sig.n1 == m2);
  CHECK(bottom.sig.n2 == m1);
}

TEST_CASE("sign-flipped entries keep the printed label order") {
  // The entries whose c-sign marker is flipped in the table pair their
  // labels by name side, not by the sign of c; the generated graph is the
  // arbiter of that convention.
  const MultipletGraph g = named_graph();
  const auto& n95 = node_named(g, "chi^-_{9,5}");
  CHECK(n95.level == 9);
  CHECK(n95.sig.n1 == m1);
  CHECK(n95.sig.n2 == m1 + m2 * Rational(3) + m3 * Rational(2) + m4);
  CHECK(n95.sig.c == m2 + m3 * Rational(1, 2)); // generically positive on the minus side
  CHECK(n95.sig.c.sign_class() == SignClass::GenericPositive);
  CHECK(n95.sig.side == Side::Plus);
  CHECK(n95.sig.n4 == m3);

  const auto& n72 = node_named(g, "chi^-_{7,2}");
  CHECK(n72.level == 7);
  CHECK(n72.sig.n1 == m2);
  CHECK(n72.sig.c == m3 * Rational(1, 2));

  // exactly 7 minus-named and 7 plus-named nodes have c-sign opposite to
  // their name side
  int flipped = 0;
  for (const auto& n : g.nodes) {
    const bool minus_name = n.name->rfind("chi^-", 0) == 0;
    if (minus_name != (n.sig.side == Side::Minus))
      ++flipped;
  }
  CHECK(flipped == 14);
}

TEST_CASE("a perturbed fixture fails the match and is reported") {
  MultipletGraph g = fx().graph;
  auto fixtures = load_fixtures(F4V_FIXTURES);
  fixtures[5].magnitude += m1; // corrupt chi_{3,1}
  const auto match = match_fixtures(g, fixtures);
  CHECK(!match.all_ok());
  CHECK(match.matched_count == 94);
  bool named = false;
  for (const auto& p : match.problems)
    named = named || p.find("chi^-_{3,1}") != std::string::npos;
  CHECK(named);
}

TEST_CASE("concrete generation matches the evaluated symbolic graph") {
  const auto& f = fx();
  for (const std::array<long long, 4> labels : {std::array<long long, 4>{1, 1, 1, 1},
                                                std::array<long long, 4>{2, 1, 3, 1}}) {
    const MultipletGraph conc = generate_multiplet(f.rs, f.par, labels);
    const MultipletGraph eval = evaluate_at(f.graph, labels);
    CHECK(conc.nodes.size() == 96);
    CHECK(eval.nodes.size() == 96);
    std::map<std::array<LinForm, 4>, int> conc_ids;
    std::set<std::array<LinForm, 4>> a, b;
    for (const auto& n : conc.nodes) {
      a.insert(n.weight.labels);
      conc_ids.emplace(n.weight.labels, n.id);
      CHECK(n.weight.labels[0].is_constant());
    }
    for (const auto& n : eval.nodes)
      b.insert(n.weight.labels);
    CHECK(a == b);
    std::set<std::tuple<int, int, std::vector<int>>> ce, ee;
    for (const auto& e : conc.edges)
      ce.insert({e.src, e.dst, e.root.coords});
    for (const auto& e : eval.edges)
      ee.insert({conc_ids.at(eval.nodes[static_cast<size_t>(e.src)].weight.labels),
                 conc_ids.at(eval.nodes[static_cast<size_t>(e.dst)].weight.labels),
                 e.root.coords});
    CHECK(ce == ee);
    // levels agree through the identification
    for (const auto& n : eval.nodes)
      CHECK(conc.nodes[static_cast<size_t>(conc_ids.at(n.weight.labels))].level == n.level);
  }
}

TEST_CASE("conformal weights at unit labels") {
  MultipletGraph g = named_graph();
  const MultipletGraph eval = evaluate_at(g, {1, 1, 1, 1});
  const auto& top = node_named(eval, "chi^-_0");
  const auto& bottom = node_named(eval, "chi^+_0");
  CHECK(top.sig.d() == LinForm(Rational(0)));
  CHECK(bottom.sig.d() == LinForm(Rational(7)));
  CHECK(bottom.level == 20);
  // every noncompact parameter of the bottom weight is negative
  const auto ds = discrete_series_check(fx().rs, fx().par, bottom.weight);
  CHECK(ds == true);
}

TEST_CASE("generation and exports are deterministic") {
  const auto& f = fx();
  const MultipletGraph g1 = generate_multiplet(f.rs, f.par);
  const MultipletGraph g2 = generate_multiplet(positive_roots(build_f4()), f4_max_parabolic());
  CHECK(multiplet_to_json(g1).dump() == multiplet_to_json(g2).dump());
  CHECK(multiplet_to_dot(g1) == multiplet_to_dot(g2));
  CHECK(multiplet_to_text(g1) == multiplet_to_text(g2));
}

TEST_CASE("node cap aborts a runaway closure") {
  const auto& f = fx();
  GenerateOptions opt;
  opt.node_cap = 10;
  CHECK_THROWS_AS(generate_multiplet(f.rs, f.par, opt), InvariantError);
}

TEST_CASE("concrete labels must be positive") {
  const auto& f = fx();
  CHECK_THROWS_AS(generate_multiplet(f.rs, f.par, {0, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_at(f.graph, {1, -1, 1, 1}), std::invalid_argument);
}

TEST_CASE("multiplet json export shape") {
  MultipletGraph g = named_graph();
  const auto j = multiplet_to_json(g);
  CHECK(j["params"] == "symbolic");
  CHECK(j["nodes"].size() == 96);
  CHECK(j["edges"].size() == 370);
  CHECK(j["diagram_edges"].size() == 160);
  const auto& n0 = j["nodes"][0];
  CHECK(n0["id"] == 0);
  CHECK(n0["name"] == "chi^-_0");
  CHECK(n0["labels"] == nlohmann::json::array({"m1", "m2", "m3", "m4"}));
  CHECK(n0["signature"]["c"] == "-m1-m2-m3-1/2*m4");
  CHECK(n0["signature"]["side"] == "-");
  CHECK(n0["d"] == "-m1-m2-m3-1/2*m4+7/2");
  const MultipletGraph eval = evaluate_at(g, {1, 1, 1, 1});
  const auto je = multiplet_to_json(eval);
  CHECK(je["params"] == nlohmann::json::array({1, 1, 1, 1}));
}

TEST_CASE("dot export lists all nodes and diagram arrows") {
  MultipletGraph g = named_graph();
  const std::string dot = multiplet_to_dot(g);
  CHECK(dot.find("digraph f4_multiplet") != std::string::npos);
  CHECK(dot.find("chi^-_0") != std::string::npos);
  CHECK(dot.find("chi^+_0") != std::string::npos);
  size_t arrows = 0, at = 0;
  while ((at = dot.find(" -> ", at)) != std::string::npos) {
    ++arrows;
    at += 4;
  }
  CHECK(arrows == 160);
}

TEST_CASE("ks pairing rejects a broken node set") {
  MultipletGraph g = fx().graph;
  g.nodes.resize(95); // drop the last discovered node: its partner goes missing
  CHECK_THROWS_AS(ks_pairing(g), InvariantError);
}

TEST_CASE("fixture parser rejects malformed tables") {
  const auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_fixtures(in);
  };
  CHECK(parse("# only comments\n").empty());
  CHECK(parse("3,1 mp m1 m2 m3 m4\n").size() == 1);
  CHECK_THROWS_AS(parse("3,1 mp m1 m2 m3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("3,1 xx m1 m2 m3 m4\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("a,b mp m1 m2 m3 m4\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("3,1 mp m1 m2 m3 m4 extra\n"), std::invalid_argument);
  CHECK_THROWS_AS(load_fixtures("/nonexistent/path"), std::invalid_argument);
}

TEST_CASE("discrete series candidates are exactly the bottom of the diagram") {
  const MultipletGraph g = named_graph();
  const auto& f = fx();
  CHECK(discrete_series_check(f.rs, f.par, node_named(g, "chi^+_0").weight) == true);
  CHECK(discrete_series_check(f.rs, f.par, node_named(g, "chi^-_0").weight) == false);
  CHECK(discrete_series_check(f.rs, f.par, node_named(g, "chi^-_{10,1}").weight) == false);
  CHECK(discrete_series_check(f.rs, f.par, node_named(g, "chi^+_{10,1}").weight) == false);
}

TEST_CASE("every node's parameter multiset is a signed permutation of the top's") {
  const auto& f = fx();
  std::map<LinForm, int> reference;
  for (const auto& beta : f.rs.positive())
    ++reference[hc_param(f.rs, top_weight(), beta)];
  for (const auto& n : f.graph.nodes) {
    std::map<LinForm, int> m;
    for (const auto& beta : f.rs.positive()) {
      LinForm p = hc_param(f.rs, n.weight, beta);
      if (p.sign_class() == SignClass::GenericNegative)
        p = -p;
      ++m[p];
    }
    CHECK(m == reference);
  }
}
