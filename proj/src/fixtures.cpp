#include "f4verma/fixtures.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace f4verma {

std::vector<FixtureEntry> parse_fixtures(std::istream& in) {
  std::vector<FixtureEntry> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#')
      continue;
    std::istringstream fields(line);
    FixtureEntry e;
    std::string marker, a, b, mag, g;
    if (!(fields >> e.name >> marker >> a >> b >> mag >> g))
      throw std::invalid_argument("fixtures: malformed line " + std::to_string(line_no));
    std::string trailing;
    if (fields >> trailing)
      throw std::invalid_argument("fixtures: trailing fields on line " + std::to_string(line_no));
    if (marker == "mp")
      e.c_negative_on_minus = true;
    else if (marker == "pm")
      e.c_negative_on_minus = false;
    else
      throw std::invalid_argument("fixtures: bad marker '" + marker + "' on line " +
                                  std::to_string(line_no));
    const auto comma = e.name.find(',');
    try {
      e.k = std::stoi(e.name.substr(0, comma));
      if (comma != std::string::npos)
        e.l = std::stoi(e.name.substr(comma + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("fixtures: bad name '" + e.name + "' on line " +
                                  std::to_string(line_no));
    }
    e.n1 = LinForm::parse(a);
    e.n2 = LinForm::parse(b);
    e.magnitude = LinForm::parse(mag);
    e.n4 = LinForm::parse(g);
    e.line_no = line_no;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<FixtureEntry> load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("fixtures: cannot open " + path);
  return parse_fixtures(in);
}

namespace {

std::string table_name(const FixtureEntry& e, Side side) {
  std::string n = std::string("chi^") + side_str(side) + "_";
  if (e.l)
    n += "{" + std::to_string(e.k) + "," + std::to_string(*e.l) + "}";
  else
    n += std::to_string(e.k);
  return n;
}

} // namespace

FixtureMatch match_fixtures(MultipletGraph& g, const std::vector<FixtureEntry>& fixtures) {
  FixtureMatch result;
  std::map<std::array<LinForm, 4>, int> by_sig;
  for (const auto& n : g.nodes)
    by_sig.emplace(std::array<LinForm, 4>{n.sig.n1, n.sig.n2, n.sig.c, n.sig.n4}, n.id);

  for (auto& n : g.nodes)
    n.name.reset();

  for (const auto& f : fixtures) {
    const LinForm c_minus = f.c_negative_on_minus ? -f.magnitude : f.magnitude;
    for (const Side side : {Side::Minus, Side::Plus}) {
      FixtureMatch::Entry entry;
      entry.fixture_name = f.name;
      entry.side = side;
      entry.node_name = table_name(f, side);
      entry.expected_level = side == Side::Minus ? f.k : 20 - f.k;
      // The published table lists the minus-side order (n1, n2); the plus
      // side applies the sl(3) flip and negates c.
      const LinForm& a = side == Side::Minus ? f.n1 : f.n2;
      const LinForm& b = side == Side::Minus ? f.n2 : f.n1;
      const LinForm c = side == Side::Minus ? c_minus : -c_minus;
      entry.rendered =
          "{" + a.str() + ", " + b.str() + ", " + c.str() + ", " + f.n4.str() + "}";
      const auto it = by_sig.find({a, b, c, f.n4});
      if (it == by_sig.end()) {
        result.problems.push_back("fixture " + entry.node_name +
                                  " has no matching generated signature: " + entry.rendered);
      } else {
        auto& node = g.nodes[static_cast<size_t>(it->second)];
        if (node.name) {
          result.problems.push_back("fixture " + entry.node_name + " collides with " +
                                    *node.name + " on node " + std::to_string(node.id));
        } else {
          node.name = entry.node_name;
          entry.node_id = node.id;
          entry.matched = true;
          entry.level_ok = node.level == entry.expected_level;
          if (!entry.level_ok)
            result.problems.push_back("fixture " + entry.node_name + " matched node at level " +
                                      std::to_string(node.level) + ", expected level " +
                                      std::to_string(entry.expected_level));
          ++result.matched_count;
        }
      }
      result.entries.push_back(std::move(entry));
    }
  }

  bool levels_ok = true;
  for (const auto& e : result.entries)
    levels_ok = levels_ok && e.matched && e.level_ok;
  size_t named = 0;
  for (const auto& n : g.nodes) {
    if (n.name)
      ++named;
    else
      result.problems.push_back("generated signature has no fixture: " + render_signature(n.sig) +
                                " (node " + std::to_string(n.id) + ", level " +
                                std::to_string(n.level) + ")");
  }
  result.bijection = levels_ok && named == g.nodes.size() &&
                     result.matched_count == static_cast<int>(g.nodes.size());
  return result;
}

} // namespace f4verma
