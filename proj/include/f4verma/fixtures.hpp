#pragma once

#include "f4verma/multiplet.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace f4verma {

/// One minus-side signature from the published table; the plus-side
/// variant is obtained by swapping (n1, n2) and negating c.
struct FixtureEntry {
  std::string name;    // "0", "1", "2,1", ...
  int k = 0;           // primary index
  std::optional<int> l;
  bool c_negative_on_minus = true; // marker mp; pm entries flip the c sign
  LinForm n1, n2, magnitude, n4;   // magnitude = |c|
  int line_no = 0;
};

std::vector<FixtureEntry> parse_fixtures(std::istream& in);
std::vector<FixtureEntry> load_fixtures(const std::string& path);

struct FixtureMatch {
  struct Entry {
    std::string fixture_name; // "9,5"
    Side side = Side::Minus;  // which variant of the table line
    std::string node_name;    // assigned name, e.g. "chi^+_{9,5}"
    std::string rendered;     // the signature text this variant expects
    int node_id = -1;
    int expected_level = -1;  // k on the minus side, 20-k on the plus side
    bool matched = false;
    bool level_ok = false;
  };
  std::vector<Entry> entries;
  int matched_count = 0;
  bool bijection = false; // every node named exactly once, all levels right
  std::vector<std::string> problems;

  bool all_ok() const { return bijection && problems.empty(); }
};

/// Matches the 2x48 table variants against the generated signatures and
/// assigns the table names to the graph nodes. Any unmatched entry or any
/// node left unnamed is reported with its rendered signature.
FixtureMatch match_fixtures(MultipletGraph& g, const std::vector<FixtureEntry>& fixtures);

} // namespace f4verma
