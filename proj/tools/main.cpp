#include "f4verma/error.hpp"
#include "f4verma/exports.hpp"
#include "f4verma/fixtures.hpp"
#include "f4verma/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace f4verma;

#ifndef F4V_DEFAULT_FIXTURES
#define F4V_DEFAULT_FIXTURES "data/signatures_f4.txt"
#endif

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kInternal = 3,
};

struct RunConfig {
  std::optional<std::array<long long, 4>> labels; // nullopt = symbolic
  std::string format = "text";
  std::string output;                             // empty = stdout
  std::string fixtures = F4V_DEFAULT_FIXTURES;
  std::vector<int> subsystem;
};

int write_output(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return kOk;
  }
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return kVerificationFailed;
  }
  return kOk;
}

RootSystem make_roots(const RunConfig& cfg) {
  RootSystem rs = positive_roots(build_f4());
  if (!cfg.subsystem.empty())
    rs = rs.subsystem(cfg.subsystem);
  return rs;
}

int cmd_roots(const RunConfig& cfg) {
  const RootSystem rs = make_roots(cfg);
  if (cfg.format == "json")
    return write_output(roots_to_json(rs).dump(2) + "\n", cfg.output);
  return write_output(roots_to_text(rs), cfg.output);
}

MultipletGraph make_multiplet(const RunConfig& cfg) {
  const RootSystem rs = positive_roots(build_f4());
  const ParabolicSpec par = f4_max_parabolic();
  MultipletGraph g = generate_multiplet(rs, par);
  try {
    const auto fixtures = load_fixtures(cfg.fixtures);
    match_fixtures(g, fixtures);
  } catch (const std::exception& e) {
    std::cerr << "warning: node names unavailable: " << e.what() << "\n";
  }
  if (cfg.labels)
    return evaluate_at(g, *cfg.labels);
  return g;
}

int cmd_multiplet(const RunConfig& cfg) {
  const MultipletGraph g = make_multiplet(cfg);
  if (cfg.format == "json")
    return write_output(multiplet_to_json(g).dump(2) + "\n", cfg.output);
  if (cfg.format == "dot")
    return write_output(multiplet_to_dot(g), cfg.output);
  return write_output(multiplet_to_text(g), cfg.output);
}

int cmd_verify(const RunConfig& cfg) {
  const VerificationReport report = run_verification(cfg.fixtures, cfg.labels);
  std::string text;
  if (cfg.format == "json") {
    nlohmann::json j;
    j["pass"] = report.all_pass();
    j["summary"] = report.summary();
    j["checks"] = nlohmann::json::array();
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& c : report.checks) {
      j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      if (!c.pass)
        failures.push_back({{"name", c.name}, {"detail", c.detail}});
    }
    j["failures"] = std::move(failures);
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream out;
    for (const auto& c : report.checks)
      out << (c.pass ? "[ ok ] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
    out << (report.all_pass() ? "PASS" : "FAIL") << ": " << report.summary() << "\n";
    text = out.str();
  }
  const int io = write_output(text, cfg.output);
  if (io != kOk)
    return io;
  return report.all_pass() ? kOk : kVerificationFailed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact F4 root-system and Verma-module multiplet engine"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<long long> labels_in;
  bool symbolic = false;
  std::string what = "multiplet";

  const auto add_labels = [&](CLI::App* cmd) {
    cmd->add_option("--labels", labels_in, "four positive integer Dynkin labels")
        ->expected(4)
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--symbolic", symbolic, "run with symbolic labels m1..m4 (default)");
  };
  const auto add_common = [&](CLI::App* cmd, std::vector<std::string> formats) {
    std::string help = "output format:";
    for (const auto& f : formats)
      help += " " + f;
    cmd->add_option("--format", cfg.format, help)->check(CLI::IsMember(std::move(formats)));
    cmd->add_option("-o,--output", cfg.output, "write to a file instead of stdout");
  };

  auto* roots = app.add_subcommand("roots", "positive roots with norms and epsilon coordinates");
  add_common(roots, {"text", "json"});
  roots->add_option("--subsystem", cfg.subsystem, "comma-separated simple-root indices")
      ->delimiter(',')
      ->check(CLI::Range(1, 4));

  auto* multiplet = app.add_subcommand("multiplet", "generate the 96-member multiplet graph");
  add_labels(multiplet);
  add_common(multiplet, {"text", "json", "dot"});

  auto* verify = app.add_subcommand("verify", "run the verification battery");
  add_labels(verify);
  add_common(verify, {"text", "json"});
  verify->add_option("--fixtures", cfg.fixtures, "signature fixture table");

  auto* exp = app.add_subcommand("export", "write roots or the multiplet to a file");
  add_labels(exp);
  add_common(exp, {"text", "json", "dot"});
  exp->add_option("--what", what, "roots|multiplet")
      ->check(CLI::IsMember(std::vector<std::string>{"roots", "multiplet"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (!labels_in.empty()) {
    if (symbolic) {
      std::cerr << "error: --labels and --symbolic are mutually exclusive\n";
      return kUsage;
    }
    cfg.labels = std::array<long long, 4>{labels_in[0], labels_in[1], labels_in[2], labels_in[3]};
  }
  if (exp->parsed() && cfg.output.empty()) {
    std::cerr << "error: export requires -o PATH\n";
    return kUsage;
  }
  if (exp->parsed() && what == "roots" && cfg.format == "dot") {
    std::cerr << "error: roots have no dot form\n";
    return kUsage;
  }

  try {
    if (roots->parsed())
      return cmd_roots(cfg);
    if (multiplet->parsed())
      return cmd_multiplet(cfg);
    if (verify->parsed())
      return cmd_verify(cfg);
    if (exp->parsed())
      return what == "roots" ? cmd_roots(cfg) : cmd_multiplet(cfg);
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
