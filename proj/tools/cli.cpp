#include "covariant/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "covariant/builtin_groups.hpp"
#include "covariant/characters.hpp"
#include "covariant/errors.hpp"
#include "covariant/group_io.hpp"
#include "covariant/report.hpp"
#include "covariant/verifier.hpp"

namespace covariant {
namespace {

using Json = nlohmann::ordered_json;

/// A failure that maps to exit code 2, already phrased for the user.
struct UsageError {
  std::string message;
};

struct Options {
  std::string group;
  std::vector<std::string> groups;
  std::string table;
  double u = 1.0;
  std::optional<double> v;
  bool probability = false;
  std::size_t trials = 100;
  std::size_t axb_trials = 10;
  std::uint64_t seed = 7;
  std::optional<double> tol;
  std::vector<double> omegas;
  std::size_t nodes = 128;
  double a_min = 0.125;
  double a_max = 8.0;
  double b_bound = 16.0;
  std::string out;
  std::string format = "text";
  bool strict = false;
  unsigned threads = 0;
};

bool looks_like_path(const std::string& s) {
  return s.ends_with(".json") || s.find('/') != std::string::npos || std::filesystem::exists(s);
}

GroupPtr load_from(const std::string& flag, const std::string& value, bool strict) {
  const auto check = strict ? AssociativityCheck::strict : AssociativityCheck::automatic;
  try {
    if (flag == "--table" || looks_like_path(value)) {
      return std::make_shared<const FiniteGroup>(load_group_file(value, check));
    }
    FiniteGroup g = parse_group_selector(value);
    if (strict) g.check_associativity_exhaustive();
    return std::make_shared<const FiniteGroup>(std::move(g));
  } catch (const Error& e) {
    throw UsageError{flag + ": " + e.what()};
  }
}

GroupPtr resolve_group(const Options& o) {
  if (!o.table.empty() && !o.group.empty()) throw UsageError{"--table: give either --group or --table, not both"};
  if (!o.table.empty()) return load_from("--table", o.table, o.strict);
  if (!o.group.empty()) return load_from("--group", o.group, o.strict);
  throw UsageError{"--group: a group selector or --table path is required"};
}

WeightChoice resolve_weights(const Options& o) {
  if (o.probability && o.v) throw UsageError{"--v: cannot be combined with --probability"};
  WeightChoice w;
  w.u = o.u;
  w.v = o.v.value_or(1.0);
  w.probability = o.probability;
  try {
    weil_normalize(w.u, 1.0);
  } catch (const Error& e) {
    throw UsageError{std::string("--u: ") + e.what()};
  }
  try {
    weil_normalize(1.0, w.v);
  } catch (const Error& e) {
    throw UsageError{std::string("--v: ") + e.what()};
  }
  return w;
}

SuiteOptions suite_options(const Options& o) {
  SuiteOptions s;
  s.seed = o.seed;
  s.trials = o.trials;
  s.tolerance = o.tol.value_or(kFiniteTolerance);
  s.weights = resolve_weights(o);
  s.threads = o.threads;
  return s;
}

AxbSuiteOptions axb_options(const Options& o, std::size_t trials) {
  AxbSuiteOptions a;
  if (!o.omegas.empty()) a.omegas = o.omegas;
  a.grid.a_min = o.a_min;
  a.grid.a_max = o.a_max;
  a.grid.b_bound = o.b_bound;
  a.grid.a_nodes = a.grid.b_nodes = o.nodes;
  a.trials = trials;
  a.seed = o.seed;
  a.tolerance = o.tol.value_or(kContinuousTolerance);
  return a;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw UsageError{"--out: cannot write " + o.out};
  file << text;
  if (!file) throw UsageError{"--out: write failed for " + o.out};
}

std::string render(const Options& o, const std::vector<CaseReport>& cases, const ReportHeader& header) {
  return o.format == "json" ? report_json(cases, header) : report_text(cases, header);
}

int status_of(const std::vector<CaseReport>& cases) { return all_passed(cases) ? kExitPass : kExitTheoremFailure; }

// ---------------------------------------------------------------------------

int cmd_groups(const Options& o, std::ostream& out) {
  std::string text;
  if (o.format == "json") {
    Json doc;
    doc["families"] = builtin_catalogue();
    doc["zoo"] = standard_zoo();
    text = doc.dump(2) + "\n";
  } else {
    for (const auto& line : builtin_catalogue()) text += line + "\n";
    text += "zoo:";
    for (const auto& name : standard_zoo()) text += " " + name;
    text += "\n";
  }
  emit(o, text, out);
  return kExitPass;
}

std::string exponent_map(const Character& xi) {
  const FiniteGroup& g = xi.domain().group();
  std::string s;
  for (std::size_t i = 0; i < xi.domain().size(); ++i) {
    if (i) s += ", ";
    s += g.label(xi.domain().members()[i]) + "->" + std::to_string(xi.exponents()[i]);
  }
  return s;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const GroupPtr g = resolve_group(o);
  std::vector<Subgroup> normals;
  try {
    normals = enumerate_normal_subgroups(g);
  } catch (const Error& e) {
    throw UsageError{std::string("--group: ") + e.what()};
  }
  std::ostringstream text;
  Json doc;
  doc["group"] = g->name();
  doc["order"] = g->order();
  Json list = Json::array();
  text << g->name() << " (order " << g->order() << "): " << normals.size() << " normal subgroups\n";
  for (const Subgroup& n : normals) {
    const CosetDecomposition d = coset_decomposition(n);
    std::vector<Character> chars;
    try {
      chars = enumerate_characters(n);
    } catch (const Error& e) {
      throw UsageError{std::string("--group: ") + e.what()};
    }
    Json entry;
    entry["members"] = std::vector<Element>(n.members().begin(), n.members().end());
    entry["size"] = n.size();
    entry["representatives"] = d.representatives;
    text << "N = {";
    for (std::size_t i = 0; i < n.size(); ++i) text << (i ? ", " : "") << g->label(n.members()[i]);
    text << "}  size " << n.size() << ", " << d.coset_count() << " cosets, representatives";
    for (Element r : d.representatives) text << " " << g->label(r);
    text << "\n  " << chars.size() << " characters\n";
    Json cj = Json::array();
    for (const Character& xi : chars) {
      Json exps = Json::object();
      for (std::size_t i = 0; i < n.size(); ++i) exps[std::to_string(n.members()[i])] = xi.exponents()[i];
      cj.push_back({{"modulus", xi.modulus()}, {"exponents", std::move(exps)}});
      text << "    mod " << xi.modulus() << ": " << exponent_map(xi) << "\n";
    }
    entry["characters"] = std::move(cj);
    list.push_back(std::move(entry));
  }
  doc["normal_subgroups"] = std::move(list);
  emit(o, o.format == "json" ? doc.dump(2) + "\n" : text.str(), out);
  return kExitPass;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const GroupPtr g = resolve_group(o);
  const SuiteOptions s = suite_options(o);
  std::vector<CaseReport> cases;
  try {
    cases = run_suite(g, s);
  } catch (const TooLarge& e) {
    throw UsageError{std::string("--group: ") + e.what()};
  }
  ReportHeader h;
  h.seed = s.seed;
  h.trials = s.trials;
  h.weights = s.weights;
  emit(o, render(o, cases, h), out);
  return status_of(cases);
}

std::vector<CaseReport> run_axb(const AxbSuiteOptions& a) {
  try {
    return run_axb_suite(a);
  } catch (const GridTooCoarse& e) {
    throw UsageError{std::string("--nodes: ") + e.what()};
  } catch (const Error& e) {
    throw UsageError{std::string("--omega: ") + e.what()};
  }
}

int cmd_verify_axb(const Options& o, std::ostream& out) {
  const AxbSuiteOptions a = axb_options(o, o.axb_trials);
  const auto cases = run_axb(a);
  ReportHeader h;
  h.seed = a.seed;
  h.trials = a.trials;
  h.grid = a.grid;
  emit(o, render(o, cases, h), out);
  return status_of(cases);
}

int cmd_report(const Options& o, std::ostream& out) {
  std::vector<std::string> selectors = o.groups;
  if (selectors.empty()) selectors = standard_zoo();
  const SuiteOptions s = suite_options(o);
  std::vector<CaseReport> cases;
  for (const std::string& sel : selectors) {
    const GroupPtr g = load_from("--group", sel, o.strict);
    try {
      auto part = run_suite(g, s);
      cases.insert(cases.end(), part.begin(), part.end());
    } catch (const TooLarge& e) {
      throw UsageError{"--group: " + sel + ": " + e.what()};
    }
  }
  const AxbSuiteOptions a = axb_options(o, o.axb_trials);
  auto continuous = run_axb(a);
  cases.insert(cases.end(), continuous.begin(), continuous.end());
  std::sort(cases.begin(), cases.end(), [](const CaseReport& x, const CaseReport& y) { return x.key < y.key; });
  ReportHeader h;
  h.seed = s.seed;
  h.trials = s.trials;
  h.weights = s.weights;
  h.grid = a.grid;
  emit(o, render(o, cases, h), out);
  return status_of(cases);
}

void add_group_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--group", o.group, "Builtin selector (S3, Z2xZ2, H3, ...) or Cayley-table path");
  cmd->add_option("--table", o.table, "Cayley-table JSON file");
  cmd->add_flag("--strict", o.strict, "Check associativity exhaustively at any order");
}

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out, "Write the output here instead of stdout");
  cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
}

void add_suite_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--u", o.u, "Weight of each group element under lambda_G");
  cmd->add_option("--v", o.v, "Weight of each subgroup element under lambda_N");
  cmd->add_flag("--probability", o.probability, "Use v = 1/|N| for every subgroup");
  cmd->add_option("--seed", o.seed, "PRNG seed");
  cmd->add_option("--tol", o.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--threads", o.threads, "Worker threads (0 = hardware)");
}

void add_axb_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--omega", o.omegas, "Character frequency; repeatable")->allow_extra_args(false);
  cmd->add_option("--nodes", o.nodes, "Quadrature nodes per axis")->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
  cmd->add_option("--a-min", o.a_min, "Lower dilation bound of the box")->check(CLI::PositiveNumber);
  cmd->add_option("--a-max", o.a_max, "Upper dilation bound of the box")->check(CLI::PositiveNumber);
  cmd->add_option("--b-bound", o.b_bound, "Translation half-width of the box")->check(CLI::PositiveNumber);
}

std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n') c = ' ';
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Check covariant-function identities on finite groups and the ax+b group", "covariant"};
  app.require_subcommand(1, 1);

  auto* groups = app.add_subcommand("groups", "List builtin group families");
  add_output_flags(groups, o);

  auto* enumerate = app.add_subcommand("enumerate", "Normal subgroups, characters and cosets of a group");
  add_group_flags(enumerate, o);
  add_output_flags(enumerate, o);

  auto* verify = app.add_subcommand("verify", "Run the theorem suite on one finite group");
  add_group_flags(verify, o);
  add_output_flags(verify, o);
  add_suite_flags(verify, o);
  verify->add_option("--trials", o.trials, "Random test functions per check")->check(CLI::PositiveNumber);

  auto* axb = app.add_subcommand("verify-axb", "Run the quadrature checks on the ax+b group");
  add_output_flags(axb, o);
  add_axb_flags(axb, o);
  axb->add_option("--seed", o.seed, "PRNG seed");
  axb->add_option("--tol", o.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  axb->add_option("--trials", o.axb_trials, "Random test functions per check")->check(CLI::PositiveNumber);

  auto* report = app.add_subcommand("report", "Finite suite over several groups plus the ax+b checks");
  report->add_option("--group", o.groups, "Group selector or table path; repeatable (default: the zoo)");
  report->add_flag("--strict", o.strict, "Check associativity exhaustively at any order");
  add_output_flags(report, o);
  add_suite_flags(report, o);
  add_axb_flags(report, o);
  report->add_option("--trials", o.trials, "Random test functions per finite check")->check(CLI::PositiveNumber);
  report->add_option("--axb-trials", o.axb_trials, "Random test functions per ax+b check")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitPass;
    }
    err << "error: " << one_line(e.what()) << "\n";
    return kExitUsage;
  }

  try {
    if (*groups) return cmd_groups(o, out);
    if (*enumerate) return cmd_enumerate(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*axb) return cmd_verify_axb(o, out);
    return cmd_report(o, out);
  } catch (const UsageError& e) {
    err << "error: " << one_line(e.message) << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kExitUsage;
  }
}

}  // namespace covariant
