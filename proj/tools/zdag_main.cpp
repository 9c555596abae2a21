#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zdag/constructions.hpp"
#include "zdag/errors.hpp"
#include "zdag/family_expr.hpp"
#include "zdag/graph.hpp"
#include "zdag/labeling.hpp"
#include "zdag/ops.hpp"
#include "zdag/rings.hpp"
#include "zdag/search.hpp"
#include "zdag/suite.hpp"

namespace {

constexpr int kExitSuccess = 0;      // DAML established / command succeeded
constexpr int kExitRefuted = 1;      // non-existence established
constexpr int kExitUndecided = 2;    // budget exceeded
constexpr int kExitUsage = 64;       // bad flags, parse or parameter errors
constexpr int kExitInternal = 70;

std::vector<std::int64_t> parse_csv(const std::string& text,
                                    const std::string& what) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw zdag::UsageError("bad " + what + " entry \"" + item +
                             "\": expected a comma-separated integer list");
    }
    pos = comma + 1;
  }
  return out;
}

void print_graph_summary(const zdag::Graph& g, const std::string& expr) {
  std::cout << "expression: " << expr << "\n";
  std::cout << "order: " << g.order() << "\n";
  std::cout << "size: " << g.size() << "\n";
  std::cout << "degrees:";
  for (int d : g.degree_sequence()) std::cout << " " << d;
  std::cout << "\n";
  std::cout << "class: " << zdag::structural_class(g).describe(g) << "\n";
  if (const auto twin = zdag::find_twin_pair(g)) {
    std::cout << "twins: (" << twin->u << ", " << twin->v << ") \""
              << g.name(twin->u) << "\" and \"" << g.name(twin->v)
              << "\" share a neighborhood; no distance antimagic labeling "
                 "exists\n";
  } else {
    std::cout << "twins: none\n";
  }
}

int cmd_build(const std::string& expr_text, const std::string& format) {
  const zdag::ExprPtr expr = zdag::parse(expr_text);
  const zdag::Graph g = zdag::evaluate(expr);
  if (format == "json") {
    std::cout << g.to_json().dump(2) << "\n";
  } else if (format == "dot") {
    std::cout << g.to_dot();
  } else {
    print_graph_summary(g, zdag::unparse(expr));
  }
  return kExitSuccess;
}

int cmd_verify(const std::string& expr_text, bool identity,
               const std::string& labels_csv, const std::string& format) {
  const zdag::Graph g = zdag::evaluate(zdag::parse(expr_text));
  zdag::Labeling f;
  if (identity) {
    f = zdag::identity_labeling(g);
  } else {
    for (std::int64_t l : parse_csv(labels_csv, "--labels")) {
      f.labels.push_back(static_cast<int>(l));
    }
  }
  if (static_cast<int>(f.labels.size()) != g.order()) {
    throw zdag::UsageError("got " + std::to_string(f.labels.size()) +
                           " labels for a graph of order " +
                           std::to_string(g.order()));
  }
  const zdag::DamlCheck check = zdag::verify_daml(g, f);
  if (format == "json") {
    nlohmann::json j = check.profile->to_json();
    j["daml"] = check.ok;
    if (!check.ok) j["reason"] = check.reason;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "order: " << g.order() << "\n";
    std::cout << "weights:";
    for (auto w : check.profile->weights) std::cout << " " << w;
    std::cout << "\n";
    std::cout << "distinct: " << (check.profile->distinct ? "yes" : "no")
              << "\n";
    if (!check.profile->collisions.empty()) {
      std::cout << "collisions:";
      for (auto [u, v] : check.profile->collisions) {
        std::cout << " (" << u << "," << v << ")";
      }
      std::cout << "\n";
    }
    if (check.profile->arithmetic) {
      std::cout << "arithmetic: a=" << check.profile->arithmetic->first
                << " d=" << check.profile->arithmetic->second << "\n";
    }
    std::cout << "daml: " << (check.ok ? "yes" : "no") << "\n";
    if (!check.ok) std::cout << "reason: " << check.reason << "\n";
  }
  return check.ok ? kExitSuccess : kExitRefuted;
}

int cmd_search(const std::string& expr_text, std::uint64_t max_nodes,
               double max_seconds, bool all, const std::string& target_csv) {
  const zdag::Graph g = zdag::evaluate(zdag::parse(expr_text));
  zdag::SearchBudget budget;
  budget.max_nodes = max_nodes;
  budget.max_seconds = max_seconds;
  budget.find_all = all;
  std::optional<std::vector<std::int64_t>> target;
  if (!target_csv.empty()) target = parse_csv(target_csv, "--target");
  const zdag::Certificate cert = zdag::search_daml(g, budget, target);
  std::cout << cert.to_json().dump(2) << "\n";
  switch (cert.kind) {
    case zdag::Certificate::Kind::DamlFound:
      return kExitSuccess;
    case zdag::Certificate::Kind::TwinObstruction:
    case zdag::Certificate::Kind::ExhaustedNoLabeling:
      return kExitRefuted;
    case zdag::Certificate::Kind::BudgetExceeded:
      return kExitUndecided;
  }
  return kExitInternal;
}

int cmd_theorem(const std::string& family_name, std::int64_t m, std::int64_t n,
                const std::string& format, std::uint64_t max_nodes,
                double max_seconds) {
  const auto family = zdag::family_from_string(family_name);
  if (!family) {
    throw zdag::UsageError(
        "unknown family \"" + family_name +
        "\"; expected one of t4 t7 t8 t9 t10 t11 t12 nx21 nx2 nx3 nx5 nx6 "
        "nxcor");
  }
  zdag::SearchBudget budget;
  budget.max_nodes = max_nodes;
  budget.max_seconds = max_seconds;
  const zdag::ConstructionResult res =
      zdag::build_family({*family, m, n}, budget);
  if (format == "json") {
    std::cout << res.to_json().dump(2) << "\n";
  } else {
    std::cout << "family: " << zdag::to_string(res.family) << " m=" << res.m
              << " n=" << res.n << "\n";
    std::cout << "order: " << res.graph.order() << "\n";
    std::cout << "verdict: " << zdag::to_string(res.verdict) << "\n";
    if (res.labeling) {
      std::cout << "labels:";
      for (int l : res.labeling->labels) std::cout << " " << l;
      std::cout << "\n";
    }
    if (res.profile) {
      std::cout << "weights:";
      for (auto w : res.profile->weights) std::cout << " " << w;
      std::cout << "\n";
    }
    if (res.expected_weights) {
      std::cout << "expected:";
      for (auto w : *res.expected_weights) std::cout << " " << w;
      std::cout << "\n";
    }
    if (res.twin) {
      std::cout << "twin: (" << res.twin->u << ", " << res.twin->v << ") \""
                << res.graph.name(res.twin->u) << "\" and \""
                << res.graph.name(res.twin->v) << "\"\n";
    }
    if (!res.collisions.empty()) {
      std::cout << "collisions:";
      for (auto [u, v] : res.collisions) std::cout << " (" << u << "," << v << ")";
      std::cout << "\n";
    }
    if (!res.detail.empty()) std::cout << "note: " << res.detail << "\n";
  }
  switch (res.verdict) {
    case zdag::Verdict::VerifiedDAML:
      return kExitSuccess;
    case zdag::Verdict::BudgetExceeded:
      return kExitUndecided;
    default:
      return kExitRefuted;
  }
}

int cmd_suite(int max_prime, const std::string& family,
              std::optional<std::int64_t> m_max, const std::string& m_csv) {
  zdag::SuiteOptions opts;
  opts.max_prime = max_prime;
  if (!family.empty()) opts.family = family;
  opts.m_max = m_max;
  if (!m_csv.empty()) opts.m_values = parse_csv(m_csv, "--m");
  const auto results = zdag::run_suite(opts, std::cout);
  return zdag::all_passed(results) ? kExitSuccess : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "zero-divisor graph toolkit: build graphs of Z_n and their compounds, "
      "verify and search distance antimagic labelings, and run the theorem "
      "families"};
  app.require_subcommand(1);

  std::string expr_text, format = "summary", labels_csv, target_csv, m_csv;
  std::string family_name, suite_family;
  bool identity = false, all = false;
  std::uint64_t max_nodes = zdag::SearchBudget{}.max_nodes;
  double max_seconds = zdag::SearchBudget{}.max_seconds;
  std::int64_t m = 1, n = 1;
  int max_prime = 97;
  std::int64_t m_max_value = -1;

  auto* build = app.add_subcommand("build", "parse an expression and emit the graph");
  build->add_option("expr", expr_text, "family expression, e.g. \"2*zn(9)+zn(4)\"")
      ->required();
  build->add_option("--format", format, "summary, json or dot")
      ->check(CLI::IsMember({"summary", "json", "dot"}));

  auto* verify = app.add_subcommand("verify", "check a labeling's weights");
  verify->add_option("expr", expr_text, "family expression")->required();
  verify->add_flag("--identity", identity, "use labels 1..n in vertex order");
  verify->add_option("--labels", labels_csv, "comma-separated labels");
  verify->add_option("--format", format, "summary or json")
      ->check(CLI::IsMember({"summary", "json"}));

  auto* search = app.add_subcommand("search", "backtracking search for a labeling");
  search->add_option("expr", expr_text, "family expression")->required();
  search->add_option("--max-nodes", max_nodes, "assignment budget");
  search->add_option("--max-seconds", max_seconds, "time budget");
  search->add_flag("--all", all, "count every solution");
  search->add_option("--target", target_csv, "required weight multiset, comma-separated");

  auto* theorem = app.add_subcommand("theorem", "run a construction family");
  theorem->add_option("family", family_name,
                      "t4 t7 t8 t9 t10 t11 t12 nx21 nx2 nx3 nx5 nx6 nxcor")
      ->required();
  theorem->add_option("--m", m, "family parameter m");
  theorem->add_option("--n", n,
                      "family parameter n (for nx2/nx3 it picks the join "
                      "partner: 1 zn(6), 2 zn(9), 3 comp(zn(6)), 4 comp(zn(9)))");
  theorem->add_option("--format", format, "summary or json")
      ->check(CLI::IsMember({"summary", "json"}));
  theorem->add_option("--max-nodes", max_nodes, "search budget (t10)");
  theorem->add_option("--max-seconds", max_seconds, "search time budget (t10)");

  auto* suite = app.add_subcommand("suite", "run the acceptance criteria");
  suite->add_option("--max-prime", max_prime, "cap for the prime sweeps");
  suite->add_option("--family", suite_family,
                    "restrict to one family (t4..t12, nx21..nxcor, figures, props)");
  suite->add_option("--m-max", m_max_value, "cap for the m sweeps");
  suite->add_option("--m", m_csv, "explicit m list for the chosen family");

  try {
    app.parse(argc, argv);
    if (build->parsed()) return cmd_build(expr_text, format);
    if (verify->parsed()) {
      if (identity == !labels_csv.empty()) {
        throw zdag::UsageError("pass exactly one of --identity or --labels");
      }
      return cmd_verify(expr_text, identity, labels_csv, format);
    }
    if (search->parsed()) {
      return cmd_search(expr_text, max_nodes, max_seconds, all, target_csv);
    }
    if (theorem->parsed()) {
      return cmd_theorem(family_name, m, n, format, max_nodes, max_seconds);
    }
    if (suite->parsed()) {
      return cmd_suite(max_prime, suite_family,
                       m_max_value >= 0 ? std::optional<std::int64_t>(m_max_value)
                                        : std::nullopt,
                       m_csv);
    }
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const zdag::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const zdag::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const zdag::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const zdag::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
