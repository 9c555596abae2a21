#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zdag/family_expr.hpp"
#include "zdag/graph.hpp"

namespace zdag {

/// Options narrowing the acceptance matrix. Defaults run the full
/// ranges; the flags exist so a narrowed rerun stays quick.
struct SuiteOptions {
  int max_prime = 97;                  ///< caps the prime sweeps (t9, t11, t12)
  std::optional<std::string> family;   ///< run only criteria touching this family
  std::optional<std::int64_t> m_max;   ///< caps the m sweeps (t4, t8)
  std::vector<std::int64_t> m_values;  ///< explicit m list for the chosen family
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
};

/// Runs the acceptance criteria (all ten, or the subset selected by
/// opts.family), printing one line per criterion to out.
std::vector<CriterionResult> run_suite(const SuiteOptions& opts,
                                       std::ostream& out);

bool all_passed(const std::vector<CriterionResult>& results);

/// Ground truth by brute force: tries every bijection, summing neighbor
/// labels directly. Independent of the labeling and search modules.
bool naive_daml_exists(const Graph& g);

Graph random_graph(std::mt19937_64& rng, int min_order, int max_order);
ExprPtr random_expr(std::mt19937_64& rng, int depth);

}  // namespace zdag
