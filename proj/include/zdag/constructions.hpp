#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zdag/graph.hpp"
#include "zdag/labeling.hpp"
#include "zdag/search.hpp"

namespace zdag {

/// Construction families. T* families come with a prescribed labeling
/// (or a search recipe); NX* families are refuted by a twin pair.
///
///   T4    m K2 + n K1          (m copies of zn(9) joined to n of zn(4))
///   T7    n K2 + comp(P3)      (valid at m=1; m>1 has twins)
///   T8    prism over the T4 base
///   T9    zn(6) x zn(2m), P3 x K_{1,m-1}
///   T10   zn(m^2) x zn(9), prism over K_{m-1}
///   T11   zn(6) x zn(m^2), P3 x K_{m-1}
///   T12   zn(9) x zn(3m), K_{2,m-1} x K2
///   NX21  zn(2m) + zn(4)
///   NX2   zn(2m) + G, G picked by n from {zn(6), zn(9), comp zn(6), comp zn(9)}
///   NX3   zn(3m) + G, same menu
///   NX5   m*zn(6) + n*zn(4)
///   NX6   m*zn(6) + n*zn(9)
///   NXCOR m*zn(6) + comp(zn(9))
enum class Family { T4, T7, T8, T9, T10, T11, T12, NX21, NX2, NX3, NX5, NX6, NXCOR };

std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);

struct FamilyParams {
  Family family = Family::T4;
  std::int64_t m = 1;
  std::int64_t n = 1;  ///< NX2/NX3: selects G from the menu (1..4)
};

/// Throws UsageError quoting the family's parameter class when the
/// params fall outside it.
void validate_params(const FamilyParams& p);

enum class Verdict {
  VerifiedDAML,       ///< labeling checks out; expected weights (if any) match
  FormulaMismatch,    ///< computed weights differ from the closed form
  LabelingCollision,  ///< the prescribed labeling has equal weights
  TwinObstruction,    ///< no labeling can work
  NoLabelingFound,    ///< search exhausted without a solution
  BudgetExceeded,     ///< search ran out of budget; undecided
};

std::string to_string(Verdict v);

struct ConstructionResult {
  Family family = Family::T4;
  std::int64_t m = 1;
  std::int64_t n = 1;
  Graph graph;
  std::optional<Labeling> labeling;
  std::optional<std::vector<std::int64_t>> expected_weights;
  Verdict verdict = Verdict::VerifiedDAML;
  std::optional<WeightProfile> profile;        ///< when a labeling is present
  std::optional<TwinPair> twin;                ///< TwinObstruction
  std::vector<std::pair<int, int>> collisions; ///< LabelingCollision
  std::string detail;

  nlohmann::json to_json() const;
};

ConstructionResult build_t4(std::int64_t m, std::int64_t n);
ConstructionResult build_t7(std::int64_t m, std::int64_t n);
ConstructionResult build_t8(std::int64_t m);
ConstructionResult build_t9(std::int64_t m);
ConstructionResult build_t10(std::int64_t m, const SearchBudget& budget = {});
ConstructionResult build_t11(std::int64_t m);
ConstructionResult build_t12(std::int64_t m);
ConstructionResult build_nonexistence(Family family, std::int64_t m,
                                      std::int64_t n);

/// Dispatch on the family enum. budget applies to the search-based
/// instances (T10 at any order beyond exhaustive reach).
ConstructionResult build_family(const FamilyParams& p,
                                const SearchBudget& budget = {});

bool is_prime(std::int64_t m);

}  // namespace zdag
