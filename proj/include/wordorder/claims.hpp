#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordorder/cost_function.hpp"

namespace wordorder {

/// Outcome of one exhaustive check. `detail` names the sweep on success and the
/// first counterexample on failure.
struct ClaimResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  int max_n = 12;
  /// Replaces the bundled cost functions in every cost-based check.
  std::optional<CostFunction> cost_override;
  int sampled_chains = 100;
  std::uint64_t seed = 20130101;
};

ClaimResult check_center_minimality(int max_n, const std::vector<CostFunction>& costs);
ClaimResult check_edge_maximality(int max_n, const std::vector<CostFunction>& costs);
ClaimResult check_mirror_symmetry(int max_n, const std::vector<CostFunction>& costs);
ClaimResult check_head_last_minimum(int max_n, const std::vector<CostFunction>& costs);
ClaimResult check_atomic_reduction(int max_n, const std::vector<CostFunction>& costs);
ClaimResult check_atomicity_minimality(int max_n, int max_size,
                                       const std::vector<CostFunction>& costs);
ClaimResult check_conflict(int max_n, const std::vector<CostFunction>& costs);
ClaimResult check_detailed_balance(int samples, std::uint64_t seed);

/// Every check above; atomic reduction is capped at n <= 5 and atomicity
/// minimality at n <= 3 with sizes <= 3.
std::vector<ClaimResult> run_claims(const VerifyOptions& options);

}  // namespace wordorder
