#include "wordorder/claims.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "wordorder/core_costs.hpp"
#include "wordorder/evolution_dynamics.hpp"
#include "wordorder/ordering_optimizer.hpp"
#include "wordorder/predictability.hpp"

namespace wordorder {

namespace {

constexpr double kTieTolerance = 1e-12;

std::string describe(const CostFunction& g) {
  std::ostringstream out;
  out << g.kind_name();
  if (g.kind() == CostKind::power) out << '(' << g.exponent() << ')';
  return out.str();
}

std::string join(const std::vector<int>& values) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  out << '}';
  return out.str();
}

std::vector<double> constituent_costs(int n, const CostFunction& g) {
  std::vector<double> costs;
  for (int l = 1; l <= n + 1; ++l) costs.push_back(memory_cost_constituents(n, l, g));
  return costs;
}

bool close(double a, double b) {
  return std::abs(a - b) <= kTieTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

/// Runs `body`, turning a thrown domain error into a failed claim.
ClaimResult guarded(std::string name, const std::function<std::string()>& body) {
  try {
    std::string failure = body();
    if (failure.empty()) return {std::move(name), true, ""};
    return {std::move(name), false, std::move(failure)};
  } catch (const std::exception& e) {
    return {std::move(name), false, std::string("error: ") + e.what()};
  }
}

ClaimResult with_detail(ClaimResult result, const std::string& sweep) {
  if (result.passed) result.detail = sweep;
  return result;
}

std::string sweep_label(int max_n, std::size_t cost_count) {
  return "n<=" + std::to_string(max_n) + ", " + std::to_string(cost_count) + " cost functions";
}

/// Calls `visit` for every permutation of 0..count-1.
void for_each_permutation(int count, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> order(static_cast<std::size_t>(count));
  std::iota(order.begin(), order.end(), 0);
  do {
    visit(order);
  } while (std::next_permutation(order.begin(), order.end()));
}

}  // namespace

ClaimResult check_center_minimality(int max_n, const std::vector<CostFunction>& costs) {
  return with_detail(guarded("center_minimality", [&]() -> std::string {
    for (const CostFunction& g : costs) {
      for (int n = 1; n <= max_n; ++n) {
        const std::vector<double> d = constituent_costs(n, g);
        const double lowest = *std::min_element(d.begin(), d.end());
        std::vector<int> argmin;
        for (int l = 1; l <= n + 1; ++l) {
          if (close(d[static_cast<std::size_t>(l - 1)], lowest)) argmin.push_back(l);
        }
        const std::vector<int> predicted = optimal_head_positions(n, g);
        if (argmin != predicted) {
          return "n=" + std::to_string(n) + " g=" + describe(g) + " brute-force argmin=" +
                 join(argmin) + " predicted=" + join(predicted);
        }
      }
    }
    return "";
  }), sweep_label(max_n, costs.size()));
}

ClaimResult check_edge_maximality(int max_n, const std::vector<CostFunction>& costs) {
  return with_detail(guarded("edge_maximality", [&]() -> std::string {
    for (const CostFunction& g : costs) {
      for (int n = 2; n <= max_n; ++n) {
        const std::vector<double> d = constituent_costs(n, g);
        if (!close(d.front(), d.back())) {
          return "n=" + std::to_string(n) + " g=" + describe(g) + " D_1 != D_{n+1}";
        }
        for (int l = 2; l <= n; ++l) {
          if (!(d.front() > d[static_cast<std::size_t>(l - 1)])) {
            return "n=" + std::to_string(n) + " g=" + describe(g) + " D_1 not above D_" +
                   std::to_string(l);
          }
        }
      }
    }
    return "";
  }), sweep_label(max_n, costs.size()));
}

ClaimResult check_mirror_symmetry(int max_n, const std::vector<CostFunction>& costs) {
  return with_detail(guarded("mirror_symmetry", [&]() -> std::string {
    for (const CostFunction& g : costs) {
      for (int n = 1; n <= max_n; ++n) {
        const std::vector<double> d = constituent_costs(n, g);
        for (int l = 1; l <= n + 1; ++l) {
          if (!close(d[static_cast<std::size_t>(l - 1)], d[static_cast<std::size_t>(n + 1 - l)])) {
            return "n=" + std::to_string(n) + " l=" + std::to_string(l) + " g=" + describe(g);
          }
        }
      }
    }
    return "";
  }), sweep_label(max_n, costs.size()));
}

ClaimResult check_head_last_minimum(int max_n, const std::vector<CostFunction>& costs) {
  return with_detail(guarded("head_last_minimum", [&]() -> std::string {
    for (const CostFunction& g : costs) {
      if (memory_cost_constituents(2, 3, g) != g(1) + g(2)) {
        return "g=" + describe(g) + " D_3 != g(1)+g(2) for n=2";
      }
      const double at_two = memory_cost_constituents(2, 3, g);
      for (int n = 3; n <= max_n; ++n) {
        if (!(memory_cost_constituents(n, n + 1, g) > at_two)) {
          return "g=" + describe(g) + " head-last cost at n=" + std::to_string(n) +
                 " not above n=2";
        }
      }
    }
    return "";
  }), sweep_label(max_n, costs.size()));
}

ClaimResult check_atomic_reduction(int max_n, const std::vector<CostFunction>& costs) {
  return with_detail(guarded("atomic_reduction", [&]() -> std::string {
    for (const CostFunction& g : costs) {
      for (int n = 1; n <= max_n; ++n) {
        std::string failure;
        for (int root = 0; root <= n && failure.empty(); ++root) {
          const ConstituentLayout layout = ConstituentLayout::atomic(n, root);
          for_each_permutation(n + 1, [&](const std::vector<int>& order) {
            if (!failure.empty()) return;
            const Linearization lin(order);
            const int l = lin.head_position(layout);
            if (!close(memory_cost_words(layout, lin, g), memory_cost_constituents(n, l, g))) {
              failure = "n=" + std::to_string(n) + " l=" + std::to_string(l) +
                        " g=" + describe(g) + " D'_l != D_l";
            }
          });
        }
        if (!failure.empty()) return failure;
      }
    }
    return "";
  }), sweep_label(max_n, costs.size()));
}

ClaimResult check_atomicity_minimality(int max_n, int max_size,
                                       const std::vector<CostFunction>& costs) {
  return with_detail(guarded("atomicity_minimality", [&]() -> std::string {
    for (const CostFunction& g : costs) {
      for (int n = 1; n <= max_n; ++n) {
        const int count = n + 1;
        const ConstituentLayout atomic = ConstituentLayout::atomic(n, 0);
        std::string failure;
        // Odometer over (size, offset) of every constituent.
        std::vector<Constituent> parts(static_cast<std::size_t>(count));
        while (failure.empty()) {
          const ConstituentLayout layout(parts, 0);
          for_each_permutation(count, [&](const std::vector<int>& order) {
            if (!failure.empty()) return;
            const Linearization lin(order);
            if (memory_cost_words(layout, lin, g) < memory_cost_words(atomic, lin, g)) {
              failure = "n=" + std::to_string(n) + " g=" + describe(g) +
                        " non-atomic layout cheaper than atomic";
            }
          });
          std::size_t k = 0;
          for (; k < parts.size(); ++k) {
            Constituent& c = parts[k];
            if (++c.head_word_offset < c.size_words) break;
            c.head_word_offset = 0;
            if (++c.size_words <= max_size) break;
            c.size_words = 1;
          }
          if (k == parts.size()) break;
        }
        if (!failure.empty()) return failure;
      }
    }
    return "";
  }), "n<=" + std::to_string(max_n) + ", sizes<=" + std::to_string(max_size) + ", " +
          std::to_string(costs.size()) + " cost functions");
}

ClaimResult check_conflict(int max_n, const std::vector<CostFunction>& costs) {
  return with_detail(guarded("conflict_existence", [&]() -> std::string {
    for (const CostFunction& g : costs) {
      for (int n = 1; n <= max_n; ++n) {
        const std::vector<double> d = constituent_costs(n, g);
        const double lowest = *std::min_element(d.begin(), d.end());
        std::vector<int> all_three;
        for (int l = 1; l <= n + 1; ++l) {
          const bool min_memory = close(d[static_cast<std::size_t>(l - 1)], lowest);
          const bool max_head = head_predictability(n, l) == 1.0;
          const bool max_dep = dependent_predictability(n, l) == 1.0;
          if (n == 1 && l == 1 && !(min_memory && max_dep)) {
            return "n=1: l=1 should attain min memory and max dependent predictability";
          }
          if (min_memory && max_head && max_dep) all_three.push_back(l);
        }
        if (n > 1 && !all_three.empty()) {
          return "n=" + std::to_string(n) + " g=" + describe(g) + " l=" +
                 std::to_string(all_three.front()) + " attains all three optima";
        }
      }
    }
    return "";
  }), sweep_label(max_n, costs.size()));
}

ClaimResult check_detailed_balance(int samples, std::uint64_t seed) {
  return with_detail(guarded("detailed_balance", [&]() -> std::string {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> temperature(0.0, 10.0);
    const RingGraph ring = build_ring();
    const ConstituentLayout layout = three_element_layout();
    const CostFunction g = CostFunction::linear();
    for (int s = 0; s < samples; ++s) {
      const EnergyParams params{unit(rng), unit(rng)};
      const ChainSpec spec = make_chain_spec(layout, g, params, temperature(rng));
      const OrderMatrix transition = transition_matrix(spec, ring);
      const OrderVector pi = stationary_distribution(transition);
      const double residual = detailed_balance_residual(pi, transition);

      OrderVector boltzmann = (-spec.beta * spec.energy.array()).exp().matrix();
      boltzmann /= boltzmann.sum();
      const double gap = (pi - boltzmann).cwiseAbs().maxCoeff();
      if (residual >= 1e-10 || gap >= 1e-10) {
        std::ostringstream out;
        out << "lambda=" << params.lambda << " mu=" << params.mu << " beta=" << spec.beta
            << " residual=" << residual << " boltzmann_gap=" << gap;
        return out.str();
      }
    }
    return "";
  }), std::to_string(samples) + " sampled chains");
}

std::vector<ClaimResult> run_claims(const VerifyOptions& options) {
  if (options.max_n < 1) throw std::domain_error("max-n must be >= 1");
  const std::vector<CostFunction> costs = options.cost_override
                                              ? std::vector<CostFunction>{*options.cost_override}
                                              : bundled_cost_functions();
  const int n = options.max_n;
  return {check_center_minimality(n, costs),
          check_edge_maximality(n, costs),
          check_mirror_symmetry(n, costs),
          check_head_last_minimum(n, costs),
          check_atomic_reduction(std::min(n, 5), costs),
          check_atomicity_minimality(std::min(n, 3), 3, costs),
          check_conflict(n, costs),
          check_detailed_balance(options.sampled_chains, options.seed)};
}

}  // namespace wordorder
