#pragma once

#include <span>
#include <vector>

#include "wordorder/core_costs.hpp"
#include "wordorder/orders.hpp"

namespace wordorder {

/// Objective values of one linearization. `memory_normalized` is min-max scaled
/// over the candidate set the linearization was scored with (0 when all tie).
struct ObjectiveScores {
  double memory = 0.0;
  double memory_normalized = 0.0;
  double head_pred = 0.0;
  double dep_pred = 0.0;
};

/// lambda weighs memory against predictability; mu weighs head against dependent
/// predictability. Both in [0, 1].
struct EnergyParams {
  double lambda = 0.5;
  double mu = 0.5;
};

void validate(const EnergyParams& params);

struct ScoredOrder {
  WordOrder order;
  ObjectiveScores scores;
};

/// Scores arbitrary linearizations of one layout, normalizing memory over `candidates`.
std::vector<ObjectiveScores> score_linearizations(std::span<const Linearization> candidates,
                                                  const ConstituentLayout& layout,
                                                  const CostFunction& g);

/// Scores labeled S/V/O orders of a three-element layout (V is the root).
std::vector<ScoredOrder> score_orders(std::span<const WordOrder> candidates,
                                      const ConstituentLayout& layout, const CostFunction& g);

/// One order, with memory normalized over all six orders of the layout.
ObjectiveScores score_order(WordOrder order, const ConstituentLayout& layout,
                            const CostFunction& g);

/// a dominates b: no worse in (-memory, head_pred, dep_pred) and strictly better in one.
bool dominates(const ObjectiveScores& a, const ObjectiveScores& b);

/// Candidates not strictly dominated by any other; ties are all kept.
std::vector<bool> pareto_mask(std::span<const ObjectiveScores> scores);

std::vector<WordOrder> pareto_front(std::span<const WordOrder> candidates,
                                    const ConstituentLayout& layout, const CostFunction& g);

/// lambda * memory_normalized - (1 - lambda) * (mu * head_pred + (1 - mu) * dep_pred).
/// Lower is better.
double scalarized_energy(const ObjectiveScores& scores, const EnergyParams& params);

/// Scalarized energy of each of the six orders, indexed by WordOrder.
OrderVector energy_landscape(const ConstituentLayout& layout, const CostFunction& g,
                             const EnergyParams& params);

}  // namespace wordorder
