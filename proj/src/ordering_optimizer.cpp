#include "wordorder/ordering_optimizer.hpp"

#include <algorithm>
#include <stdexcept>

#include "wordorder/predictability.hpp"

namespace wordorder {

void validate(const EnergyParams& params) {
  if (!(params.lambda >= 0.0 && params.lambda <= 1.0)) {
    throw std::domain_error("lambda must lie in [0, 1]");
  }
  if (!(params.mu >= 0.0 && params.mu <= 1.0)) {
    throw std::domain_error("mu must lie in [0, 1]");
  }
}

std::vector<ObjectiveScores> score_linearizations(std::span<const Linearization> candidates,
                                                  const ConstituentLayout& layout,
                                                  const CostFunction& g) {
  std::vector<ObjectiveScores> scores;
  scores.reserve(candidates.size());
  for (const Linearization& lin : candidates) {
    const int l = lin.head_position(layout);
    const PredictabilityScores pred = predictability_scores(layout.dependents(), l);
    scores.push_back({memory_cost_words(layout, lin, g), 0.0, pred.head_score,
                      pred.dependent_score});
  }
  if (scores.empty()) return scores;

  const auto [lo, hi] = std::minmax_element(
      scores.begin(), scores.end(),
      [](const ObjectiveScores& a, const ObjectiveScores& b) { return a.memory < b.memory; });
  const double min_memory = lo->memory;
  const double range = hi->memory - min_memory;
  for (ObjectiveScores& s : scores) {
    s.memory_normalized = range > 0.0 ? (s.memory - min_memory) / range : 0.0;
  }
  return scores;
}

std::vector<ScoredOrder> score_orders(std::span<const WordOrder> candidates,
                                      const ConstituentLayout& layout, const CostFunction& g) {
  if (layout.size() != 3 || layout.root_index() != kVerb) {
    throw std::domain_error("labeled S/V/O orders need a three-constituent layout rooted at V");
  }
  std::vector<Linearization> lins;
  lins.reserve(candidates.size());
  for (const WordOrder order : candidates) lins.push_back(to_linearization(order));
  const std::vector<ObjectiveScores> scores = score_linearizations(lins, layout, g);

  std::vector<ScoredOrder> scored;
  scored.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) scored.push_back({candidates[i], scores[i]});
  return scored;
}

ObjectiveScores score_order(WordOrder order, const ConstituentLayout& layout,
                            const CostFunction& g) {
  return score_orders(kAllOrders, layout, g)[static_cast<std::size_t>(index_of(order))].scores;
}

bool dominates(const ObjectiveScores& a, const ObjectiveScores& b) {
  const bool no_worse =
      a.memory <= b.memory && a.head_pred >= b.head_pred && a.dep_pred >= b.dep_pred;
  const bool better = a.memory < b.memory || a.head_pred > b.head_pred || a.dep_pred > b.dep_pred;
  return no_worse && better;
}

std::vector<bool> pareto_mask(std::span<const ObjectiveScores> scores) {
  std::vector<bool> on_front(scores.size(), true);
  for (std::size_t i = 0; i < scores.size(); ++i) {
    for (std::size_t j = 0; j < scores.size(); ++j) {
      if (i != j && dominates(scores[j], scores[i])) {
        on_front[i] = false;
        break;
      }
    }
  }
  return on_front;
}

std::vector<WordOrder> pareto_front(std::span<const WordOrder> candidates,
                                    const ConstituentLayout& layout, const CostFunction& g) {
  if (candidates.empty()) throw std::domain_error("pareto_front needs at least one candidate");
  const std::vector<ScoredOrder> scored = score_orders(candidates, layout, g);
  std::vector<ObjectiveScores> scores;
  for (const ScoredOrder& s : scored) scores.push_back(s.scores);
  const std::vector<bool> mask = pareto_mask(scores);

  std::vector<WordOrder> front;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (mask[i]) front.push_back(candidates[i]);
  }
  return front;
}

double scalarized_energy(const ObjectiveScores& scores, const EnergyParams& params) {
  validate(params);
  const double predictability = params.mu * scores.head_pred + (1.0 - params.mu) * scores.dep_pred;
  return params.lambda * scores.memory_normalized - (1.0 - params.lambda) * predictability;
}

OrderVector energy_landscape(const ConstituentLayout& layout, const CostFunction& g,
                             const EnergyParams& params) {
  OrderVector energy;
  for (const ScoredOrder& s : score_orders(kAllOrders, layout, g)) {
    energy(index_of(s.order)) = scalarized_energy(s.scores, params);
  }
  return energy;
}

}  // namespace wordorder
