#pragma once

namespace wordorder {

struct PredictabilityScores {
  double head_score = 0.0;
  double dependent_score = 0.0;
};

// Linear-in-position scores. Only the extremes are meaningful: the head is most
// predictable when placed last, the dependents when the head comes first.

/// (l - 1) / n: share of dependents already seen when the head arrives.
double head_predictability(int dependents, int head_position);

/// (n + 1 - l) / n: share of dependents that follow the head.
double dependent_predictability(int dependents, int head_position);

PredictabilityScores predictability_scores(int dependents, int head_position);

}  // namespace wordorder
