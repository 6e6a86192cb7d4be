#include "wordorder/predictability.hpp"

#include <stdexcept>
#include <string>

namespace wordorder {

namespace {

void require_valid(int dependents, int head_position) {
  if (dependents < 1) throw std::domain_error("need n >= 1 dependents");
  if (head_position < 1 || head_position > dependents + 1) {
    throw std::domain_error("head position l=" + std::to_string(head_position) +
                            " outside [1, " + std::to_string(dependents + 1) + "]");
  }
}

}  // namespace

double head_predictability(int dependents, int head_position) {
  require_valid(dependents, head_position);
  return static_cast<double>(head_position - 1) / dependents;
}

double dependent_predictability(int dependents, int head_position) {
  require_valid(dependents, head_position);
  return static_cast<double>(dependents + 1 - head_position) / dependents;
}

PredictabilityScores predictability_scores(int dependents, int head_position) {
  return {head_predictability(dependents, head_position),
          dependent_predictability(dependents, head_position)};
}

}  // namespace wordorder
