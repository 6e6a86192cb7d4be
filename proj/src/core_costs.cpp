#include "wordorder/core_costs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace wordorder {

namespace {

void require_dependents(int dependents) {
  if (dependents < 1) {
    throw std::domain_error("need at least one dependent (n >= 1), got n=" +
                            std::to_string(dependents));
  }
}

}  // namespace

ConstituentLayout::ConstituentLayout(std::vector<Constituent> constituents, int root_index)
    : constituents_(std::move(constituents)), root_index_(root_index) {
  if (constituents_.size() < 2) {
    throw std::domain_error("a layout needs a root and at least one dependent");
  }
  if (root_index_ < 0 || root_index_ >= size()) {
    throw std::domain_error("root index " + std::to_string(root_index_) + " out of range");
  }
  for (const Constituent& c : constituents_) {
    if (c.size_words < 1) throw std::domain_error("constituent size must be >= 1");
    if (c.head_word_offset < 0 || c.head_word_offset >= c.size_words) {
      throw std::domain_error("head word offset " + std::to_string(c.head_word_offset) +
                              " outside constituent of size " + std::to_string(c.size_words));
    }
  }
}

ConstituentLayout ConstituentLayout::atomic(int dependents, int root_index) {
  require_dependents(dependents);
  return ConstituentLayout(std::vector<Constituent>(static_cast<std::size_t>(dependents) + 1),
                           root_index);
}

int ConstituentLayout::total_words() const {
  return std::accumulate(constituents_.begin(), constituents_.end(), 0,
                         [](int acc, const Constituent& c) { return acc + c.size_words; });
}

Linearization::Linearization(std::vector<int> order)
    : order_(std::move(order)), rank_(order_.size(), 0) {
  const int count = size();
  for (int position = 0; position < count; ++position) {
    const int index = order_[static_cast<std::size_t>(position)];
    if (index < 0 || index >= count || rank_[static_cast<std::size_t>(index)] != 0) {
      throw std::domain_error("linearization is not a permutation of 0.." +
                              std::to_string(count - 1));
    }
    rank_[static_cast<std::size_t>(index)] = position + 1;
  }
}

Linearization Linearization::identity(int count) {
  std::vector<int> order(static_cast<std::size_t>(count));
  std::iota(order.begin(), order.end(), 0);
  return Linearization(std::move(order));
}

double memory_cost_constituents(int dependents, int head_position, const CostFunction& g) {
  require_dependents(dependents);
  if (head_position < 1 || head_position > dependents + 1) {
    throw std::domain_error("head position l=" + std::to_string(head_position) +
                            " outside [1, " + std::to_string(dependents + 1) + "]");
  }
  const auto links = [&g](int count) {
    double sum = 0.0;
    for (int d = 1; d <= count; ++d) sum += g(d);
    return sum;
  };
  // Each side summed on its own so D_l and D_{n+2-l} agree bit for bit.
  return links(head_position - 1) + links(dependents + 1 - head_position);
}

Eigen::VectorXi head_word_positions(const ConstituentLayout& layout, const Linearization& lin) {
  if (lin.size() != layout.size()) {
    throw std::domain_error("linearization size does not match the layout");
  }
  Eigen::VectorXi positions(layout.size());
  int first_word = 1;
  for (const int index : lin.order()) {
    positions(index) = first_word + layout[index].head_word_offset;
    first_word += layout[index].size_words;
  }
  return positions;
}

Eigen::MatrixXi word_distance_matrix(const ConstituentLayout& layout, const Linearization& lin) {
  const Eigen::VectorXi positions = head_word_positions(layout, lin);
  const Eigen::Index count = positions.size();
  return (positions.replicate(1, count) - positions.transpose().replicate(count, 1))
      .cwiseAbs();
}

double memory_cost_words(const ConstituentLayout& layout, const Linearization& lin,
                         const CostFunction& g) {
  const Eigen::VectorXi positions = head_word_positions(layout, lin);
  const int root_word = positions(layout.root_index());
  double cost = 0.0;
  for (int i = 0; i < layout.size(); ++i) {
    if (i == layout.root_index()) continue;
    cost += g(std::abs(positions(i) - root_word));
  }
  return cost;
}

std::vector<int> optimal_head_positions(int dependents, const CostFunction& /*g*/) {
  require_dependents(dependents);
  // D_l = G(l-1) + G(n+1-l) with G convex for any strictly increasing g.
  const int lower = (dependents + 2) / 2;
  const int upper = (dependents + 3) / 2;
  if (lower == upper) return {lower};
  return {lower, upper};
}

}  // namespace wordorder
