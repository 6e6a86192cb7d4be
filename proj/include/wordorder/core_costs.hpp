#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "wordorder/cost_function.hpp"

namespace wordorder {

/// A head or dependent realized as `size_words` consecutive words. The head word
/// of the constituent sits `head_word_offset` words after its first word.
struct Constituent {
  int size_words = 1;
  int head_word_offset = 0;

  bool atomic() const { return size_words == 1; }
};

/// A root (head) constituent together with its n >= 1 dependents.
class ConstituentLayout {
public:
  ConstituentLayout(std::vector<Constituent> constituents, int root_index);

  /// n + 1 single-word constituents.
  static ConstituentLayout atomic(int dependents, int root_index = 0);

  const std::vector<Constituent>& constituents() const { return constituents_; }
  const Constituent& operator[](int index) const { return constituents_[static_cast<std::size_t>(index)]; }
  int root_index() const { return root_index_; }
  int size() const { return static_cast<int>(constituents_.size()); }
  int dependents() const { return size() - 1; }
  int total_words() const;

private:
  std::vector<Constituent> constituents_;
  int root_index_;
};

/// An ordering of constituent indices (0-based). Ranks and head positions are 1-based.
class Linearization {
public:
  explicit Linearization(std::vector<int> order);
  static Linearization identity(int count);

  std::span<const int> order() const { return order_; }
  int size() const { return static_cast<int>(order_.size()); }
  /// 1-based position of `constituent` in the order.
  int rank_of(int constituent) const { return rank_[static_cast<std::size_t>(constituent)]; }
  /// l, the 1-based position of the layout's root.
  int head_position(const ConstituentLayout& layout) const { return rank_of(layout.root_index()); }

private:
  std::vector<int> order_;
  std::vector<int> rank_;
};

/// D_l: summed cost of the links from a head at position l to n single-element
/// dependents. Empty sums are zero.
double memory_cost_constituents(int dependents, int head_position, const CostFunction& g);

/// 1-based word position of each constituent's head word in the flattened
/// sequence, indexed by constituent.
Eigen::VectorXi head_word_positions(const ConstituentLayout& layout, const Linearization& lin);

/// d_{i,j}: word distance between the head words of constituents i and j.
/// Symmetric with a zero diagonal, indexed by constituent.
Eigen::MatrixXi word_distance_matrix(const ConstituentLayout& layout, const Linearization& lin);

/// D'_l: summed cost of the word-level links from the root's head word to the head
/// word of each dependent.
double memory_cost_words(const ConstituentLayout& layout, const Linearization& lin,
                         const CostFunction& g);

/// Positions minimizing D_l. Two symmetric centers when n + 1 is even, one otherwise.
std::vector<int> optimal_head_positions(int dependents, const CostFunction& g);

}  // namespace wordorder
