#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "wordorder/core_costs.hpp"

namespace wordorder {

/// The six orders of {S, V, O}, enumerated along the ring of adjacent swaps.
enum class WordOrder : int { SOV = 0, SVO, VSO, VOS, OVS, OSV };

enum class VerbPosition { initial, medial, final, none };

inline constexpr int kOrderCount = 6;
inline constexpr std::array<WordOrder, kOrderCount> kAllOrders = {
    WordOrder::SOV, WordOrder::SVO, WordOrder::VSO,
    WordOrder::VOS, WordOrder::OVS, WordOrder::OSV};

/// Dense per-order quantities (energies, probabilities), indexed by WordOrder.
using OrderVector = Eigen::Matrix<double, kOrderCount, 1>;
using OrderMatrix = Eigen::Matrix<double, kOrderCount, kOrderCount>;

// Constituent indices used by three-element layouts. V is the root.
inline constexpr int kSubject = 0;
inline constexpr int kVerb = 1;
inline constexpr int kObject = 2;

constexpr int index_of(WordOrder order) { return static_cast<int>(order); }

std::string_view to_string(WordOrder order);
std::string_view to_string(VerbPosition position);
std::optional<WordOrder> parse_word_order(std::string_view token);

VerbPosition verb_position(WordOrder order);

struct LabeledOrder {
  WordOrder order;
  VerbPosition verb_position;
};

std::vector<LabeledOrder> enumerate_three_element_orders();

/// The order as a permutation of {kSubject, kVerb, kObject}.
Linearization to_linearization(WordOrder order);

/// S, V, O constituents with V as the root.
ConstituentLayout three_element_layout(Constituent subject = {}, Constituent verb = {},
                                       Constituent object = {});

}  // namespace wordorder
