#include "wordorder/orders.hpp"

namespace wordorder {

namespace {

constexpr std::array<std::string_view, kOrderCount> kOrderNames = {"SOV", "SVO", "VSO",
                                                                   "VOS", "OVS", "OSV"};

int constituent_of(char symbol) {
  switch (symbol) {
    case 'S': return kSubject;
    case 'V': return kVerb;
    default: return kObject;
  }
}

}  // namespace

std::string_view to_string(WordOrder order) {
  return kOrderNames[static_cast<std::size_t>(index_of(order))];
}

std::string_view to_string(VerbPosition position) {
  switch (position) {
    case VerbPosition::initial: return "initial";
    case VerbPosition::medial: return "medial";
    case VerbPosition::final: return "final";
    case VerbPosition::none: return "none";
  }
  return "none";
}

std::optional<WordOrder> parse_word_order(std::string_view token) {
  for (const WordOrder order : kAllOrders) {
    if (to_string(order) == token) return order;
  }
  return std::nullopt;
}

VerbPosition verb_position(WordOrder order) {
  switch (to_string(order).find('V')) {
    case 0: return VerbPosition::initial;
    case 1: return VerbPosition::medial;
    default: return VerbPosition::final;
  }
}

std::vector<LabeledOrder> enumerate_three_element_orders() {
  std::vector<LabeledOrder> orders;
  orders.reserve(kOrderCount);
  for (const WordOrder order : kAllOrders) orders.push_back({order, verb_position(order)});
  return orders;
}

Linearization to_linearization(WordOrder order) {
  std::vector<int> indices;
  for (const char symbol : to_string(order)) indices.push_back(constituent_of(symbol));
  return Linearization(std::move(indices));
}

ConstituentLayout three_element_layout(Constituent subject, Constituent verb, Constituent object) {
  std::vector<Constituent> constituents(3);
  constituents[kSubject] = subject;
  constituents[kVerb] = verb;
  constituents[kObject] = object;
  return ConstituentLayout(std::move(constituents), kVerb);
}

}  // namespace wordorder
