#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "wordorder/core_costs.hpp"

using namespace wordorder;

TEST_CASE("memory_cost_constituents examples") {
  const CostFunction linear = CostFunction::linear();
  CHECK(memory_cost_constituents(2, 3, linear) == linear(1) + linear(2));
  CHECK(memory_cost_constituents(2, 3, linear) == 3.0);
  for (const CostFunction& g : bundled_cost_functions()) {
    CHECK(memory_cost_constituents(1, 1, g) == g(1));
  }
  // Summation oracle: head at 3 of 5 gives distances {2,1} and {1,2}.
  CHECK(memory_cost_constituents(4, 3, CostFunction::power(2.0)) == 10.0);
}

TEST_CASE("memory_cost_constituents matches the explicit distance listing") {
  const auto& costs = oracle::bundled_costs();
  const std::vector<CostFunction> gs = bundled_cost_functions();
  for (std::size_t k = 0; k < gs.size(); ++k) {
    for (int n = 1; n <= 12; ++n) {
      for (int l = 1; l <= n + 1; ++l) {
        CHECK(memory_cost_constituents(n, l, gs[k]) ==
              doctest::Approx(oracle::constituent_cost(n, l, costs[k].second)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("memory_cost_constituents errors") {
  const CostFunction g = CostFunction::linear();
  CHECK_THROWS_AS(memory_cost_constituents(2, 0, g), std::domain_error);
  CHECK_THROWS_AS(memory_cost_constituents(2, 4, g), std::domain_error);
  CHECK_THROWS_AS(memory_cost_constituents(0, 1, g), std::domain_error);
  // Needs g(3) but the domain stops at 2.
  CHECK_THROWS_AS(memory_cost_constituents(3, 1, CostFunction::linear(2)), std::domain_error);
  CHECK_NOTHROW(memory_cost_constituents(3, 2, CostFunction::linear(2)));
}

TEST_CASE("layout and linearization validation") {
  CHECK_THROWS_AS(ConstituentLayout({Constituent{}}, 0), std::domain_error);
  CHECK_THROWS_AS(ConstituentLayout({Constituent{}, Constituent{}}, 2), std::domain_error);
  CHECK_THROWS_AS(ConstituentLayout({Constituent{2, 2}, Constituent{}}, 0), std::domain_error);
  CHECK_THROWS_AS(ConstituentLayout({Constituent{0, 0}, Constituent{}}, 0), std::domain_error);
  CHECK_THROWS_AS(Linearization({0, 0, 1}), std::domain_error);
  CHECK_THROWS_AS(Linearization({0, 3, 1}), std::domain_error);

  const Linearization lin({2, 0, 1});
  CHECK(lin.rank_of(2) == 1);
  CHECK(lin.rank_of(1) == 3);
  CHECK(lin.head_position(ConstituentLayout::atomic(2, 0)) == 2);
  CHECK(ConstituentLayout({{3, 0}, {1, 0}, {2, 1}}, 1).total_words() == 6);
}

TEST_CASE("memory_cost_words examples") {
  const CostFunction linear = CostFunction::linear();
  // Atomic, head in the middle.
  const ConstituentLayout atomic = ConstituentLayout::atomic(2, 1);
  CHECK(memory_cost_words(atomic, Linearization::identity(3), linear) == 2.0);
  CHECK(memory_cost_words(atomic, Linearization::identity(3), linear) ==
        memory_cost_constituents(2, 2, linear));

  const ConstituentLayout pair = ConstituentLayout::atomic(1, 0);
  for (const CostFunction& g : bundled_cost_functions()) {
    CHECK(memory_cost_words(pair, Linearization::identity(2), g) == g(1));
  }

  // S(3 words, head first) V O: S head at 1, V at 4, O at 5.
  const ConstituentLayout svo({{3, 0}, {1, 0}, {1, 0}}, 1);
  CHECK(memory_cost_words(svo, Linearization::identity(3), linear) == linear(3) + linear(1));
  CHECK(oracle::word_cost({3, 1, 1}, {0, 0, 0}, {0, 1, 2}, 1,
                          [](int d) { return static_cast<double>(d); }) == 4.0);
}

TEST_CASE("word_distance_matrix examples") {
  const Eigen::MatrixXi two = word_distance_matrix(ConstituentLayout::atomic(1, 0),
                                                   Linearization::identity(2));
  CHECK(two(0, 1) == 1);
  CHECK(two(1, 0) == 1);

  const ConstituentLayout layout({{2, 1}, {2, 0}, {1, 0}}, 0);
  const Eigen::MatrixXi d = word_distance_matrix(layout, Linearization::identity(3));
  CHECK(d(0, 2) == 3);
  CHECK(d(0, 1) == 1);
  CHECK(d(1, 2) == 2);
  CHECK(d == d.transpose());
  CHECK(d.diagonal().isZero());

  const Linearization shuffled({2, 0, 3, 1});
  const Eigen::MatrixXi atomic = word_distance_matrix(ConstituentLayout::atomic(3, 0), shuffled);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(atomic(i, j) == std::abs(shuffled.rank_of(i) - shuffled.rank_of(j)));
    }
  }
}

TEST_CASE("word distances agree with the expanded word array and bound constituent distance") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int count = 2 + static_cast<int>(rng() % 5);
    std::vector<int> sizes, offsets;
    std::vector<Constituent> parts;
    for (int c = 0; c < count; ++c) {
      const int size = 1 + static_cast<int>(rng() % 4);
      const int offset = static_cast<int>(rng() % static_cast<unsigned>(size));
      sizes.push_back(size);
      offsets.push_back(offset);
      parts.push_back({size, offset});
    }
    std::vector<int> order(static_cast<std::size_t>(count));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    const ConstituentLayout layout(parts, 0);
    const Linearization lin(order);
    const Eigen::MatrixXi d = word_distance_matrix(layout, lin);
    const std::vector<int> pos = oracle::head_word_positions(sizes, offsets, order);
    for (int i = 0; i < count; ++i) {
      for (int j = 0; j < count; ++j) {
        REQUIRE(d(i, j) == std::abs(pos[static_cast<std::size_t>(i)] -
                                    pos[static_cast<std::size_t>(j)]));
        REQUIRE(d(i, j) >= std::abs(lin.rank_of(i) - lin.rank_of(j)));
      }
    }
  }
}

TEST_CASE("optimal_head_positions examples and brute force") {
  const CostFunction linear = CostFunction::linear();
  CHECK(optimal_head_positions(2, linear) == std::vector<int>{2});
  CHECK(optimal_head_positions(1, linear) == std::vector<int>{1, 2});
  CHECK(optimal_head_positions(5, linear) == std::vector<int>{3, 4});
  CHECK_THROWS_AS(optimal_head_positions(0, linear), std::domain_error);

  const auto& costs = oracle::bundled_costs();
  for (const auto& [name, g] : costs) {
    for (int n = 1; n <= 12; ++n) {
      std::vector<double> d;
      for (int l = 1; l <= n + 1; ++l) d.push_back(oracle::constituent_cost(n, l, g));
      const double lowest = *std::min_element(d.begin(), d.end());
      std::vector<int> argmin;
      for (int l = 1; l <= n + 1; ++l) {
        if (d[static_cast<std::size_t>(l - 1)] <= lowest * (1 + 1e-12)) argmin.push_back(l);
      }
      CAPTURE(name);
      CAPTURE(n);
      CHECK(argmin == optimal_head_positions(n, linear));
    }
  }
}

TEST_CASE("mirror symmetry and edge maximality of D_l") {
  for (const CostFunction& g : bundled_cost_functions()) {
    for (int n = 1; n <= 12; ++n) {
      for (int l = 1; l <= n + 1; ++l) {
        CHECK(memory_cost_constituents(n, l, g) == memory_cost_constituents(n, n + 2 - l, g));
        if (n >= 2 && l > 1 && l < n + 1) {
          CHECK(memory_cost_constituents(n, 1, g) > memory_cost_constituents(n, l, g));
        }
      }
    }
  }
}

TEST_CASE("growing a constituent between root and a dependent strictly raises D'") {
  const CostFunction g = CostFunction::logarithmic();
  // Constituents in linear order; root at index 0, dependent at the end.
  for (int count = 3; count <= 5; ++count) {
    for (int middle = 1; middle < count - 1; ++middle) {
      for (int root_offset : {0}) {
        std::vector<Constituent> parts(static_cast<std::size_t>(count));
        parts[0].head_word_offset = root_offset;
        const Linearization lin = Linearization::identity(count);
        double previous = memory_cost_words(ConstituentLayout(parts, 0), lin, g);
        for (int size = 2; size <= 4; ++size) {
          parts[static_cast<std::size_t>(middle)].size_words = size;
          const double now = memory_cost_words(ConstituentLayout(parts, 0), lin, g);
          CHECK(now > previous);
          previous = now;
        }
      }
    }
  }
}
