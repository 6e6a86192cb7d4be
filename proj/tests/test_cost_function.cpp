#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "wordorder/cost_function.hpp"

using namespace wordorder;

TEST_CASE("bundled cost functions evaluate their closed forms") {
  CHECK(CostFunction::linear()(7) == 7.0);
  CHECK(CostFunction::power(2.0)(3) == 9.0);
  CHECK(CostFunction::power(0.5)(4) == doctest::Approx(2.0));
  CHECK(CostFunction::logarithmic()(1) == doctest::Approx(std::log(2.0)));
  CHECK(CostFunction::tabulated({5.0, 1.0})(2) == 1.0);
}

TEST_CASE("bundled cost functions are strictly increasing and positive") {
  for (const CostFunction& g : bundled_cost_functions(200)) {
    CAPTURE(g.kind_name());
    CHECK(validate_cost_function(g));
    for (int d = 1; d <= g.domain_max(); ++d) REQUIRE(g(d) > 0.0);
  }
}

TEST_CASE("validate_cost_function rejects flat and decreasing tables") {
  CHECK_FALSE(validate_cost_function(CostFunction::tabulated({1.0, 1.0, 1.0})));
  CHECK_FALSE(validate_cost_function(CostFunction::tabulated({3.0, 2.0, 1.0})));
  CHECK(validate_cost_function(CostFunction::tabulated({1.0, 1.5, 4.0})));
}

TEST_CASE("cost functions reject distances outside their domain") {
  const CostFunction g = CostFunction::linear(5);
  CHECK_THROWS_AS(g(0), std::domain_error);
  CHECK_THROWS_AS(g(6), std::domain_error);
  CHECK_NOTHROW(g(5));
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(CostFunction::power(0.0), std::domain_error);
  CHECK_THROWS_AS(CostFunction::power(-1.0), std::domain_error);
  CHECK_THROWS_AS(CostFunction::linear(0), std::domain_error);
  CHECK_THROWS_AS(make_cost_function("cubic"), std::domain_error);
  CHECK(make_cost_function("log").kind() == CostKind::logarithmic);
}
