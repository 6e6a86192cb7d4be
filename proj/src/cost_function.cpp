#include "wordorder/cost_function.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace wordorder {

CostFunction::CostFunction(CostKind kind, double exponent, int domain_max,
                           std::vector<double> table)
    : kind_(kind), exponent_(exponent), domain_max_(domain_max), table_(std::move(table)) {
  if (domain_max_ < 1) {
    throw std::domain_error("cost function domain_max must be >= 1");
  }
}

CostFunction CostFunction::linear(int domain_max) {
  return CostFunction(CostKind::linear, 1.0, domain_max, {});
}

CostFunction CostFunction::power(double exponent, int domain_max) {
  if (!(exponent > 0.0) || !std::isfinite(exponent)) {
    throw std::domain_error("power cost function needs a positive finite exponent");
  }
  return CostFunction(CostKind::power, exponent, domain_max, {});
}

CostFunction CostFunction::logarithmic(int domain_max) {
  return CostFunction(CostKind::logarithmic, 1.0, domain_max, {});
}

CostFunction CostFunction::tabulated(std::vector<double> values) {
  const int size = static_cast<int>(values.size());
  return CostFunction(CostKind::tabulated, 1.0, size, std::move(values));
}

double CostFunction::operator()(int d) const {
  if (d < 1 || d > domain_max_) {
    throw std::domain_error("cost function evaluated at d=" + std::to_string(d) +
                            " outside [1, " + std::to_string(domain_max_) + "]");
  }
  switch (kind_) {
    case CostKind::linear:
      return static_cast<double>(d);
    case CostKind::power:
      return std::pow(static_cast<double>(d), exponent_);
    case CostKind::logarithmic:
      return std::log1p(static_cast<double>(d));
    case CostKind::tabulated:
      return table_[static_cast<std::size_t>(d - 1)];
  }
  throw std::logic_error("unreachable cost kind");
}

std::string CostFunction::kind_name() const {
  switch (kind_) {
    case CostKind::linear: return "linear";
    case CostKind::power: return "power";
    case CostKind::logarithmic: return "logarithmic";
    case CostKind::tabulated: return "table";
  }
  return "unknown";
}

bool validate_cost_function(const CostFunction& g) {
  for (int d = 1; d < g.domain_max(); ++d) {
    if (!(g(d + 1) > g(d))) return false;
  }
  return true;
}

std::vector<CostFunction> bundled_cost_functions(int domain_max) {
  return {CostFunction::linear(domain_max),        CostFunction::power(0.5, domain_max),
          CostFunction::power(1.0, domain_max),    CostFunction::power(2.0, domain_max),
          CostFunction::power(3.0, domain_max),    CostFunction::logarithmic(domain_max)};
}

CostFunction make_cost_function(const std::string& kind, double exponent, int domain_max) {
  if (kind == "linear") return CostFunction::linear(domain_max);
  if (kind == "power") return CostFunction::power(exponent, domain_max);
  if (kind == "logarithmic" || kind == "log") return CostFunction::logarithmic(domain_max);
  throw std::domain_error("unknown cost function kind '" + kind + "'");
}

}  // namespace wordorder
