#pragma once

#include <string>
#include <vector>

namespace wordorder {

enum class CostKind { linear, power, logarithmic, tabulated };

/// Dependency-length cost g(d), defined on the integer distances 1..domain_max.
///
/// The three analytic kinds are strictly increasing and positive by construction.
/// `tabulated` stores explicit values and carries no such guarantee; it exists so
/// that callers can feed a deliberately broken g into the validators.
class CostFunction {
public:
  static constexpr int kDefaultDomainMax = 1024;

  static CostFunction linear(int domain_max = kDefaultDomainMax);
  static CostFunction power(double exponent, int domain_max = kDefaultDomainMax);
  static CostFunction logarithmic(int domain_max = kDefaultDomainMax);
  /// g(d) = values[d - 1]; domain_max = values.size().
  static CostFunction tabulated(std::vector<double> values);

  /// Throws std::domain_error when d is outside [1, domain_max].
  double operator()(int d) const;

  CostKind kind() const { return kind_; }
  double exponent() const { return exponent_; }
  int domain_max() const { return domain_max_; }

  /// "linear", "power", "logarithmic" or "table".
  std::string kind_name() const;

private:
  CostFunction(CostKind kind, double exponent, int domain_max, std::vector<double> table);

  CostKind kind_;
  double exponent_;
  int domain_max_;
  std::vector<double> table_;
};

/// True iff g(d+1) > g(d) for every d in [1, domain_max - 1].
bool validate_cost_function(const CostFunction& g);

/// linear, power with exponents {0.5, 1, 2, 3}, logarithmic.
std::vector<CostFunction> bundled_cost_functions(int domain_max = CostFunction::kDefaultDomainMax);

/// Parses "linear", "power", "logarithmic" (alias "log").
CostFunction make_cost_function(const std::string& kind, double exponent = 1.0,
                                int domain_max = CostFunction::kDefaultDomainMax);

}  // namespace wordorder
