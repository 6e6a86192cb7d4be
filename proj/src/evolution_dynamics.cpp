#include "wordorder/evolution_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>


namespace wordorder {

namespace {

WordOrder swapped(WordOrder order, std::size_t first) {
  std::string symbols(to_string(order));
  std::swap(symbols[first], symbols[first + 1]);
  return *parse_word_order(symbols);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

bool RingGraph::adjacent(WordOrder a, WordOrder b) const {
  const auto n = neighbors_of(a);
  return n[0] == b || n[1] == b;
}

RingGraph build_ring() {
  RingGraph ring{};
  for (const WordOrder order : kAllOrders) {
    ring.neighbors[static_cast<std::size_t>(index_of(order))] = {swapped(order, 1),
                                                                 swapped(order, 0)};
  }
  WordOrder previous = WordOrder::SOV;
  WordOrder current = WordOrder::SOV;
  for (std::size_t k = 0; k < kOrderCount; ++k) {
    ring.cycle[k] = current;
    const auto n = ring.neighbors_of(current);
    const WordOrder next = (k == 0 || n[0] != previous) ? n[0] : n[1];
    previous = std::exchange(current, next);
  }
  return ring;
}

Eigen::Matrix<int, kOrderCount, kOrderCount> ring_distances(const RingGraph& ring) {
  Eigen::Matrix<int, kOrderCount, kOrderCount> dist;
  dist.setConstant(-1);
  for (const WordOrder source : kAllOrders) {
    const int s = index_of(source);
    std::vector<WordOrder> frontier{source};
    dist(s, s) = 0;
    for (int depth = 1; !frontier.empty(); ++depth) {
      std::vector<WordOrder> next;
      for (const WordOrder u : frontier) {
        for (const WordOrder v : ring.neighbors_of(u)) {
          if (dist(s, index_of(v)) < 0) {
            dist(s, index_of(v)) = depth;
            next.push_back(v);
          }
        }
      }
      frontier = std::move(next);
    }
  }
  return dist;
}

ChainSpec make_chain_spec(const ConstituentLayout& layout, const CostFunction& g,
                          const EnergyParams& params, double beta) {
  return {energy_landscape(layout, g, params), beta, params};
}

OrderMatrix transition_matrix(const ChainSpec& spec, const RingGraph& ring) {
  if (!(spec.beta >= 0.0) || !std::isfinite(spec.beta)) {
    throw std::domain_error("beta must be a finite nonnegative number");
  }
  OrderMatrix transition = OrderMatrix::Zero();
  for (const WordOrder u : kAllOrders) {
    const int i = index_of(u);
    double moved = 0.0;
    for (const WordOrder v : ring.neighbors_of(u)) {
      const int j = index_of(v);
      const double rise = spec.energy(j) - spec.energy(i);
      const double accept = rise <= 0.0 ? 1.0 : std::exp(-spec.beta * rise);
      transition(i, j) += 0.5 * accept;
      moved += 0.5 * accept;
    }
    transition(i, i) = 1.0 - moved;
  }
  return transition;
}

OrderVector stationary_distribution(const OrderMatrix& transition) {
  if ((transition.array() < 0.0).any() ||
      ((transition.rowwise().sum().array() - 1.0).abs() > 1e-12).any()) {
    throw ChainError("transition matrix is not row-stochastic");
  }

  // Irreducible iff every state reaches every other through positive entries.
  Eigen::Matrix<bool, kOrderCount, kOrderCount> reach =
      (transition.array() > 0.0).matrix() ||
      Eigen::Matrix<bool, kOrderCount, kOrderCount>::Identity();
  for (int k = 0; k < kOrderCount; ++k) {
    for (int i = 0; i < kOrderCount; ++i) {
      for (int j = 0; j < kOrderCount; ++j) {
        reach(i, j) = reach(i, j) || (reach(i, k) && reach(k, j));
      }
    }
  }
  if (!reach.all()) throw ChainError("chain is reducible; stationary distribution not unique");

  // Grassmann-Taksar-Heyman elimination: Gaussian elimination on the censored
  // chains, with pivots formed as sums of off-diagonal mass instead of 1 - P(k,k).
  // No subtractions, so tiny uphill probabilities keep full relative accuracy.
  OrderMatrix work = transition;
  for (int k = kOrderCount - 1; k > 0; --k) {
    const double leaving = work.row(k).head(k).sum();
    if (!(leaving > 0.0)) throw ChainError("stationary elimination hit a zero pivot");
    work.col(k).head(k) /= leaving;
    work.topLeftCorner(k, k) += work.col(k).head(k) * work.row(k).head(k);
  }
  OrderVector pi;
  pi(0) = 1.0;
  for (int k = 1; k < kOrderCount; ++k) pi(k) = pi.head(k).dot(work.col(k).head(k));
  return pi / pi.sum();
}

double detailed_balance_residual(const OrderVector& pi, const OrderMatrix& transition) {
  const OrderMatrix flow = pi.asDiagonal() * transition;
  return (flow - flow.transpose()).cwiseAbs().maxCoeff();
}

double total_variation(const OrderVector& p, const OrderVector& q) {
  return 0.5 * (p - q).cwiseAbs().sum();
}

std::vector<WordOrder> global_minima(const OrderVector& energy, double tolerance) {
  const double lowest = energy.minCoeff();
  std::vector<WordOrder> minima;
  for (const WordOrder order : kAllOrders) {
    if (energy(index_of(order)) <= lowest + tolerance) minima.push_back(order);
  }
  return minima;
}

std::vector<std::vector<WordOrder>> local_minima(const OrderVector& energy, const RingGraph& ring,
                                                 double tolerance) {
  std::array<double, kOrderCount> along{};
  for (std::size_t k = 0; k < kOrderCount; ++k) along[k] = energy(index_of(ring.cycle[k]));
  const auto equal = [tolerance](double a, double b) { return std::abs(a - b) <= tolerance; };
  const auto at = [&along](std::size_t k) { return along[k % kOrderCount]; };

  // Start at a run boundary so no run wraps past the end of the scan.
  std::size_t start = kOrderCount;
  for (std::size_t k = 0; k < kOrderCount; ++k) {
    if (!equal(along[k], at(k + kOrderCount - 1))) {
      start = k;
      break;
    }
  }
  std::vector<std::vector<WordOrder>> minima;
  if (start == kOrderCount) return minima;

  std::size_t k = start;
  while (k < start + kOrderCount) {
    std::size_t end = k;
    while (end + 1 < start + kOrderCount && equal(at(end + 1), at(k))) ++end;
    if (at(k + kOrderCount - 1) > at(k) && at(end + 1) > at(k)) {
      std::vector<WordOrder> plateau;
      for (std::size_t j = k; j <= end; ++j) plateau.push_back(ring.cycle[j % kOrderCount]);
      minima.push_back(std::move(plateau));
    }
    k = end + 1;
  }
  return minima;
}

int count_local_minima(const OrderVector& energy, const RingGraph& ring, double tolerance) {
  return static_cast<int>(local_minima(energy, ring, tolerance).size());
}

Dominance classify_dominance(const OrderVector& pi, double theta) {
  if (!(theta > 0.5 && theta <= 1.0)) {
    throw std::domain_error("dominance threshold theta must lie in (0.5, 1]");
  }
  for (const WordOrder order : kAllOrders) {
    if (pi(index_of(order)) >= theta) return order;
  }
  return std::nullopt;
}

long count_reversions(std::span<const WordOrder> states) {
  long reversions = 0;
  bool seen_sov = false;
  bool reached_svo = false;
  for (const WordOrder state : states) {
    if (state == WordOrder::SOV) {
      if (reached_svo) ++reversions;
      seen_sov = true;
      reached_svo = false;
    } else if (state == WordOrder::SVO && seen_sov) {
      reached_svo = true;
    }
  }
  return reversions;
}

OrderVector TrajectoryStats::frequencies() const {
  OrderVector freq;
  long total = 0;
  for (const long c : visit_counts) total += c;
  for (int i = 0; i < kOrderCount; ++i) {
    freq(i) = total > 0 ? static_cast<double>(visit_counts[static_cast<std::size_t>(i)]) / total
                        : 0.0;
  }
  return freq;
}

Trajectory simulate_trajectory(const ChainSpec& spec, const RingGraph& ring, long steps,
                               std::uint64_t seed, const TrajectoryOptions& options) {
  if (steps < 1) throw std::domain_error("a trajectory needs steps >= 1");
  if (!(spec.beta >= 0.0) || !std::isfinite(spec.beta)) {
    throw std::domain_error("beta must be a finite nonnegative number");
  }
  if (options.window < 1) throw std::domain_error("dominance window must be >= 1");

  std::mt19937_64 rng(seed);
  Trajectory trajectory;
  trajectory.states.reserve(static_cast<std::size_t>(steps));

  WordOrder current = WordOrder::SOV;
  trajectory.states.push_back(current);
  for (long step = 1; step < steps; ++step) {
    const WordOrder proposal = ring.neighbors_of(current)[rng() & 1U];
    const double rise = spec.energy(index_of(proposal)) - spec.energy(index_of(current));
    const double u = uniform01(rng);
    if (rise <= 0.0 || u < std::exp(-spec.beta * rise)) current = proposal;
    trajectory.states.push_back(current);
  }

  TrajectoryStats& stats = trajectory.stats;
  for (const WordOrder state : trajectory.states) {
    ++stats.visit_counts[static_cast<std::size_t>(index_of(state))];
  }
  stats.reversion_count = count_reversions(trajectory.states);
  stats.window = options.window;
  for (long begin = 0; begin < steps; begin += options.window) {
    const long end = std::min(steps, begin + options.window);
    OrderVector freq = OrderVector::Zero();
    for (long t = begin; t < end; ++t) {
      freq(index_of(trajectory.states[static_cast<std::size_t>(t)])) += 1.0;
    }
    freq /= static_cast<double>(end - begin);
    stats.window_dominance.push_back(classify_dominance(freq, options.theta));
  }
  return trajectory;
}

}  // namespace wordorder
