#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "wordorder/ordering_optimizer.hpp"
#include "wordorder/orders.hpp"

namespace wordorder {

/// The six orders joined by single adjacent transpositions. This graph is the
/// 6-cycle SOV-SVO-VSO-VOS-OVS-OSV-SOV.
struct RingGraph {
  /// neighbors[o][0] swaps the last two symbols of o, neighbors[o][1] the first two.
  std::array<std::array<WordOrder, 2>, kOrderCount> neighbors;
  /// Nodes in cycle order starting at SOV and heading to SVO.
  std::array<WordOrder, kOrderCount> cycle;

  std::span<const WordOrder, 2> neighbors_of(WordOrder order) const {
    return neighbors[static_cast<std::size_t>(index_of(order))];
  }
  bool adjacent(WordOrder a, WordOrder b) const;
};

RingGraph build_ring();

/// Length of the shortest ring path between every pair of orders.
Eigen::Matrix<int, kOrderCount, kOrderCount> ring_distances(const RingGraph& ring);

struct ChainSpec {
  OrderVector energy = OrderVector::Zero();
  double beta = 2.0;
  EnergyParams params;
};

/// Energy landscape of `layout` under `params`, packaged with an inverse temperature.
ChainSpec make_chain_spec(const ConstituentLayout& layout, const CostFunction& g,
                          const EnergyParams& params, double beta);

class ChainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Metropolis chain on the ring: propose each neighbor with probability 1/2 and
/// accept with min(1, exp(-beta * (E(v) - E(u)))). Rejected mass stays put.
OrderMatrix transition_matrix(const ChainSpec& spec, const RingGraph& ring);

/// Exact solution of pi P = pi, sum(pi) = 1. Throws ChainError when P is not
/// row-stochastic or the chain is reducible.
OrderVector stationary_distribution(const OrderMatrix& transition);

/// Largest |pi(u) P(u,v) - pi(v) P(v,u)| over all pairs.
double detailed_balance_residual(const OrderVector& pi, const OrderMatrix& transition);

double total_variation(const OrderVector& p, const OrderVector& q);

/// Orders attaining the minimum energy within `tolerance`.
std::vector<WordOrder> global_minima(const OrderVector& energy, double tolerance = 1e-12);

/// Local minima along the ring. A maximal run of equal energies (within
/// `tolerance`) flanked on both sides by strictly higher energies counts once;
/// a landscape that is flat everywhere has none.
int count_local_minima(const OrderVector& energy, const RingGraph& ring,
                       double tolerance = 1e-12);

/// The minima counted by count_local_minima, each as its plateau of orders in
/// ring order.
std::vector<std::vector<WordOrder>> local_minima(const OrderVector& energy, const RingGraph& ring,
                                                 double tolerance = 1e-12);

/// nullopt means no dominant order.
using Dominance = std::optional<WordOrder>;

/// The order holding at least `theta` of the mass, if any. theta must lie in (0.5, 1].
Dominance classify_dominance(const OrderVector& pi, double theta);

/// Completed SOV -> SVO -> SOV round trips. Detours through other orders are allowed.
long count_reversions(std::span<const WordOrder> states);

struct TrajectoryStats {
  std::array<long, kOrderCount> visit_counts{};
  long reversion_count = 0;
  long window = 0;
  std::vector<Dominance> window_dominance;

  OrderVector frequencies() const;
};

struct Trajectory {
  std::vector<WordOrder> states;
  TrajectoryStats stats;
};

struct TrajectoryOptions {
  double theta = 2.0 / 3.0;
  long window = 10000;
};

/// Runs `steps` states of the chain from SOV (the first state is SOV itself).
/// Identical seeds give identical trajectories.
Trajectory simulate_trajectory(const ChainSpec& spec, const RingGraph& ring, long steps,
                               std::uint64_t seed, const TrajectoryOptions& options = {});

}  // namespace wordorder
