#pragma once

#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "uavmission/config.hpp"
#include "uavmission/subtrajectory.hpp"

namespace uavmission {

inline constexpr double kNoEdge = std::numeric_limits<double>::infinity();

/// Stage durations over the mission graph with vertices
/// {0 = start, 1..N = targets, N+1 = finish}. Entry (i, j) is the minimum
/// time to fly from vertex i to vertex j while delivering the data collected
/// at i. Edges into the start, out of the finish, self-loops and the direct
/// start -> finish edge are absent (kNoEdge).
class WeightMatrix {
 public:
  WeightMatrix() = default;
  explicit WeightMatrix(int num_targets);

  int num_targets() const { return n_; }
  int num_vertices() const { return n_ + 2; }
  int finish_vertex() const { return n_ + 1; }

  double at(int tail, int head) const;
  void set(int tail, int head, double seconds);

  /// True when (tail, head) belongs to the mission graph's edge set.
  bool is_edge(int tail, int head) const;

  const std::map<std::pair<int, int>, SubTrajectory>& stage_solutions() const {
    return stages_;
  }
  std::map<std::pair<int, int>, SubTrajectory>& stage_solutions() { return stages_; }

 private:
  int n_ = 0;
  std::vector<double> w_;
  std::map<std::pair<int, int>, SubTrajectory> stages_;
};

/// A visit order I = [I_1, ..., I_N] (1-based target ids) and its path cost.
struct VisitOrder {
  std::vector<int> order;
  double cost_s = 0.0;
};

/// Sum of weights along start -> I_1 -> ... -> I_N -> finish.
double path_cost(const WeightMatrix& wm, const std::vector<int>& order);

/// True when `order` is a permutation of 1..n.
bool is_permutation_of_targets(const std::vector<int>& order, int n);

/// Solves every stage of the graph and records durations and flight plans.
WeightMatrix build_weight_matrix(const MissionConfig& cfg, double pos_tol_m = kDefaultPosTolM);

/// Pure flight-time weights (distance / v_max) on the same graph.
WeightMatrix distance_weight_matrix(const MissionConfig& cfg);

inline constexpr int kMaxExhaustiveTargets = 10;

/// Exact path TSP by enumerating permutations in lexicographic order; the
/// first minimum wins ties. Throws TooLarge for N > kMaxExhaustiveTargets.
VisitOrder solve_order_exhaustive(const WeightMatrix& wm);

/// Nearest-neighbour construction from the start vertex (ties to the lowest
/// index), then 2-opt reversals and Or-opt relocations of runs of up to three
/// targets until no move improves the path. O(N^2) construction; each
/// improvement sweep costs O(N^3) on an asymmetric matrix.
VisitOrder solve_order_heuristic(const WeightMatrix& wm);

/// Order that minimizes total flying distance, ignoring data volumes.
/// Exhaustive for N <= kMaxExhaustiveTargets, heuristic above. The returned
/// cost is re-evaluated under `true_weights`.
VisitOrder solve_order_distance_tsp(const MissionConfig& cfg, const WeightMatrix& true_weights);

}  // namespace uavmission
