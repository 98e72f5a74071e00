#include "uavmission/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "uavmission/errors.hpp"

namespace uavmission {

WeightMatrix::WeightMatrix(int num_targets)
    : n_(num_targets),
      w_(static_cast<std::size_t>((num_targets + 2) * (num_targets + 2)), kNoEdge) {
  if (num_targets < 1) throw InvalidInput("weight matrix needs at least one target");
}

bool WeightMatrix::is_edge(int tail, int head) const {
  if (tail < 0 || head < 0 || tail > n_ + 1 || head > n_ + 1) return false;
  if (tail == head) return false;
  if (head == 0 || tail == n_ + 1) return false;
  if (tail == 0 && head == n_ + 1) return false;
  return true;
}

double WeightMatrix::at(int tail, int head) const {
  if (tail < 0 || head < 0 || tail > n_ + 1 || head > n_ + 1) {
    throw InvalidInput("vertex index out of range");
  }
  return w_[static_cast<std::size_t>(tail * (n_ + 2) + head)];
}

void WeightMatrix::set(int tail, int head, double seconds) {
  if (!is_edge(tail, head)) {
    throw InvalidInput("(" + std::to_string(tail) + ", " + std::to_string(head) +
                       ") is not an edge of the mission graph");
  }
  w_[static_cast<std::size_t>(tail * (n_ + 2) + head)] = seconds;
}

double path_cost(const WeightMatrix& wm, const std::vector<int>& order) {
  double cost = 0.0;
  int prev = 0;
  for (int v : order) {
    cost += wm.at(prev, v);
    prev = v;
  }
  return cost + wm.at(prev, wm.finish_vertex());
}

bool is_permutation_of_targets(const std::vector<int>& order, int n) {
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : order) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

WeightMatrix build_weight_matrix(const MissionConfig& cfg, double pos_tol_m) {
  cfg.validate();
  const int n = cfg.num_targets();
  WeightMatrix wm(n);
  for (int tail = 0; tail <= n; ++tail) {
    for (int head = 1; head <= n + 1; ++head) {
      if (!wm.is_edge(tail, head)) continue;
      SubTrajectory stage = solve_stage(cfg.vertex_position(tail), cfg.vertex_position(head),
                                        cfg.vertex_volume(tail), cfg, pos_tol_m);
      wm.set(tail, head, stage.duration_s);
      wm.stage_solutions().emplace(std::pair{tail, head}, std::move(stage));
    }
  }
  return wm;
}

WeightMatrix distance_weight_matrix(const MissionConfig& cfg) {
  const int n = cfg.num_targets();
  WeightMatrix wm(n);
  for (int tail = 0; tail <= n; ++tail) {
    for (int head = 1; head <= n + 1; ++head) {
      if (!wm.is_edge(tail, head)) continue;
      wm.set(tail, head,
             distance(cfg.vertex_position(tail), cfg.vertex_position(head)) / cfg.v_max);
    }
  }
  return wm;
}

VisitOrder solve_order_exhaustive(const WeightMatrix& wm) {
  const int n = wm.num_targets();
  if (n > kMaxExhaustiveTargets) {
    throw TooLarge("exhaustive ordering limited to " + std::to_string(kMaxExhaustiveTargets) +
                   " targets, got " + std::to_string(n));
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  VisitOrder best{perm, path_cost(wm, perm)};
  while (std::next_permutation(perm.begin(), perm.end())) {
    const double cost = path_cost(wm, perm);
    if (cost < best.cost_s) best = {perm, cost};
  }
  return best;
}

VisitOrder solve_order_heuristic(const WeightMatrix& wm) {
  const int n = wm.num_targets();
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
  int current = 0;
  for (int step = 0; step < n; ++step) {
    int next = -1;
    for (int v = 1; v <= n; ++v) {
      if (visited[static_cast<std::size_t>(v)]) continue;
      if (next < 0 || wm.at(current, v) < wm.at(current, next)) next = v;
    }
    visited[static_cast<std::size_t>(next)] = true;
    order.push_back(next);
    current = next;
  }

  // Local search on the open path until neither move improves it:
  //  - 2-opt: reverse order[i..k];
  //  - Or-opt: move a run of 1-3 consecutive targets to another position.
  // Weights are asymmetric, so every candidate is costed in full.
  double cost = path_cost(wm, order);
  auto accept = [&](std::vector<int>& candidate) {
    const double candidate_cost = path_cost(wm, candidate);
    if (candidate_cost < cost - 1e-12 * std::max(1.0, cost)) {
      order = std::move(candidate);
      cost = candidate_cost;
      return true;
    }
    return false;
  };
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 0; i + 1 < n; ++i) {
      for (int k = i + 1; k < n; ++k) {
        std::vector<int> candidate = order;
        std::reverse(candidate.begin() + i, candidate.begin() + k + 1);
        improved = accept(candidate) || improved;
      }
    }
    for (int len = 1; len <= std::min(3, n - 1); ++len) {
      for (int i = 0; i + len <= n; ++i) {
        for (int dest = 0; dest + len <= n; ++dest) {
          if (dest == i) continue;
          std::vector<int> candidate = order;
          std::vector<int> run(candidate.begin() + i, candidate.begin() + i + len);
          candidate.erase(candidate.begin() + i, candidate.begin() + i + len);
          candidate.insert(candidate.begin() + dest, run.begin(), run.end());
          improved = accept(candidate) || improved;
        }
      }
    }
  }
  return {order, cost};
}

VisitOrder solve_order_distance_tsp(const MissionConfig& cfg, const WeightMatrix& true_weights) {
  const WeightMatrix flight = distance_weight_matrix(cfg);
  VisitOrder out = cfg.num_targets() <= kMaxExhaustiveTargets ? solve_order_exhaustive(flight)
                                                              : solve_order_heuristic(flight);
  out.cost_s = path_cost(true_weights, out.order);
  return out;
}

}  // namespace uavmission
