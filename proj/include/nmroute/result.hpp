#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "nmroute/graph.hpp"

namespace nmroute {

struct SearchOptions {
  bool dominance = true;
  bool look_back = false;
  bool look_ahead = false;  // used by the exhaustive baseline only
  std::uint32_t k = 1;
  std::optional<std::uint32_t> max_hops;  // default: vertex count - 1
  std::optional<double> timeout_s;        // per-query wall-clock budget
};

enum class RouteStatus {
  found,
  no_feasible_path,
  unreachable,
  negative_cycle,
  timeout,
};

const char* to_string(RouteStatus s);

struct Counters {
  // End-to-end candidates submitted to constraints validation (level-based
  // solvers) or path candidates built during enumeration (exhaustive
  // baselines). Realizes the traversed-paths benchmark metric.
  std::uint64_t traversed_paths = 0;
  std::uint64_t dominance_pruned = 0;
  std::uint64_t infeasibility_pruned = 0;
  std::uint64_t neighborhoods_built = 0;
};

struct RouteResult {
  RouteStatus status = RouteStatus::unreachable;
  std::vector<PathLabel> paths;  // up to k, best first
  Counters counters;
  double elapsed_us = 0.0;

  bool found() const { return status == RouteStatus::found; }
  const PathLabel& best() const { return paths.front(); }
};

// Result ordering: cost, then hop count, then lexicographic vertex order.
// Ties are broken this way everywhere so seeded runs are reproducible.
inline bool path_order(const PathLabel& a, const PathLabel& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  if (a.hop_count != b.hop_count) return a.hop_count < b.hop_count;
  return a.vertices < b.vertices;
}

class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(std::optional<double> seconds) {
    if (seconds)
      at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(*seconds));
  }
  bool expired() const {
    return at_ && std::chrono::steady_clock::now() > *at_;
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

}  // namespace nmroute
