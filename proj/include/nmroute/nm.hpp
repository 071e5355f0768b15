#pragma once

#include <cstdint>
#include <vector>

#include "nmroute/graph.hpp"
#include "nmroute/result.hpp"

namespace nmroute {

struct UnreachableError : std::runtime_error {
  UnreachableError() : std::runtime_error("destination is unreachable") {}
};

struct MaxLengthExceeded : std::runtime_error {
  MaxLengthExceeded()
      : std::runtime_error("neighborhood count would reach vertex count") {}
};

// Ordered vertex levels grown from the source over link-feasible edges.
// Level 0 holds exactly the source; level k holds the vertices reachable by
// some feasible walk of exactly k hops. With look-back enabled each level
// also records, per path metric, the best accumulated distance from the
// source at that hop count, and drops vertices whose best distances already
// violate a path bound.
class Neighborhoods {
 public:
  struct Level {
    std::vector<VertexId> members;       // ascending
    std::vector<char> present;           // size n
    std::vector<double> best_from_source;  // size n * p when look-back is on
  };

  Neighborhoods(const Graph& g, VertexId src, VertexId dst,
                const ConstraintSpec& spec, const SearchOptions& opts);

  std::size_t level_count() const { return levels_.size(); }
  const Level& level(std::size_t i) const { return levels_[i]; }
  VertexId source() const { return src_; }
  VertexId destination() const { return dst_; }
  bool look_back() const { return look_back_; }

  bool in_level(std::size_t i, VertexId v) const {
    return levels_[i].present[v] != 0;
  }
  // Best source distance for metric m at the given level (look-back only).
  double best_dist(std::size_t i, VertexId v, std::uint32_t m) const {
    return levels_[i].best_from_source[std::size_t{v} * p_ + m];
  }

  bool dst_in_last_level() const {
    return in_level(levels_.size() - 1, dst_);
  }

  // Appends one level. Throws MaxLengthExceeded once the level count would
  // exceed the vertex count.
  void extend(const Graph& g, const ConstraintSpec& spec);

 private:
  VertexId src_, dst_;
  std::uint32_t n_, p_;
  bool look_back_;
  std::vector<double> bounds_;  // active path bounds (look-back exclusions)
  std::vector<Level> levels_;
};

// Grows levels until the destination appears. Throws UnreachableError when
// the destination never shows up within vertex-count levels.
Neighborhoods build_neighborhoods(const Graph& g, VertexId src, VertexId dst,
                                  const ConstraintSpec& spec,
                                  const SearchOptions& opts);

inline Neighborhoods extend_neighborhoods(Neighborhoods nh, const Graph& g,
                                          const ConstraintSpec& spec,
                                          const SearchOptions&) {
  nh.extend(g, spec);
  return nh;
}

// True iff a is strictly better than b in at least one component of
// (path_dist..., cost) and no worse in all others.
bool dominates(const PathLabel& a, const PathLabel& b);

// Enumerates all simple path candidates of exactly (level count - 1) hops
// from source to destination, expanding each endpoint only into the
// preceding level. Dominance and look-back pruning apply per options.
// Candidates are returned in result order and are not validated against the
// path bounds.
std::vector<PathLabel> backward_pass(const Neighborhoods& nh, const Graph& g,
                                     const ConstraintSpec& spec,
                                     const SearchOptions& opts);

// Exact constrained shortest path: iterates level building, backward passes
// and constraints validation in ascending hop count, keeping the k best
// feasible paths by (cost, hops, lexicographic). With uniform edge costs the
// sweep stops at the first hop count yielding k feasible paths.
RouteResult solve_csp(const Graph& g, VertexId src, VertexId dst,
                      const ConstraintSpec& spec, const SearchOptions& opts);

// True iff dst is reachable from src over link-feasible edges.
bool feasibly_reachable(const Graph& g, VertexId src, VertexId dst,
                        const ConstraintSpec& spec);

}  // namespace nmroute
