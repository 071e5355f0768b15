#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nmroute {

using VertexId = std::uint32_t;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Per-edge attributes. `capacity` is the bandwidth pool shared with the
// reverse arc on undirected graphs; `link_metrics` are checked hop-by-hop
// against min/max bounds; `path_metrics` accumulate end-to-end; `cost` is
// the per-unit-flow objective scalar.
struct EdgeAttr {
  double capacity = 0.0;
  std::vector<double> link_metrics;
  std::vector<double> path_metrics;
  double cost = 0.0;
};

enum class BoundDir { at_least, at_most };

struct LinkBound {
  std::uint32_t metric = 0;
  BoundDir dir = BoundDir::at_most;
  double bound = 0.0;
};

// A routing request: bandwidth demand reserved on every edge of the chosen
// path, per-edge bounds on link metrics, and upper bounds on the additive
// path metrics. Capacity acts as an implicit at-least bound of `demand`.
struct ConstraintSpec {
  double demand = 1.0;
  std::vector<LinkBound> link_bounds;
  std::vector<double> path_bounds;

  void validate() const {
    if (!(demand > 0.0)) throw std::invalid_argument("demand must be > 0");
  }
};

// A partial or complete simple path with its accumulated distance vector.
struct PathLabel {
  std::vector<VertexId> vertices;
  std::uint32_t hop_count = 0;
  double cost = 0.0;
  std::vector<double> path_dist;
};

class Graph {
 public:
  struct Arc {
    VertexId to = 0;
    std::uint32_t edge_id = 0;
  };

  struct EdgeRec {
    VertexId u = 0;
    VertexId v = 0;
    EdgeAttr attr;
  };

  Graph(bool directed, std::uint32_t vertex_count, std::uint32_t l_arity,
        std::uint32_t p_arity);

  bool directed() const { return directed_; }
  std::uint32_t vertex_count() const { return n_; }
  std::uint32_t link_arity() const { return l_arity_; }
  std::uint32_t path_arity() const { return p_arity_; }

  // Adds one edge record (two symmetric arcs sharing a residual-capacity
  // cell when undirected). Self-loops are rejected. Returns the edge id.
  std::uint32_t add_edge(VertexId u, VertexId v, EdgeAttr attr);

  std::size_t edge_count() const { return edges_.size(); }
  const EdgeRec& edge(std::uint32_t id) const { return edges_[id]; }
  const std::vector<EdgeRec>& edges() const { return edges_; }

  std::span<const Arc> out_arcs(VertexId u) const { return out_[u]; }
  std::span<const Arc> in_arcs(VertexId u) const {
    return directed_ ? std::span<const Arc>(in_[u]) : out_arcs(u);
  }

  double residual(std::uint32_t edge_id) const { return residual_[edge_id]; }
  void allocate(std::uint32_t edge_id, double amount);
  void release(std::uint32_t edge_id, double amount);
  void reset_residuals();

  // Plane coordinates are kept only when topology generation supplies them.
  void set_coords(std::vector<std::pair<double, double>> coords);
  bool has_coords() const { return !coords_.empty(); }
  const std::vector<std::pair<double, double>>& coords() const {
    return coords_;
  }

  // Optional per-vertex capacity (CPU), used only by the embedding harness.
  void set_vertex_capacity(std::vector<double> caps);
  bool has_vertex_capacity() const { return !vertex_capacity_.empty(); }
  std::vector<double>& vertex_capacity() { return vertex_capacity_; }
  const std::vector<double>& vertex_capacity() const {
    return vertex_capacity_;
  }

  // Copy with every edge cost set to 1; turns the cost objective into hop
  // count so the solvers optimize provisioned bandwidth instead.
  Graph unit_cost_copy() const;

 private:
  bool directed_;
  std::uint32_t n_;
  std::uint32_t l_arity_;
  std::uint32_t p_arity_;
  std::vector<EdgeRec> edges_;
  std::vector<double> residual_;
  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<Arc>> in_;  // populated only when directed
  std::vector<std::pair<double, double>> coords_;
  std::vector<double> vertex_capacity_;
};

// True iff the edge can carry the demand at the given residual capacity and
// satisfies every link bound of the spec.
bool edge_feasible(const EdgeAttr& attr, const ConstraintSpec& spec,
                   double residual);

inline bool edge_feasible(const Graph& g, std::uint32_t edge_id,
                          const ConstraintSpec& spec) {
  return edge_feasible(g.edge(edge_id).attr, spec, g.residual(edge_id));
}

// Accumulates cost and path metrics along a vertex list. Parallel edges are
// resolved to the canonical choice (see canonical_edges). Does not check
// path bounds.
PathLabel path_distance(const Graph& g, std::span<const VertexId> vertices,
                        const ConstraintSpec& spec);

// True iff the accumulated path metrics satisfy every path bound.
bool path_feasible(const PathLabel& label, const ConstraintSpec& spec);

// Resolves a vertex list to edge ids, picking per hop the feasible parallel
// edge minimizing (cost, path_metrics..., edge_id). Throws if some
// consecutive pair is not adjacent via a feasible edge.
std::vector<std::uint32_t> canonical_edges(const Graph& g,
                                           std::span<const VertexId> vertices,
                                           const ConstraintSpec& spec);

}  // namespace nmroute
