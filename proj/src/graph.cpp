#include "nmroute/graph.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace nmroute {

Graph::Graph(bool directed, std::uint32_t vertex_count, std::uint32_t l_arity,
             std::uint32_t p_arity)
    : directed_(directed),
      n_(vertex_count),
      l_arity_(l_arity),
      p_arity_(p_arity),
      out_(vertex_count) {
  if (directed_) in_.resize(vertex_count);
}

std::uint32_t Graph::add_edge(VertexId u, VertexId v, EdgeAttr attr) {
  if (u >= n_ || v >= n_) throw std::invalid_argument("vertex id out of range");
  if (u == v) throw std::invalid_argument("self-loop edges are rejected");
  if (attr.link_metrics.size() != l_arity_ ||
      attr.path_metrics.size() != p_arity_)
    throw std::invalid_argument("edge metric arity mismatch");
  if (!(attr.capacity >= 0.0) || !(attr.cost >= 0.0))
    throw std::invalid_argument("capacity and cost must be non-negative");
  for (double w : attr.path_metrics)
    if (!std::isfinite(w))
      throw std::invalid_argument("path metrics must be finite");

  const auto id = static_cast<std::uint32_t>(edges_.size());
  residual_.push_back(attr.capacity);
  out_[u].push_back({v, id});
  if (directed_) {
    in_[v].push_back({u, id});
  } else {
    out_[v].push_back({u, id});
  }
  edges_.push_back({u, v, std::move(attr)});
  return id;
}

void Graph::allocate(std::uint32_t edge_id, double amount) {
  if (amount > residual_[edge_id] + 1e-12)
    throw std::invalid_argument("allocation exceeds residual capacity");
  residual_[edge_id] = std::max(0.0, residual_[edge_id] - amount);
}

void Graph::release(std::uint32_t edge_id, double amount) {
  residual_[edge_id] =
      std::min(edges_[edge_id].attr.capacity, residual_[edge_id] + amount);
}

void Graph::reset_residuals() {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    residual_[i] = edges_[i].attr.capacity;
}

void Graph::set_coords(std::vector<std::pair<double, double>> coords) {
  if (coords.size() != n_) throw std::invalid_argument("coords size mismatch");
  coords_ = std::move(coords);
}

void Graph::set_vertex_capacity(std::vector<double> caps) {
  if (caps.size() != n_)
    throw std::invalid_argument("vertex capacity size mismatch");
  vertex_capacity_ = std::move(caps);
}

Graph Graph::unit_cost_copy() const {
  Graph g(directed_, n_, l_arity_, p_arity_);
  for (const auto& e : edges_) {
    EdgeAttr attr = e.attr;
    attr.cost = 1.0;
    g.add_edge(e.u, e.v, std::move(attr));
  }
  g.residual_ = residual_;
  g.coords_ = coords_;
  g.vertex_capacity_ = vertex_capacity_;
  return g;
}

bool edge_feasible(const EdgeAttr& attr, const ConstraintSpec& spec,
                   double residual) {
  if (residual < spec.demand) return false;
  for (const auto& b : spec.link_bounds) {
    if (b.metric >= attr.link_metrics.size())
      throw std::invalid_argument("link bound metric index out of range");
    const double w = attr.link_metrics[b.metric];
    if (b.dir == BoundDir::at_least ? w < b.bound : w > b.bound) return false;
  }
  return true;
}

std::vector<std::uint32_t> canonical_edges(const Graph& g,
                                           std::span<const VertexId> vertices,
                                           const ConstraintSpec& spec) {
  std::vector<std::uint32_t> ids;
  if (vertices.size() < 2) return ids;
  ids.reserve(vertices.size() - 1);
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    const VertexId u = vertices[i], v = vertices[i + 1];
    const std::uint32_t none = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t best = none;
    bool best_ok = false;
    for (const auto& arc : g.out_arcs(u)) {
      if (arc.to != v) continue;
      const bool ok = edge_feasible(g, arc.edge_id, spec);
      if (best != none) {
        // Feasible parallel edges win over infeasible ones, then the
        // cheapest by (cost, path_metrics, id).
        if (best_ok && !ok) continue;
        if (best_ok == ok) {
          const auto& a = g.edge(arc.edge_id).attr;
          const auto& b = g.edge(best).attr;
          if (std::tie(a.cost, a.path_metrics, arc.edge_id) >=
              std::tie(b.cost, b.path_metrics, best))
            continue;
        }
      }
      best = arc.edge_id;
      best_ok = ok;
    }
    if (best == none)
      throw std::invalid_argument("consecutive vertices are not adjacent");
    ids.push_back(best);
  }
  return ids;
}

PathLabel path_distance(const Graph& g, std::span<const VertexId> vertices,
                        const ConstraintSpec& spec) {
  if (vertices.empty())
    throw std::invalid_argument("path must contain at least one vertex");
  PathLabel label;
  label.vertices.assign(vertices.begin(), vertices.end());
  label.hop_count = static_cast<std::uint32_t>(vertices.size() - 1);
  label.path_dist.assign(g.path_arity(), 0.0);
  for (std::uint32_t id : canonical_edges(g, vertices, spec)) {
    const auto& attr = g.edge(id).attr;
    label.cost += attr.cost;
    for (std::size_t m = 0; m < attr.path_metrics.size(); ++m)
      label.path_dist[m] += attr.path_metrics[m];
  }
  return label;
}

bool path_feasible(const PathLabel& label, const ConstraintSpec& spec) {
  if (spec.path_bounds.size() > label.path_dist.size())
    throw std::invalid_argument("path bound arity mismatch");
  for (std::size_t m = 0; m < spec.path_bounds.size(); ++m)
    if (label.path_dist[m] > spec.path_bounds[m]) return false;
  return true;
}

}  // namespace nmroute
