#include "nmroute/nm.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace nmroute {

namespace {

void check_query(const Graph& g, VertexId src, VertexId dst,
                 const ConstraintSpec& spec) {
  spec.validate();
  if (src >= g.vertex_count() || dst >= g.vertex_count())
    throw std::invalid_argument("vertex id out of range");
  if (spec.path_bounds.size() != g.path_arity())
    throw std::invalid_argument("path bound arity mismatch");
  for (const auto& e : g.edges())
    for (double w : e.attr.path_metrics)
      if (w < 0.0)
        throw std::invalid_argument(
            "negative path metrics are not supported by this solver");
}

// Picks the continuation edge u->v: feasible arcs only, cheapest by
// (cost, path_metrics, id). Returns edge id or UINT32_MAX.
std::uint32_t best_arc(const Graph& g, VertexId u, VertexId v,
                       const ConstraintSpec& spec, bool incoming) {
  const std::uint32_t none = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t best = none;
  const auto arcs = incoming ? g.in_arcs(u) : g.out_arcs(u);
  for (const auto& arc : arcs) {
    if (arc.to != v) continue;
    if (!edge_feasible(g, arc.edge_id, spec)) continue;
    if (best != none) {
      const auto& a = g.edge(arc.edge_id).attr;
      const auto& b = g.edge(best).attr;
      if (std::tie(a.cost, a.path_metrics, arc.edge_id) >=
          std::tie(b.cost, b.path_metrics, best))
        continue;
    }
    best = arc.edge_id;
  }
  return best;
}

}  // namespace

Neighborhoods::Neighborhoods(const Graph& g, VertexId src, VertexId dst,
                             const ConstraintSpec& spec,
                             const SearchOptions& opts)
    : src_(src),
      dst_(dst),
      n_(g.vertex_count()),
      p_(g.path_arity()),
      look_back_(opts.look_back),
      bounds_(spec.path_bounds) {
  Level zero;
  zero.members = {src};
  zero.present.assign(n_, 0);
  zero.present[src] = 1;
  if (look_back_) zero.best_from_source.assign(std::size_t{n_} * p_, 0.0);
  levels_.push_back(std::move(zero));
}

void Neighborhoods::extend(const Graph& g, const ConstraintSpec& spec) {
  if (levels_.size() >= n_) throw MaxLengthExceeded();
  const Level& cur = levels_.back();
  Level next;
  next.present.assign(n_, 0);
  if (look_back_) next.best_from_source.assign(std::size_t{n_} * p_, kInf);

  std::vector<char> touched(n_, 0);
  for (VertexId u : cur.members) {
    for (const auto& arc : g.out_arcs(u)) {
      if (!edge_feasible(g, arc.edge_id, spec)) continue;
      touched[arc.to] = 1;
      if (look_back_) {
        const auto& pm = g.edge(arc.edge_id).attr.path_metrics;
        for (std::uint32_t m = 0; m < p_; ++m) {
          double d = cur.best_from_source[std::size_t{u} * p_ + m] + pm[m];
          double& slot = next.best_from_source[std::size_t{arc.to} * p_ + m];
          if (d < slot) slot = d;
        }
      }
    }
  }
  for (VertexId v = 0; v < n_; ++v) {
    if (!touched[v]) continue;
    if (look_back_) {
      bool violates = false;
      for (std::uint32_t m = 0; m < p_ && !violates; ++m)
        if (next.best_from_source[std::size_t{v} * p_ + m] > bounds_[m])
          violates = true;
      if (violates) continue;
    }
    next.present[v] = 1;
    next.members.push_back(v);
  }
  levels_.push_back(std::move(next));
}

Neighborhoods build_neighborhoods(const Graph& g, VertexId src, VertexId dst,
                                  const ConstraintSpec& spec,
                                  const SearchOptions& opts) {
  Neighborhoods nh(g, src, dst, spec, opts);
  while (!nh.dst_in_last_level()) {
    if (nh.level_count() >= g.vertex_count()) throw UnreachableError();
    nh.extend(g, spec);
  }
  return nh;
}

bool dominates(const PathLabel& a, const PathLabel& b) {
  if (a.path_dist.size() != b.path_dist.size())
    throw std::invalid_argument("label arity mismatch");
  bool strict = false;
  for (std::size_t m = 0; m < a.path_dist.size(); ++m) {
    if (a.path_dist[m] > b.path_dist[m]) return false;
    if (a.path_dist[m] < b.path_dist[m]) strict = true;
  }
  if (a.cost > b.cost) return false;
  if (a.cost < b.cost) strict = true;
  return strict;
}

namespace {

// Suffix of a candidate path, grown from the destination. `vertices` is
// reversed (destination first, current endpoint last).
struct Partial {
  std::vector<VertexId> vertices;
  std::vector<double> dist;
  double cost = 0.0;
  std::vector<char> on_path;
};

bool partial_dominates(const Partial& a, const Partial& b) {
  // Weak dominance plus a lexicographic tiebreak on equal vectors keeps
  // exactly one representative of identical distance vectors.
  bool strict = false;
  for (std::size_t m = 0; m < a.dist.size(); ++m) {
    if (a.dist[m] > b.dist[m]) return false;
    if (a.dist[m] < b.dist[m]) strict = true;
  }
  if (a.cost > b.cost) return false;
  if (a.cost < b.cost) strict = true;
  return strict || a.vertices < b.vertices;
}

struct BackwardScratch {
  const std::vector<double>* incumbent_costs = nullptr;  // sorted, size <= k
  Counters* counters = nullptr;
  const Deadline* deadline = nullptr;
  bool timed_out = false;
};

std::vector<PathLabel> run_backward(const Neighborhoods& nh, const Graph& g,
                                    const ConstraintSpec& spec,
                                    const SearchOptions& opts,
                                    BackwardScratch& sc) {
  const std::size_t h = nh.level_count() - 1;
  const std::uint32_t n = g.vertex_count();
  const std::uint32_t p = g.path_arity();
  const std::uint32_t k = std::max<std::uint32_t>(1, opts.k);
  Counters local;
  Counters& cnt = sc.counters ? *sc.counters : local;

  double cost_bound = kInf;
  if (opts.dominance && sc.incumbent_costs &&
      sc.incumbent_costs->size() >= k)
    cost_bound = (*sc.incumbent_costs)[k - 1];

  std::vector<Partial> frontier;
  {
    Partial start;
    start.vertices = {nh.destination()};
    start.dist.assign(p, 0.0);
    start.on_path.assign(n, 0);
    start.on_path[nh.destination()] = 1;
    frontier.push_back(std::move(start));
  }

  std::vector<PathLabel> completes;
  for (std::size_t depth = 1; depth <= h && !frontier.empty(); ++depth) {
    if (sc.deadline && sc.deadline->expired()) {
      sc.timed_out = true;
      return completes;
    }
    const std::size_t lvl = h - depth;  // level of the new endpoints
    const auto& level = nh.level(lvl);

    // Per-endpoint dominance buckets for this depth.
    std::vector<std::vector<Partial>> buckets(n);
    std::vector<VertexId> bucket_order;

    for (const Partial& cur : frontier) {
      const VertexId u = cur.vertices.back();
      for (const auto& arc : g.in_arcs(u)) {
        const VertexId v = arc.to;
        if (!level.present[v]) continue;
        if (cur.on_path[v]) continue;
        const std::uint32_t eid = best_arc(g, u, v, spec, /*incoming=*/true);
        if (eid == std::numeric_limits<std::uint32_t>::max()) continue;

        Partial next;
        next.vertices = cur.vertices;
        next.vertices.push_back(v);
        next.dist = cur.dist;
        const auto& attr = g.edge(eid).attr;
        for (std::uint32_t m = 0; m < p; ++m)
          next.dist[m] += attr.path_metrics[m];
        next.cost = cur.cost + attr.cost;
        next.on_path = cur.on_path;
        next.on_path[v] = 1;

        // Pruning by infeasibility: the suffix alone, or the suffix plus
        // the best source distance recorded for this level.
        if (opts.dominance || opts.look_back) {
          bool violates = false;
          for (std::uint32_t m = 0; m < p && !violates; ++m)
            if (next.dist[m] > spec.path_bounds[m]) violates = true;
          if (!violates && opts.look_back) {
            for (std::uint32_t m = 0; m < p && !violates; ++m)
              if (next.dist[m] + nh.best_dist(lvl, v, m) >
                  spec.path_bounds[m])
                violates = true;
          }
          if (violates) {
            ++cnt.infeasibility_pruned;
            continue;
          }
        }
        // Pruning by bound against complete paths found so far.
        if (opts.dominance && next.cost > cost_bound) {
          ++cnt.dominance_pruned;
          continue;
        }
        if (opts.dominance) {
          auto& bucket = buckets[v];
          bool dominated_count = 0;
          std::size_t dominators = 0;
          for (const Partial& held : bucket)
            if (partial_dominates(held, next)) ++dominators;
          dominated_count = dominators > 0;
          // k-best keeps a candidate unless k held partials beat it.
          if (dominators >= k) {
            ++cnt.dominance_pruned;
            continue;
          }
          (void)dominated_count;
          if (dominators == 0) {
            std::erase_if(bucket, [&](const Partial& held) {
              if (!partial_dominates(next, held)) return false;
              ++cnt.dominance_pruned;
              return true;
            });
          }
          if (bucket.empty()) bucket_order.push_back(v);
          bucket.push_back(std::move(next));
        } else {
          auto& bucket = buckets[v];
          if (bucket.empty()) bucket_order.push_back(v);
          bucket.push_back(std::move(next));
        }
      }
    }

    std::sort(bucket_order.begin(), bucket_order.end());
    frontier.clear();
    for (VertexId v : bucket_order)
      for (Partial& part : buckets[v]) frontier.push_back(std::move(part));

    if (depth == h) {
      for (Partial& part : frontier) {
        PathLabel label;
        label.vertices.assign(part.vertices.rbegin(), part.vertices.rend());
        label.hop_count = static_cast<std::uint32_t>(h);
        label.cost = part.cost;
        label.path_dist = std::move(part.dist);
        completes.push_back(std::move(label));
        ++cnt.traversed_paths;
      }
      frontier.clear();
    }
  }

  std::sort(completes.begin(), completes.end(), path_order);
  return completes;
}

}  // namespace

std::vector<PathLabel> backward_pass(const Neighborhoods& nh, const Graph& g,
                                     const ConstraintSpec& spec,
                                     const SearchOptions& opts) {
  if (!nh.dst_in_last_level())
    throw std::invalid_argument(
        "destination is not in the last neighborhood level");
  BackwardScratch sc;
  return run_backward(nh, g, spec, opts, sc);
}

bool feasibly_reachable(const Graph& g, VertexId src, VertexId dst,
                        const ConstraintSpec& spec) {
  if (src == dst) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack = {src};
  seen[src] = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (const auto& arc : g.out_arcs(u)) {
      if (seen[arc.to]) continue;
      if (!edge_feasible(g, arc.edge_id, spec)) continue;
      if (arc.to == dst) return true;
      seen[arc.to] = 1;
      stack.push_back(arc.to);
    }
  }
  return false;
}

RouteResult solve_csp(const Graph& g, VertexId src, VertexId dst,
                      const ConstraintSpec& spec, const SearchOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  check_query(g, src, dst, spec);
  const Deadline deadline(opts.timeout_s);
  RouteResult result;

  auto finish = [&](RouteStatus status) {
    result.status = status;
    result.elapsed_us = std::chrono::duration<double, std::micro>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return result;
  };

  if (src == dst) {
    PathLabel self;
    self.vertices = {src};
    self.path_dist.assign(g.path_arity(), 0.0);
    result.paths.push_back(std::move(self));
    return finish(RouteStatus::found);
  }
  if (!feasibly_reachable(g, src, dst, spec))
    return finish(RouteStatus::unreachable);

  bool uniform_cost = true;
  for (const auto& e : g.edges())
    if (e.attr.cost != g.edges().front().attr.cost) {
      uniform_cost = false;
      break;
    }

  const std::uint32_t k = std::max<std::uint32_t>(1, opts.k);
  const std::uint32_t max_hops =
      opts.max_hops ? *opts.max_hops : g.vertex_count() - 1;
  const std::size_t max_levels =
      std::min<std::size_t>(g.vertex_count(), std::size_t{max_hops} + 1);

  std::vector<PathLabel> incumbents;
  std::vector<double> incumbent_costs;
  BackwardScratch sc;
  sc.counters = &result.counters;
  sc.deadline = &deadline;
  sc.incumbent_costs = &incumbent_costs;

  std::optional<Neighborhoods> nh;
  try {
    nh = build_neighborhoods(g, src, dst, spec, opts);
  } catch (const UnreachableError&) {
    // Reachable over feasible edges, but look-back exclusions starve the
    // levels: every route violates some path bound.
    return finish(RouteStatus::no_feasible_path);
  }

  while (true) {
    if (deadline.expired()) return finish(RouteStatus::timeout);
    if (nh->level_count() > max_levels) break;
    if (nh->dst_in_last_level()) {
      auto candidates = run_backward(*nh, g, spec, opts, sc);
      if (sc.timed_out) return finish(RouteStatus::timeout);
      for (auto& cand : candidates) {
        ConstraintSpec check = spec;
        if (!path_feasible(cand, check)) {
          ++result.counters.infeasibility_pruned;
          continue;
        }
        incumbents.push_back(std::move(cand));
      }
      std::sort(incumbents.begin(), incumbents.end(), path_order);
      if (incumbents.size() > k) incumbents.resize(k);
      incumbent_costs.clear();
      for (const auto& p : incumbents) incumbent_costs.push_back(p.cost);
      if (uniform_cost && incumbents.size() >= k) break;
    }
    if (nh->level_count() >= max_levels) break;
    try {
      nh->extend(g, spec);
    } catch (const MaxLengthExceeded&) {
      break;
    }
  }

  result.counters.neighborhoods_built = nh->level_count() - 1;
  result.paths = std::move(incumbents);
  return finish(result.paths.empty() ? RouteStatus::no_feasible_path
                                     : RouteStatus::found);
}

const char* to_string(RouteStatus s) {
  switch (s) {
    case RouteStatus::found:
      return "found";
    case RouteStatus::no_feasible_path:
      return "no-feasible";
    case RouteStatus::unreachable:
      return "unreachable";
    case RouteStatus::negative_cycle:
      return "negative-cycle";
    case RouteStatus::timeout:
      return "timeout";
  }
  return "unknown";
}

}  // namespace nmroute
