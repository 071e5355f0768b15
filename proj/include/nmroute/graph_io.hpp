#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nmroute/graph.hpp"

namespace nmroute {

// Shortest round-trip decimal formatting (std::to_chars general form).
std::string format_double(double v);
double parse_double(const std::string& s);

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t line)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ")"),
        line_number(line) {}
  std::size_t line_number;
};

// Text graph format, one record per line, '#' starts a comment:
//   graph <directed|undirected> <num_vertices> <l_arity> <p_arity>
//   edge <u> <v> <capacity> <link_metric_1..l> <path_metric_1..p> <cost>
// Optional annotations carried as comments:
//   # stretch <v>      plane-diameter propagation delay of the instance
//   # node <id> <name> display name for a vertex
struct GraphFile {
  Graph graph;
  std::vector<std::string> names;  // empty when the file has no node names
  double stretch = 0.0;            // 0 when absent
};

std::string write_graph(const Graph& g, const std::vector<std::string>& names,
                        double stretch);
inline std::string write_graph(const Graph& g) { return write_graph(g, {}, 0.0); }

GraphFile read_graph(std::istream& in);
GraphFile read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g,
                      const std::vector<std::string>& names = {},
                      double stretch = 0.0);

// Request list format, one record per line:
//   req <src> <dst> <demand> <path_bound_1..p>
struct Request {
  VertexId src = 0;
  VertexId dst = 0;
  ConstraintSpec spec;
};

std::string write_requests(const std::vector<Request>& reqs);
std::vector<Request> read_requests(std::istream& in, std::uint32_t p_arity);

}  // namespace nmroute
