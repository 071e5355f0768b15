#include "nmroute/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace nmroute {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw std::invalid_argument("malformed number: " + s);
  return v;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::uint64_t parse_uint(const std::string& s, std::size_t line) {
  std::uint64_t v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw ParseError("malformed integer: " + s, line);
  return v;
}

double parse_num(const std::string& s, std::size_t line) {
  try {
    return parse_double(s);
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed number: " + s, line);
  }
}

}  // namespace

std::string write_graph(const Graph& g, const std::vector<std::string>& names,
                        double stretch) {
  std::ostringstream out;
  out << "# format-version 1\n";
  out << "graph " << (g.directed() ? "directed" : "undirected") << ' '
      << g.vertex_count() << ' ' << g.link_arity() << ' ' << g.path_arity()
      << '\n';
  if (stretch > 0.0) out << "# stretch " << format_double(stretch) << '\n';
  for (std::size_t i = 0; i < names.size(); ++i)
    out << "# node " << i << ' ' << names[i] << '\n';
  for (const auto& e : g.edges()) {
    out << "edge " << e.u << ' ' << e.v << ' ' << format_double(e.attr.capacity);
    for (double w : e.attr.link_metrics) out << ' ' << format_double(w);
    for (double w : e.attr.path_metrics) out << ' ' << format_double(w);
    out << ' ' << format_double(e.attr.cost) << '\n';
  }
  return out.str();
}

GraphFile read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<Graph> g;
  std::vector<std::string> names;
  double stretch = 0.0;

  while (std::getline(in, line)) {
    ++lineno;
    if (line.rfind("# stretch ", 0) == 0) {
      stretch = parse_num(line.substr(10), lineno);
      continue;
    }
    if (line.rfind("# node ", 0) == 0) {
      auto toks = split_ws(line.substr(7));
      if (toks.size() != 2) throw ParseError("malformed node annotation", lineno);
      auto id = parse_uint(toks[0], lineno);
      if (names.size() <= id) names.resize(id + 1);
      names[id] = toks[1];
      continue;
    }
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;

    if (toks[0] == "graph") {
      if (g) throw ParseError("duplicate graph header", lineno);
      if (toks.size() != 5) throw ParseError("malformed graph header", lineno);
      bool directed;
      if (toks[1] == "directed")
        directed = true;
      else if (toks[1] == "undirected")
        directed = false;
      else
        throw ParseError("expected directed|undirected", lineno);
      g.emplace(directed, static_cast<std::uint32_t>(parse_uint(toks[2], lineno)),
                static_cast<std::uint32_t>(parse_uint(toks[3], lineno)),
                static_cast<std::uint32_t>(parse_uint(toks[4], lineno)));
    } else if (toks[0] == "edge") {
      if (!g) throw ParseError("edge before graph header", lineno);
      const std::size_t expect = 4 + g->link_arity() + g->path_arity() + 1;
      if (toks.size() != expect)
        throw ParseError("edge record has wrong field count", lineno);
      const auto u = static_cast<VertexId>(parse_uint(toks[1], lineno));
      const auto v = static_cast<VertexId>(parse_uint(toks[2], lineno));
      EdgeAttr attr;
      attr.capacity = parse_num(toks[3], lineno);
      std::size_t at = 4;
      for (std::uint32_t m = 0; m < g->link_arity(); ++m)
        attr.link_metrics.push_back(parse_num(toks[at++], lineno));
      for (std::uint32_t m = 0; m < g->path_arity(); ++m)
        attr.path_metrics.push_back(parse_num(toks[at++], lineno));
      attr.cost = parse_num(toks[at], lineno);
      try {
        g->add_edge(u, v, std::move(attr));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno);
      }
    } else {
      throw ParseError("unknown record: " + toks[0], lineno);
    }
  }
  if (!g) throw ParseError("missing graph header", lineno);
  if (!names.empty() && names.size() != g->vertex_count())
    names.resize(g->vertex_count());
  return GraphFile{std::move(*g), std::move(names), stretch};
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_graph(in);
}

void write_graph_file(const std::string& path, const Graph& g,
                      const std::vector<std::string>& names, double stretch) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  out << write_graph(g, names, stretch);
}

std::string write_requests(const std::vector<Request>& reqs) {
  std::ostringstream out;
  out << "# format-version 1\n";
  for (const auto& r : reqs) {
    out << "req " << r.src << ' ' << r.dst << ' '
        << format_double(r.spec.demand);
    for (double b : r.spec.path_bounds) out << ' ' << format_double(b);
    out << '\n';
  }
  return out.str();
}

std::vector<Request> read_requests(std::istream& in, std::uint32_t p_arity) {
  std::vector<Request> reqs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] != "req") throw ParseError("unknown record: " + toks[0], lineno);
    if (toks.size() != 4 + p_arity)
      throw ParseError("req record has wrong field count", lineno);
    Request r;
    r.src = static_cast<VertexId>(parse_uint(toks[1], lineno));
    r.dst = static_cast<VertexId>(parse_uint(toks[2], lineno));
    r.spec.demand = parse_num(toks[3], lineno);
    for (std::uint32_t m = 0; m < p_arity; ++m)
      r.spec.path_bounds.push_back(parse_num(toks[4 + m], lineno));
    reqs.push_back(std::move(r));
  }
  return reqs;
}

}  // namespace nmroute
