#include "ratiocycle/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

namespace ratiocycle {

BigInt RatioGraph::max_abs_cost() const {
  BigInt best = 0;
  for (const auto& e : edges) {
    BigInt a = abs(e.cost);
    if (a > best) best = a;
  }
  return best;
}

BigInt RatioGraph::max_time() const {
  BigInt best = 0;
  for (const auto& e : edges) {
    if (e.time > best) best = e.time;
  }
  return best;
}

bool RatioGraph::unit_times() const {
  for (const auto& e : edges) {
    if (e.time != 1) return false;
  }
  return true;
}

std::string_view to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::BadVertexId: return "BadVertexId";
    case ViolationCode::NegativeTransit: return "NegativeTransit";
    case ViolationCode::ZeroTransitCycle: return "ZeroTransitCycle";
    case ViolationCode::Acyclic: return "Acyclic";
  }
  return "Unknown";
}

bool ValidationReport::has(ViolationCode code) const {
  for (const auto& v : violations) {
    if (v.code == code) return true;
  }
  return false;
}

std::string ValidationReport::summary() const {
  if (ok) return "ok";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += std::string(to_string(v.code)) + ": " + v.message;
  }
  return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_count(std::string_view tok, std::size_t lineno, const char* what) {
  auto v = parse_bigint(tok);
  if (!v || *v < 0 || !v->fits_ulong_p()) {
    throw ParseError(lineno, std::string("bad ") + what + " '" + std::string(tok) + "'");
  }
  return v->get_ui();
}

}  // namespace

RatioGraph parse_ratio_graph(std::string_view text) {
  RatioGraph g;
  bool have_header = false;
  std::size_t declared_m = 0;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const auto line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++lineno;
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;

    const auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(lineno, "duplicate header");
      if (tok.size() != 4 || tok[1] != "ratio") throw ParseError(lineno, "expected 'p ratio <n> <m>'");
      g.n = parse_count(tok[2], lineno, "vertex count");
      declared_m = parse_count(tok[3], lineno, "edge count");
      if (g.n > static_cast<std::size_t>(std::numeric_limits<Vertex>::max())) {
        throw ParseError(lineno, "vertex count too large");
      }
      g.edges.reserve(declared_m);
      have_header = true;
      continue;
    }
    if (tok[0] == "a") {
      if (!have_header) throw ParseError(lineno, "edge before header");
      if (tok.size() != 5) throw ParseError(lineno, "expected 'a <src> <dst> <cost> <time>'");
      const auto src = parse_count(tok[1], lineno, "source vertex");
      const auto dst = parse_count(tok[2], lineno, "target vertex");
      if (src >= g.n || dst >= g.n) throw ParseError(lineno, "vertex id out of range");
      auto cost = parse_bigint(tok[3]);
      auto time = parse_bigint(tok[4]);
      if (!cost) throw ParseError(lineno, "bad cost '" + std::string(tok[3]) + "'");
      if (!time) throw ParseError(lineno, "bad time '" + std::string(tok[4]) + "'");
      if (g.edges.size() == declared_m) throw ParseError(lineno, "more edges than declared");
      g.edges.push_back({static_cast<Vertex>(src), static_cast<Vertex>(dst), *cost, *time});
      continue;
    }
    throw ParseError(lineno, "unknown line type '" + std::string(tok[0]) + "'");
  }
  if (!have_header) throw ParseError(lineno, "missing 'p ratio' header");
  if (g.edges.size() != declared_m) {
    throw ParseError(lineno, "expected " + std::to_string(declared_m) + " edges, got " +
                                 std::to_string(g.edges.size()));
  }
  return g;
}

RatioGraph parse_ratio_graph(std::istream& in) {
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ratio_graph(ss.str());
}

RatioGraph read_ratio_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_ratio_graph(in);
}

std::string format_ratio_graph(const RatioGraph& g, std::string_view comment) {
  std::string out;
  if (!comment.empty()) out += "c " + std::string(comment) + "\n";
  out += "p ratio " + std::to_string(g.n) + " " + std::to_string(g.m()) + "\n";
  for (const auto& e : g.edges) {
    out += "a " + std::to_string(e.src) + " " + std::to_string(e.dst) + " " + to_string(e.cost) +
           " " + to_string(e.time) + "\n";
  }
  return out;
}

bool has_cycle(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& arcs) {
  // Kahn's algorithm: a cycle exists iff some vertex is never freed.
  std::vector<std::size_t> indeg(n, 0);
  std::vector<std::vector<Vertex>> out(n);
  for (auto [u, v] : arcs) {
    out[u].push_back(v);
    ++indeg[v];
  }
  std::vector<Vertex> stack;
  for (std::size_t v = 0; v < n; ++v) {
    if (indeg[v] == 0) stack.push_back(static_cast<Vertex>(v));
  }
  std::size_t freed = 0;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    ++freed;
    for (Vertex v : out[u]) {
      if (--indeg[v] == 0) stack.push_back(v);
    }
  }
  return freed != n;
}

ValidationReport validate(const RatioGraph& g) {
  ValidationReport rep;
  auto add = [&](ViolationCode code, std::string msg) {
    rep.ok = false;
    rep.violations.push_back({code, std::move(msg)});
  };

  bool ids_ok = true;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (e.src < 0 || e.dst < 0 || static_cast<std::size_t>(e.src) >= g.n ||
        static_cast<std::size_t>(e.dst) >= g.n) {
      add(ViolationCode::BadVertexId, "edge " + std::to_string(i) + " has an endpoint outside [0, n)");
      ids_ok = false;
    }
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (g.edges[i].time < 0) {
      add(ViolationCode::NegativeTransit, "edge " + std::to_string(i) + " has negative transit time");
    }
  }
  if (!ids_ok) return rep;

  std::vector<std::pair<Vertex, Vertex>> all, zero;
  all.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    all.emplace_back(e.src, e.dst);
    if (e.time == 0) zero.emplace_back(e.src, e.dst);
  }
  if (has_cycle(g.n, zero)) add(ViolationCode::ZeroTransitCycle, "a cycle of zero-transit edges exists");
  if (!has_cycle(g.n, all)) add(ViolationCode::Acyclic, "graph has no directed cycle");
  return rep;
}

WeightedDigraph substitute_lambda(const RatioGraph& g, const Rational& lambda) {
  WeightedDigraph out;
  out.n = g.n;
  out.edges.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    out.edges.push_back({e.src, e.dst, Rational(e.cost) - lambda * Rational(e.time)});
  }
  return out;
}

}  // namespace ratiocycle
