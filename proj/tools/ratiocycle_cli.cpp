// ratiocycle: minimum cost-to-time ratio cycles from the command line.
//
// Exit codes: 0 success, 1 I/O / parse / usage error, 2 acyclic or invalid
// graph, 3 selftest disagreement.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ratiocycle/baselines.hpp"
#include "ratiocycle/generators.hpp"
#include "ratiocycle/json_io.hpp"
#include "ratiocycle/kernels.hpp"
#include "ratiocycle/min_cycle.hpp"
#include "ratiocycle/parametric.hpp"

using namespace ratiocycle;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitDisagree = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kAlgorithms = {"parametric-randomized", "parametric-greedy", "parametric-full",
                                              "lawler", "brute", "karp"};

struct Common {
  std::string input = "-";
  std::string alg = "parametric-randomized";
  std::string h = "auto";
  std::uint64_t seed = 1;
  double c = 1.0;
  bool json = false;
  std::string lambda;
};

RatioGraph load(const std::string& path) {
  if (path == "-") return parse_ratio_graph(std::cin);
  return read_ratio_graph_file(path);
}

std::optional<std::size_t> parse_h(const std::string& text) {
  if (text == "auto") return std::nullopt;
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || v == 0) throw UsageError("--h must be 'auto' or a positive integer");
  return static_cast<std::size_t>(v);
}

Rational parse_lambda(const std::string& text) {
  auto r = Rational::parse(text);
  if (!r) throw UsageError("--lambda must be an integer or p/q, got '" + text + "'");
  return *r;
}

CenterPolicy policy_for(const std::string& alg, std::uint64_t seed, double c) {
  if (alg == "parametric-randomized") return CenterPolicy::randomized(seed, c);
  if (alg == "parametric-greedy") return CenterPolicy::greedy();
  if (alg == "parametric-full") return CenterPolicy::full();
  throw UsageError("algorithm '" + alg + "' has no center mode");
}

RatioSolution solve_with(const RatioGraph& g, const std::string& alg, std::optional<std::size_t> h,
                         std::uint64_t seed, double c, std::optional<std::uint64_t> flip = std::nullopt) {
  if (alg == "brute") return brute_force_min_ratio(g);
  if (alg == "lawler") return lawler_binary_search(g);
  if (alg == "karp") {
    require_solvable(g);
    if (!g.unit_times()) throw UsageError("karp requires t(e) = 1 on every edge");
    const Rational mean = karp_min_mean(g);
    const LambdaProbe w = probe_lambda(g, mean);
    if (w.position != Ordering::Equal) throw std::logic_error("karp value failed its certificate check");
    return solution_from_edges(g, w.edges, "karp");
  }
  ParametricOptions o;
  o.h = h;
  o.centers = policy_for(alg, seed, c);
  o.flip_decision = flip;
  return parametric_min_ratio(g, o);
}

void print_solution(const RatioSolution& s, bool json) {
  if (json) {
    std::cout << to_json(s).dump() << "\n";
    return;
  }
  std::cout << "lambda* = " << s.lambda_star << "\n";
  std::cout << "cycle:";
  for (Vertex v : s.cycle) std::cout << " " << v;
  std::cout << "\ncost_sum = " << s.cost_sum << "\ntime_sum = " << s.time_sum << "\n";
  std::cout << "algorithm: " << s.algorithm << "\n";
  const Counters& k = s.counters;
  std::cout << "counters: comparisons=" << k.comparisons << " comparison_rounds=" << k.comparison_rounds
            << " oracle_calls=" << k.oracle_calls << " work_units=" << k.work_units
            << " parallel_steps=" << k.parallel_steps << "\n";
}

int cmd_solve(const Common& o) {
  const RatioGraph g = load(o.input);
  print_solution(solve_with(g, o.alg, parse_h(o.h), o.seed, o.c), o.json);
  return kExitOk;
}

int cmd_detect(const Common& o) {
  if (o.lambda.empty()) throw UsageError("detect needs --lambda");
  const Rational lambda = parse_lambda(o.lambda);
  const RatioGraph g = load(o.input);
  require_solvable(g);
  const WeightedDigraph wg = substitute_lambda(g, lambda);
  std::size_t h = parse_h(o.h).value_or(auto_h(g.n + 1, g.m() + g.n));
  h = std::min(h, g.n + 1);
  ConcreteContext<Rational> ctx;
  const auto verdict = detect_negative_cycle(ctx, wg, h, policy_for(o.alg, o.seed, o.c));
  if (o.json) {
    auto j = verdict_to_json(verdict, g.m());
    j["lambda"] = lambda.str();
    j["h"] = h;
    j["counters"] = to_json(ctx.counters);
    std::cout << j.dump() << "\n";
    return kExitOk;
  }
  std::cout << "negative cycle: " << (verdict.has_negative_cycle ? "true" : "false") << "\n";
  if (verdict.has_negative_cycle) {
    const std::size_t e = *verdict.violated_edge;
    if (e < g.m()) {
      std::cout << "violated edge: " << e << " (" << g.edges[e].src << " -> " << g.edges[e].dst << ")\n";
    } else {
      std::cout << "violated edge: super source -> " << (e - g.m()) << "\n";
    }
  } else {
    std::cout << "potential:";
    for (const auto& p : verdict.potential) std::cout << " " << (p.infinite ? std::string("inf") : p.value.str());
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_oracle(const Common& o) {
  if (o.lambda.empty()) throw UsageError("oracle needs --lambda");
  const Rational lambda = parse_lambda(o.lambda);
  const RatioGraph g = load(o.input);
  require_solvable(g);
  std::cout << to_string(compare_to_lambda_star(g, lambda)) << "\n";
  return kExitOk;
}

struct GenerateOptions {
  std::size_t n = 10;
  std::size_t m = 20;
  std::int64_t cost_lo = -9, cost_hi = 9, time_lo = 1, time_hi = 4;
  std::string planted;
  std::string output = "-";
};

int cmd_generate(const GenerateOptions& o, std::uint64_t seed) {
  RatioGraph g;
  std::string comment;
  if (!o.planted.empty()) {
    auto [pg, star] = gen_planted_ratio(o.n, o.m, parse_lambda(o.planted), seed);
    g = std::move(pg);
    comment = "planted lambda* = " + star.str() + ", seed " + std::to_string(seed);
  } else {
    g = gen_random_graph(o.n, o.m, {o.cost_lo, o.cost_hi}, {o.time_lo, o.time_hi}, seed);
    comment = "random graph, seed " + std::to_string(seed);
  }
  const std::string text = format_ratio_graph(g, comment);
  if (o.output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(o.output);
    if (!out || !(out << text)) throw std::runtime_error("cannot write " + o.output);
  }
  return kExitOk;
}

struct BenchOptions {
  std::size_t n = 200;
  std::size_t m = 2000;
  std::vector<std::size_t> hs = {2, 4, 8, 16};
  std::string input;
};

int cmd_bench(const BenchOptions& b, const Common& o, bool alg_given, bool h_given) {
  RatioGraph g = b.input.empty() ? gen_random_graph(b.n, b.m, {-9, 9}, {1, 4}, o.seed) : load(b.input);
  std::vector<std::size_t> hs = b.hs;
  if (h_given) {
    const auto h = parse_h(o.h);
    hs = {h ? *h : auto_h(g.n, g.m())};
  }
  std::vector<std::string> algs = {o.alg};
  if (!alg_given) algs = {"parametric-randomized", "parametric-greedy"};
  std::cout << "n,m,h,algorithm,centers,wall_ms,comparisons,comparison_rounds,oracle_calls,work_units,parallel_steps,"
               "lambda_star\n";
  for (const auto& alg : algs) {
    const bool parametric = alg.rfind("parametric-", 0) == 0;
    for (std::size_t h : parametric ? hs : std::vector<std::size_t>{0}) {
      const auto t0 = std::chrono::steady_clock::now();
      const RatioSolution s = solve_with(g, alg, parametric ? std::optional(h) : std::nullopt, o.seed, o.c);
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      const Counters& k = s.counters;
      std::cout << g.n << "," << g.m() << "," << (parametric ? std::to_string(h) : "") << "," << alg << ","
                << (parametric ? std::to_string(s.diag.centers) : "") << "," << ms << "," << k.comparisons << ","
                << k.comparison_rounds << "," << k.oracle_calls << "," << k.work_units << "," << k.parallel_steps
                << "," << s.lambda_star << "\n";
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// selftest

struct Answer {
  std::string alg;
  std::string value;  // lambda* or "error: ..."
};

std::vector<Answer> all_answers(const RatioGraph& g, std::uint64_t seed, std::optional<std::uint64_t> flip) {
  std::vector<Answer> out;
  std::vector<std::string> algs = {"brute", "lawler", "parametric-full", "parametric-greedy",
                                   "parametric-randomized"};
  if (g.unit_times()) algs.push_back("karp");
  for (const auto& alg : algs) {
    try {
      const bool parametric = alg.rfind("parametric-", 0) == 0;
      out.push_back({alg, solve_with(g, alg, std::nullopt, seed, 1.0, parametric ? flip : std::nullopt)
                              .lambda_star.str()});
    } catch (const std::exception& e) {
      out.push_back({alg, std::string("error: ") + e.what()});
    }
  }
  return out;
}

bool agree(const std::vector<Answer>& a) {
  for (const auto& x : a) {
    if (x.value != a.front().value || x.value.rfind("error", 0) == 0) return false;
  }
  return true;
}

// Drops edges one at a time while the disagreement persists.
RatioGraph minimize(RatioGraph g, std::uint64_t seed, std::optional<std::uint64_t> flip) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < g.m(); ++i) {
      RatioGraph smaller = g;
      smaller.edges.erase(smaller.edges.begin() + static_cast<std::ptrdiff_t>(i));
      if (!validate(smaller).ok || agree(all_answers(smaller, seed, flip))) continue;
      g = std::move(smaller);
      progress = true;
      break;
    }
  }
  return g;
}

int cmd_selftest(std::size_t instances, std::uint64_t seed, std::optional<std::uint64_t> flip) {
  struct Family {
    std::string name;
    std::function<RatioGraph(std::uint64_t)> make;
  };
  const std::vector<Family> families = {
      {"random", [](std::uint64_t s) {
         const std::size_t n = 2 + s % 7;
         return gen_random_graph(n, n + s % (2 * n + 1), {-9, 9}, {1, 4}, s);
       }},
      {"planted", [](std::uint64_t s) {
         const std::size_t n = 3 + s % 6;
         const Rational planted(static_cast<std::int64_t>(s % 11) - 5, static_cast<std::int64_t>(1 + s % 3));
         return gen_planted_ratio(n, n + s % (n + 1), planted, s).first;
       }},
      {"unit-time", [](std::uint64_t s) {
         const std::size_t n = 2 + s % 7;
         return gen_random_graph(n, n + s % (2 * n + 1), {-9, 9}, {1, 1}, s);
       }},
  };
  for (const auto& fam : families) {
    std::size_t tested = 0;
    for (std::size_t i = 0; i < instances; ++i) {
      const std::uint64_t s = seed * 1000003ULL + i;
      const RatioGraph g = fam.make(s);
      ++tested;
      const auto answers = all_answers(g, s, flip);
      if (agree(answers)) continue;
      const RatioGraph small = minimize(g, s, flip);
      std::cout << "DISAGREEMENT in family " << fam.name << " (instance " << i << ", seed " << s << ")\n";
      std::cout << "minimized counterexample:\n" << format_ratio_graph(small);
      for (const auto& a : all_answers(small, s, flip)) std::cout << "  " << a.alg << ": " << a.value << "\n";
      return kExitDisagree;
    }
    std::cout << "family " << fam.name << ": " << tested << " instances, all solvers agree\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum cost-to-time ratio cycles by parametric search"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print this help message and exit");  // -h is taken by --h
  Common o;
  GenerateOptions gen;
  BenchOptions bench;
  std::size_t instances = 100;
  std::optional<std::uint64_t> flip;
  std::string isa;

  auto add_common = [&](CLI::App* sub, bool with_alg) {
    if (with_alg) sub->add_option("--alg", o.alg, "Algorithm")->check(CLI::IsMember(kAlgorithms));
    sub->add_option("--h", o.h, "Hop bound (integer or 'auto')");
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--c-constant", o.c, "Oversampling constant c >= 1")->check(CLI::Range(1.0, 1e9));
    sub->add_flag("--json", o.json, "Machine-readable output");
  };

  auto* solve = app.add_subcommand("solve", "Minimum ratio cycle of a graph");
  add_common(solve, true);
  solve->add_option("input", o.input, "Graph file ('-' for stdin)");

  auto* detect = app.add_subcommand("detect", "Negative cycle detection in G_lambda");
  add_common(detect, false);
  detect->add_option("--alg", o.alg, "Center mode")
      ->check(CLI::IsMember({"parametric-randomized", "parametric-greedy", "parametric-full"}));
  detect->add_option("--lambda", o.lambda, "lambda as p/q or integer")->required();
  detect->add_option("input", o.input, "Graph file ('-' for stdin)");

  auto* oracle = app.add_subcommand("oracle", "Position of lambda relative to lambda*");
  oracle->add_option("--lambda", o.lambda, "lambda as p/q or integer")->required();
  oracle->add_option("input", o.input, "Graph file ('-' for stdin)");

  auto* generate = app.add_subcommand("generate", "Write a random or planted instance");
  generate->add_option("--n", gen.n, "Vertices")->required();
  generate->add_option("--m", gen.m, "Edges")->required();
  generate->add_option("--seed", o.seed, "Random seed");
  generate->add_option("--cost-lo", gen.cost_lo);
  generate->add_option("--cost-hi", gen.cost_hi);
  generate->add_option("--time-lo", gen.time_lo);
  generate->add_option("--time-hi", gen.time_hi);
  generate->add_option("--planted", gen.planted, "Planted minimum ratio p/q");
  generate->add_option("-o,--output", gen.output, "Output file ('-' for stdout)");

  auto* benchcmd = app.add_subcommand("bench", "CSV sweep over h");
  add_common(benchcmd, true);
  benchcmd->add_option("--n", bench.n);
  benchcmd->add_option("--m", bench.m);
  benchcmd->add_option("--h-list", bench.hs, "Hop bounds to sweep")->delimiter(',');
  benchcmd->add_option("--input", bench.input, "Benchmark this graph instead of a generated one");

  auto* selftest = app.add_subcommand("selftest", "Cross-check all solvers on generated instances");
  selftest->add_option("--instances", instances, "Instances per family");
  selftest->add_option("--seed", o.seed, "Random seed");
  selftest->add_option("--flip-comparison", flip, "Fault injection: mirror the k-th parametric comparison");

  app.add_option("--isa", isa, "Kernel ISA: scalar, avx2 or neon");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!isa.empty()) {
      bool found = false;
      for (auto k : {kernels::Isa::Scalar, kernels::Isa::Avx2, kernels::Isa::Neon}) {
        if (isa == kernels::to_string(k)) {
          kernels::set_active_isa(k);
          found = true;
        }
      }
      if (!found) throw UsageError("unknown ISA '" + isa + "'");
    }
    if (solve->parsed()) return cmd_solve(o);
    if (detect->parsed()) return cmd_detect(o);
    if (oracle->parsed()) return cmd_oracle(o);
    if (generate->parsed()) return cmd_generate(gen, o.seed);
    if (benchcmd->parsed()) return cmd_bench(bench, o, benchcmd->count("--alg") > 0, benchcmd->count("--h") > 0);
    if (selftest->parsed()) return cmd_selftest(instances, o.seed, flip);
  } catch (const NoCycle& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  } catch (const InvalidGraph& e) {
    std::cerr << "invalid graph: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
