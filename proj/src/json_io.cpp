#include "ratiocycle/json_io.hpp"

#include <stdexcept>

namespace ratiocycle {

using nlohmann::json;

json to_json(const Counters& c) {
  return json{{"comparisons", c.comparisons},
              {"comparison_rounds", c.comparison_rounds},
              {"oracle_calls", c.oracle_calls},
              {"work_units", c.work_units},
              {"parallel_steps", c.parallel_steps}};
}

Counters counters_from_json(const json& j) {
  Counters c;
  c.comparisons = j.at("comparisons").get<std::uint64_t>();
  c.comparison_rounds = j.at("comparison_rounds").get<std::uint64_t>();
  c.oracle_calls = j.at("oracle_calls").get<std::uint64_t>();
  c.work_units = j.at("work_units").get<std::uint64_t>();
  c.parallel_steps = j.value("parallel_steps", std::uint64_t{0});
  return c;
}

json to_json(const RatioSolution& s) {
  return json{{"lambda_star", {{"num", to_string(s.lambda_star.numerator())}, {"den", to_string(s.lambda_star.denominator())}}},
              {"cycle", s.cycle},
              {"cost_sum", to_string(s.cost_sum)},
              {"time_sum", to_string(s.time_sum)},
              {"algorithm", s.algorithm},
              {"counters", to_json(s.counters)}};
}

namespace {

BigInt big_from(const json& j, const char* key) {
  const auto v = parse_bigint(j.at(key).get<std::string>());
  if (!v) throw std::invalid_argument(std::string("field '") + key + "' is not a decimal integer");
  return *v;
}

}  // namespace

RatioSolution solution_from_json(const json& j) {
  try {
    RatioSolution s;
    const auto& ls = j.at("lambda_star");
    const BigInt den = big_from(ls, "den");
    if (sgn(den) <= 0) throw std::invalid_argument("lambda_star denominator must be positive");
    s.lambda_star = Rational(big_from(ls, "num"), den);
    s.cycle = j.at("cycle").get<std::vector<Vertex>>();
    s.cost_sum = big_from(j, "cost_sum");
    s.time_sum = big_from(j, "time_sum");
    s.algorithm = j.at("algorithm").get<std::string>();
    s.counters = counters_from_json(j.at("counters"));
    return s;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed solution JSON: ") + e.what());
  }
}

json to_json(const CenterSet& c) {
  return json{{"members", c.members}, {"mode", std::string(to_string(c.mode))}, {"size_bound", c.size_bound}};
}

json verdict_to_json(const NegCycleVerdict<Rational>& v, std::size_t original_edges) {
  json j{{"negative_cycle", v.has_negative_cycle}, {"centers", to_json(v.centers)}};
  if (v.has_negative_cycle) {
    const std::size_t e = *v.violated_edge;
    if (e < original_edges) {
      j["violated_edge"] = e;
    } else {
      j["violated_super_source_edge"] = e - original_edges;
    }
  } else {
    json p = json::array();
    for (const auto& d : v.potential) p.push_back(d.infinite ? std::string("inf") : d.value.str());
    j["potential"] = p;
  }
  return j;
}

}  // namespace ratiocycle
