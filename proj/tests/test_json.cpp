#include <doctest.h>

#include "ratiocycle/baselines.hpp"
#include "ratiocycle/generators.hpp"
#include "ratiocycle/json_io.hpp"

using namespace ratiocycle;
using nlohmann::json;

TEST_CASE("solution round trip") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = gen_random_graph(6, 14, {-9, 9}, {1, 4}, seed);
    const RatioSolution s = parametric_min_ratio(g);
    const json j = to_json(s);
    CHECK(j.at("lambda_star").at("num").is_string());
    CHECK(j.at("algorithm") == "parametric-full");
    const RatioSolution back = solution_from_json(json::parse(j.dump()));
    CHECK(back.lambda_star == s.lambda_star);
    CHECK(back.cycle == s.cycle);
    CHECK(back.cost_sum == s.cost_sum);
    CHECK(back.time_sum == s.time_sum);
    CHECK(back.counters == s.counters);
    CHECK(Rational(back.cost_sum, back.time_sum) == back.lambda_star);
  }
}

TEST_CASE("two-cycle document") {
  RatioGraph g;
  g.n = 2;
  g.edges = {{0, 1, BigInt(3), BigInt(1)}, {1, 0, BigInt(1), BigInt(1)}};
  const json j = to_json(brute_force_min_ratio(g));
  CHECK(j.at("lambda_star") == json{{"num", "2"}, {"den", "1"}});
  CHECK(j.at("cycle") == json::array({0, 1, 0}));
  CHECK(j.at("cost_sum") == "4");
  CHECK(j.at("time_sum") == "2");
}

TEST_CASE("counters round trip") {
  Counters c;
  c.comparisons = 1;
  c.comparison_rounds = 2;
  c.oracle_calls = 3;
  c.work_units = 4;
  c.parallel_steps = 5;
  CHECK(counters_from_json(to_json(c)) == c);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(solution_from_json(json::object()), std::invalid_argument);
  CHECK_THROWS_AS(solution_from_json(json{{"lambda_star", {{"num", "x"}, {"den", "1"}}}}), std::invalid_argument);
  json j = to_json(brute_force_min_ratio(gen_random_graph(4, 6, {-3, 3}, {1, 2}, 1)));
  j["lambda_star"]["den"] = "0";
  CHECK_THROWS_AS(solution_from_json(j), std::invalid_argument);
  j = to_json(brute_force_min_ratio(gen_random_graph(4, 6, {-3, 3}, {1, 2}, 1)));
  j["cost_sum"] = 12;
  CHECK_THROWS_AS(solution_from_json(j), std::invalid_argument);
  j = to_json(brute_force_min_ratio(gen_random_graph(4, 6, {-3, 3}, {1, 2}, 1)));
  j.erase("counters");
  CHECK_THROWS_AS(solution_from_json(j), std::invalid_argument);
}

TEST_CASE("center set and verdict documents") {
  CenterSet c;
  c.members = {1, 4};
  c.mode = CenterMode::Greedy;
  c.size_bound = 3;
  const json j = to_json(c);
  CHECK(j.at("members") == json::array({1, 4}));
  CHECK(j.at("mode") == "greedy");

  NegCycleVerdict<Rational> v;
  v.has_negative_cycle = false;
  v.potential = {Dist<Rational>::of(Rational(0)), Dist<Rational>::of(Rational(-1, 2))};
  const json vj = verdict_to_json(v, 2);
  CHECK(vj.at("negative_cycle") == false);
  CHECK(vj.at("potential") == json::array({"0", "-1/2"}));
}
