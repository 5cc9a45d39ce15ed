#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "valfrob/sweep.hpp"

using namespace valfrob;

namespace {

bool same_outcome(const SweepOutcome& a, const SweepOutcome& b) {
  return a.samples == b.samples && a.failures == b.failures && a.failure_log == b.failure_log;
}

}  // namespace

TEST_CASE("serial and parallel drivers agree bit for bit") {
  // a predicate with deterministic scattered failures driven by the rng
  SampleFn flaky = [](std::size_t i, Rng& rng) -> std::optional<std::string> {
    std::uint64_t draw = rng.next();
    if (draw % 17 == 3) return "draw " + std::to_string(draw % 1000) + " at " + std::to_string(i);
    return std::nullopt;
  };
  for (std::uint64_t seed : {1ull, 42ull, 999ull}) {
    SweepOutcome s = sweep_serial(3000, seed, flaky);
    SweepOutcome p = sweep_parallel(3000, seed, flaky);
    CHECK(s.failures > 0);
    CHECK(same_outcome(s, p));
  }
}

TEST_CASE("all-pass and all-fail extremes") {
  SampleFn pass = [](std::size_t, Rng&) { return std::optional<std::string>{}; };
  SweepOutcome ok = sweep_parallel(500, 1, pass);
  CHECK(ok.ok());
  CHECK(ok.failures == 0);
  CHECK(ok.failure_log.empty());

  SampleFn fail = [](std::size_t, Rng&) { return std::optional<std::string>{"bad"}; };
  SweepOutcome all = sweep_parallel(500, 1, fail);
  CHECK(all.failures == 500);
  CHECK(all.failure_log.size() == 8);  // log is truncated, count is exact
  CHECK(all.failure_log[0].first == 0);
}

TEST_CASE("exceptions inside samples become failures") {
  SampleFn throws = [](std::size_t i, Rng&) -> std::optional<std::string> {
    if (i == 3) throw std::runtime_error("boom");
    return std::nullopt;
  };
  SweepOutcome out = sweep_parallel(10, 1, throws);
  CHECK(out.failures == 1);
  REQUIRE(out.failure_log.size() == 1);
  CHECK(out.failure_log[0].first == 3);
  CHECK(out.failure_log[0].second.find("boom") != std::string::npos);
}

TEST_CASE("per-index rng streams do not depend on execution order") {
  std::vector<std::uint64_t> first_draws(64);
  SampleFn record = [&](std::size_t i, Rng& rng) -> std::optional<std::string> {
    first_draws[i] = rng.next();
    return std::nullopt;
  };
  sweep_serial(64, 5, record);
  std::vector<std::uint64_t> serial = first_draws;
  sweep_parallel(64, 5, record);
  CHECK(serial == first_draws);
}
