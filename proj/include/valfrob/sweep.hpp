#ifndef VALFROB_SWEEP_HPP
#define VALFROB_SWEEP_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "valfrob/rng.hpp"

namespace valfrob {

// A sample check: gets its index and an rng derived from (seed, index),
// returns nullopt on pass or a description of the failure. Checks must be
// pure; the per-index rng derivation is what makes the serial and the
// OpenMP drivers produce identical outcomes.
using SampleFn = std::function<std::optional<std::string>(std::size_t, Rng&)>;

struct SweepOutcome {
  std::size_t samples = 0;
  std::size_t failures = 0;
  // first few failures, ordered by sample index
  std::vector<std::pair<std::size_t, std::string>> failure_log;

  bool ok() const { return failures == 0; }
};

// Serial reference driver.
SweepOutcome sweep_serial(std::size_t n, std::uint64_t seed, const SampleFn& fn);

// OpenMP driver; falls back to the serial one when built without OpenMP.
SweepOutcome sweep_parallel(std::size_t n, std::uint64_t seed, const SampleFn& fn);

inline SweepOutcome run_sweep(std::size_t n, std::uint64_t seed, const SampleFn& fn,
                              bool parallel) {
  return parallel ? sweep_parallel(n, seed, fn) : sweep_serial(n, seed, fn);
}

}  // namespace valfrob

#endif
