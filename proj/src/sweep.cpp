#include "valfrob/sweep.hpp"

#include <algorithm>

namespace valfrob {

namespace {

constexpr std::size_t kMaxLoggedFailures = 8;

std::optional<std::string> run_one(const SampleFn& fn, std::uint64_t seed, std::size_t i) {
  Rng rng = Rng::for_sample(seed, i);
  try {
    return fn(i, rng);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

void finalize(SweepOutcome& out) {
  std::sort(out.failure_log.begin(), out.failure_log.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (out.failure_log.size() > kMaxLoggedFailures) out.failure_log.resize(kMaxLoggedFailures);
}

}  // namespace

SweepOutcome sweep_serial(std::size_t n, std::uint64_t seed, const SampleFn& fn) {
  SweepOutcome out;
  out.samples = n;
  for (std::size_t i = 0; i < n; ++i) {
    auto fail = run_one(fn, seed, i);
    if (fail) {
      ++out.failures;
      out.failure_log.emplace_back(i, *fail);
    }
  }
  finalize(out);
  return out;
}

SweepOutcome sweep_parallel(std::size_t n, std::uint64_t seed, const SampleFn& fn) {
#ifdef _OPENMP
  SweepOutcome out;
  out.samples = n;
  long ln = static_cast<long>(n);
#pragma omp parallel
  {
    SweepOutcome local;
#pragma omp for schedule(dynamic, 16) nowait
    for (long i = 0; i < ln; ++i) {
      auto fail = run_one(fn, seed, static_cast<std::size_t>(i));
      if (fail) {
        ++local.failures;
        local.failure_log.emplace_back(static_cast<std::size_t>(i), *fail);
      }
    }
#pragma omp critical(valfrob_sweep_merge)
    {
      out.failures += local.failures;
      out.failure_log.insert(out.failure_log.end(), local.failure_log.begin(),
                             local.failure_log.end());
    }
  }
  finalize(out);
  return out;
#else
  return sweep_serial(n, seed, fn);
#endif
}

}  // namespace valfrob
