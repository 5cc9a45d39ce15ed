#ifndef VALFROB_RNG_HPP
#define VALFROB_RNG_HPP

#include <cstdint>

#include "valfrob/rational_function.hpp"
#include "valfrob/series.hpp"

namespace valfrob {

// Small deterministic generator; every sweep derives one per sample index so
// serial and parallel runs see identical streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static Rng for_sample(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(seed ^ splitmix64(index + 0x632BE59BD9B4E019ULL)));
  }

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

 private:
  std::uint64_t state_;
};

// Random sparse polynomial: up to `max_terms` monomials with per-variable
// exponents <= max_exp. May come out zero when terms cancel.
Polynomial random_polynomial(Rng& rng, const FieldRef& field, unsigned max_exp,
                             unsigned max_terms);
Polynomial random_nonzero_polynomial(Rng& rng, const FieldRef& field, unsigned max_exp,
                                     unsigned max_terms);
RationalFunction random_rational_function(Rng& rng, const FieldRef& field, unsigned max_exp,
                                          unsigned max_terms);

}  // namespace valfrob

#endif
