#ifndef VALFROB_SERIES_HPP
#define VALFROB_SERIES_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

#include "valfrob/rational_function.hpp"

namespace valfrob {

// Formal power series in t over a finite field, as a deterministic
// coefficient stream with a memoized prefix. Streams share their memo, which
// is guarded by a mutex so a stream value can be read concurrently.
class LazySeries {
 public:
  using Gen = std::function<Fq(std::uint64_t)>;

  LazySeries(GroundField field, Gen gen);

  const GroundField& field() const;
  Fq at(std::uint64_t i) const;

  static LazySeries zero(const GroundField& f);
  static LazySeries one(const GroundField& f);
  static LazySeries t_power(const GroundField& f, std::uint64_t k);
  // Pseudorandom unit-order stream p(t): coefficient 0 is 0, coefficient 1 is
  // forced nonzero, the rest come from splitmix64 over (seed, index).
  static LazySeries seeded_unit_order(const GroundField& f, std::uint64_t seed);

  LazySeries add(const LazySeries& o) const;
  LazySeries sub(const LazySeries& o) const;
  LazySeries mul(const LazySeries& o) const;
  LazySeries scaled(const Fq& c) const;
  // x(t)^(p^e)
  LazySeries frobenius(unsigned e = 1) const;
  // Keeps the coefficients at exponents divisible by p, takes their p-th
  // roots and reindexes by exponent/p: the coefficientwise splitting of
  // kappa[[t]].
  LazySeries split() const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// Least index below `cap` with a nonzero coefficient. Throws
// PrecisionExhausted when every inspected coefficient vanishes; never guesses.
long series_ord(const LazySeries& x, long cap);

// The composite valuation F_p(X,Y) -> F_p((t)) -> Z given by X -> t and
// Y -> t*p(t) for a seeded stream p(t). Since t | p(t) and p(t) has unit
// order, the Y image has order exactly 2. Whether t and p(t) are
// algebraically independent is an assumption of the model: a dependence
// would surface as PrecisionExhausted, never as a wrong number.
class SeriesEmbedding {
 public:
  static constexpr long kHardCap = 16384;

  SeriesEmbedding(FieldRef field, std::uint64_t seed, long initial_cap = 256);

  const FieldRef& field() const { return field_; }
  std::uint64_t seed() const { return seed_; }
  long initial_cap() const { return initial_cap_; }
  const LazySeries& image_of(std::size_t var) const { return images_[var]; }

  LazySeries eval(const Polynomial& f) const;
  // series order of the image; caps double from the initial cap up to the
  // hard limit
  long value(const RationalFunction& f) const;

 private:
  FieldRef field_;
  std::uint64_t seed_;
  long initial_cap_;
  std::vector<LazySeries> images_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace valfrob

#endif
