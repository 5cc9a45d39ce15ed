#ifndef VALFROB_HAHN_HPP
#define VALFROB_HAHN_HPP

#include <optional>
#include <utility>
#include <vector>

#include "valfrob/polynomial.hpp"
#include "valfrob/value_group.hpp"

namespace valfrob {

// Truncation of a Hahn series with exponents in Z[1/p]: a strictly
// increasing list of known terms plus a certificate that every unknown term
// has exponent >= tail_bound. A missing tail bound means the support is
// exactly the listed terms. Sums and products keep only what the
// certificates can vouch for, so a reported leading term is always exact.
class HahnSeries {
 public:
  using Term = std::pair<mpq_class, Fq>;

  static HahnSeries finite(const GroundField& f, std::vector<Term> terms);
  static HahnSeries truncated(const GroundField& f, std::vector<Term> terms, mpq_class tail_bound);

  const GroundField& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  const std::optional<mpq_class>& tail_bound() const { return tail_bound_; }
  bool exactly_zero() const { return terms_.empty() && !tail_bound_; }

  HahnSeries add(const HahnSeries& o) const;
  HahnSeries sub(const HahnSeries& o) const;
  HahnSeries neg() const;
  HahnSeries mul(const HahnSeries& o) const;
  HahnSeries pow(unsigned long e) const;

  // Exponent of the first certified nonzero term; nullopt when nothing is
  // known below the tail bound.
  std::optional<mpq_class> leading_exponent() const;

 private:
  HahnSeries(GroundField f) : field_(f) {}
  void normalize();

  GroundField field_{2, 1};
  std::vector<Term> terms_;
  std::optional<mpq_class> tail_bound_;
};

// t itself.
HahnSeries hahn_t(const GroundField& f);
// Depth-m truncation of sum_{i>=1} t^(1 - p^-i), the image of the second
// variable under the totally unramified witness embedding.
HahnSeries hahn_witness_y(const GroundField& f, unsigned depth);

// Least exponent (in Z[1/p], as an exact rational) of the image of the
// bivariate polynomial f under X -> t, Y -> sum t^(1-p^-i), enumerated up to
// `bound`; the witness depth escalates internally. Throws PrecisionExhausted
// when no term can be certified below the bound.
mpq_class hahn_embed_value(const Polynomial& f, const mpq_class& bound);

// For a positive gamma in a p-divisible group, the exact gamma/p with
// p*(gamma/p) = gamma: the value-level witness that every positive element
// is p times a positive element. Errors on non-p-divisible groups.
GroupElement unit_pth_power_factor(const GroupElement& gamma, const ValueGroup& group);

}  // namespace valfrob

#endif
