#ifndef VALFROB_GAUSS_HPP
#define VALFROB_GAUSS_HPP

#include <vector>

#include "valfrob/rational_function.hpp"
#include "valfrob/valuation.hpp"
#include "valfrob/value_group.hpp"

namespace valfrob {

// Desk-scale model of the perfect field L = F_p(s^{1/p^oo}) with the s-adic
// valuation into Z[1/p]. An element is tracked at a finite perfection level
// e: it is a rational function in u = s^{1/p^e}, valued at (u-adic
// order)/p^e. Raising the level rewrites u as a p-th power of the finer
// root; taking p-th roots raises the level by one. Levels are capped.
class PerfectedBase {
 public:
  static constexpr unsigned kLevelCap = 12;

  explicit PerfectedBase(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  // F_p(u) at a given level; level only affects the valuation scaling.
  FieldRef field() const { return field_; }

  struct Elem {
    RationalFunction f;  // in the single variable u
    unsigned level;
  };

  Elem constant(const mpz_class& n) const;
  Elem uniformizer(unsigned level = 0) const;  // s, presented at the level

  Elem lift(const Elem& a, unsigned level) const;  // error if level < a.level
  Elem add(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem div(const Elem& a, const Elem& b) const;
  Elem pth_root(const Elem& a) const;  // level + 1, capped

  bool is_zero(const Elem& a) const { return a.f.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const;

  // s-adic value in Z[1/p] (as a rational); error on zero.
  mpq_class value(const Elem& a) const;

 private:
  std::uint32_t p_;
  FieldRef field_;
};

// Gauss extension of the s-adic valuation from L to L(X). Elements of L(X)
// are carried as bivariate rational functions in (u, x) at a perfection
// level, x being the new indeterminate.
class GaussValuation {
 public:
  enum class Variant { group_first, z_first };

  GaussValuation(std::uint32_t p, Variant variant);

  std::uint32_t p() const { return p_; }
  Variant variant() const { return variant_; }

  // Gamma' = Gamma_nu (+) Z or Z (+) Gamma_nu, lexicographic.
  const ValueGroup& value_group() const { return group_; }
  // F_p(u, x) carrier field
  FieldRef field() const { return field_; }

  struct Elem {
    RationalFunction f;  // in (u, x)
    unsigned level;
  };

  Elem from_rf(RationalFunction f, unsigned level = 0) const;
  Elem lift(const Elem& a, unsigned level) const;

  // w(sum a_i x^i) = lex-inf of the pairs; extended to fractions by
  // subtraction. Error on zero.
  GroupElement value(const Elem& a) const;
  GroupElement poly_value(const Polynomial& f, unsigned level) const;
  bool in_valuation_ring(const Elem& a) const;

  // Writes v = sum_i r_i^p x^i over the basis {1, x, ..., x^{p-1}} of L(X)
  // over L(X)^p; the r_i come back one level finer.
  std::vector<Elem> x_basis_decompose(const Elem& v) const;

 private:
  std::uint32_t p_;
  Variant variant_;
  FieldRef field_;
  ValueGroup group_;
};

}  // namespace valfrob

#endif
