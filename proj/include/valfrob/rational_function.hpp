#ifndef VALFROB_RATIONAL_FUNCTION_HPP
#define VALFROB_RATIONAL_FUNCTION_HPP

#include <string>

#include "valfrob/polynomial.hpp"

namespace valfrob {

// Element of K = F_q(x_1,...,x_n) as a fraction of sparse polynomials.
// No gcd reduction: equality is semantic via cross multiplication. The
// denominator is normalized to leading coefficient 1 so rendering is stable.
class RationalFunction {
 public:
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(Polynomial num);

  static RationalFunction zero(FieldRef f) { return RationalFunction(Polynomial::zero(f)); }
  static RationalFunction one(FieldRef f);
  static RationalFunction variable(FieldRef f, std::size_t i) {
    return RationalFunction(Polynomial::variable(std::move(f), i));
  }
  static RationalFunction constant(FieldRef f, const mpz_class& n) {
    return RationalFunction(Polynomial::constant(std::move(f), n));
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const FieldRef& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction inv() const;
  RationalFunction pow(const mpz_class& e) const;  // negative allowed

  RationalFunction frobenius_power(unsigned e) const;

  // Semantic equality: num*o.den == o.num*den.
  bool eq(const RationalFunction& o) const;

  std::string render() const;

 private:
  Polynomial num_, den_;
};

inline bool rf_eq(const RationalFunction& a, const RationalFunction& b) { return a.eq(b); }

}  // namespace valfrob

#endif
