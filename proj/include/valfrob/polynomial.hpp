#ifndef VALFROB_POLYNOMIAL_HPP
#define VALFROB_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "valfrob/field.hpp"

namespace valfrob {

// Exponent vector of a monomial. Entries are arbitrary-precision so that
// p^e-fold Frobenius scaling never overflows. Nonnegative inside Polynomial;
// signed vectors double as lattice points elsewhere.
using ExpVec = std::vector<mpz_class>;

struct ExpVecLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      int c = cmp(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return a.size() < b.size();
  }
};

// Sparse multivariate polynomial over a finite ground field. Zero
// coefficients are never stored and every exponent vector has the field's
// arity.
class Polynomial {
 public:
  using TermMap = std::map<ExpVec, Fq, ExpVecLess>;

  explicit Polynomial(FieldRef field);
  static Polynomial zero(FieldRef field) { return Polynomial(std::move(field)); }
  static Polynomial constant(FieldRef field, const Fq& c);
  static Polynomial constant(FieldRef field, const mpz_class& n);
  static Polynomial variable(FieldRef field, std::size_t index);
  static Polynomial monomial(FieldRef field, ExpVec exps, const Fq& c);

  const FieldRef& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }
  mpz_class total_degree() const;  // -1 on zero

  void add_term(const ExpVec& e, const Fq& c);  // accumulates, drops zeros

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Fq& c) const;
  Polynomial pow(const mpz_class& e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // f^(p^e): exponents scale by p^e, coefficients by the e-fold Frobenius.
  Polynomial frobenius_power(unsigned e) const;

  // Leading (lex-largest) term; error on zero.
  const std::pair<const ExpVec, Fq>& leading_term() const;

  std::string render() const;

 private:
  void check_same_field(const Polynomial& o) const;

  FieldRef field_;
  TermMap terms_;
};

mpz_class pow_ui(const mpz_class& base, unsigned long e);

}  // namespace valfrob

#endif
