#include "valfrob/rational_function.hpp"

#include "valfrob/errors.hpp"

namespace valfrob {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (!same_field(num_.field(), den_.field())) throw DomainError("fraction field mismatch");
  if (den_.is_zero()) throw DomainError("zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.field(), num_.field()->base().one());
    return;
  }
  // scale so the denominator's leading coefficient is 1
  Fq lead = den_.leading_term().second;
  if (!(lead == num_.field()->base().one())) {
    Fq u = num_.field()->base().inv(lead);
    num_ = num_.scaled(u);
    den_ = den_.scaled(u);
  }
}

RationalFunction::RationalFunction(Polynomial num)
    : RationalFunction(num, Polynomial::constant(num.field(), num.field()->base().one())) {}

RationalFunction RationalFunction::one(FieldRef f) {
  return RationalFunction(Polynomial::constant(std::move(f), mpz_class(1)));
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw DomainError("division by zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::inv() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(const mpz_class& e) const {
  if (e < 0) {
    mpz_class m = -e;
    return inv().pow(m);
  }
  return RationalFunction(num_.pow(e), den_.pow(e));
}

RationalFunction RationalFunction::frobenius_power(unsigned e) const {
  return RationalFunction(num_.frobenius_power(e), den_.frobenius_power(e));
}

bool RationalFunction::eq(const RationalFunction& o) const {
  if (!same_field(field(), o.field())) throw DomainError("comparing across fields");
  return num_ * o.den_ == o.num_ * den_;
}

std::string RationalFunction::render() const {
  if (den_.is_one()) return num_.render();
  std::string num = num_.render();
  if (num_.term_count() > 1) num = "(" + num + ")";
  // a product denominator must bind as one factor under the left-associative /
  std::string den = den_.render();
  if (den_.term_count() > 1 || den.find('*') != std::string::npos) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace valfrob
