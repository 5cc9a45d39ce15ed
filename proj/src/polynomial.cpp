#include "valfrob/polynomial.hpp"

#include <sstream>

#include "valfrob/errors.hpp"

namespace valfrob {

mpz_class pow_ui(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Polynomial::Polynomial(FieldRef field) : field_(std::move(field)) {
  if (!field_) throw DomainError("polynomial needs a field");
}

Polynomial Polynomial::constant(FieldRef field, const Fq& c) {
  Polynomial p(std::move(field));
  p.add_term(ExpVec(p.field_->arity(), 0), c);
  return p;
}

Polynomial Polynomial::constant(FieldRef field, const mpz_class& n) {
  Fq c = field->base().from_int(n);
  return constant(std::move(field), c);
}

Polynomial Polynomial::variable(FieldRef field, std::size_t index) {
  if (index >= field->arity()) throw DomainError("variable index out of range");
  ExpVec e(field->arity(), 0);
  e[index] = 1;
  return monomial(std::move(field), std::move(e), field->base().one());
}

Polynomial Polynomial::monomial(FieldRef field, ExpVec exps, const Fq& c) {
  if (exps.size() != field->arity()) throw DomainError("exponent vector arity mismatch");
  for (const auto& x : exps)
    if (x < 0) throw DomainError("negative exponent in polynomial monomial");
  Polynomial p(std::move(field));
  p.add_term(exps, c);
  return p;
}

bool Polynomial::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  for (const auto& x : e)
    if (x != 0) return false;
  return c == field_->base().one();
}

mpz_class Polynomial::total_degree() const {
  mpz_class best = -1;
  for (const auto& [e, c] : terms_) {
    mpz_class d = 0;
    for (const auto& x : e) d += x;
    if (d > best) best = d;
  }
  return best;
}

void Polynomial::add_term(const ExpVec& e, const Fq& c) {
  if (c.is_zero()) return;
  if (e.size() != field_->arity()) throw DomainError("exponent vector arity mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second = field_->base().add(it->second, c);
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_same_field(const Polynomial& o) const {
  if (!same_field(field_, o.field_)) throw DomainError("polynomial field mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_field(o);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_same_field(o);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, field_->base().neg(c));
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(field_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, field_->base().neg(c));
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_field(o);
  Polynomial r(field_);
  ExpVec sum(field_->arity());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
      r.add_term(sum, field_->base().mul(ca, cb));
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const Fq& c) const {
  Polynomial r(field_);
  if (c.is_zero()) return r;
  for (const auto& [e, t] : terms_) r.add_term(e, field_->base().mul(t, c));
  return r;
}

Polynomial Polynomial::pow(const mpz_class& e) const {
  if (e < 0) throw DomainError("negative power of a polynomial");
  Polynomial acc = constant(field_, field_->base().one());
  Polynomial base = *this;
  mpz_class n = e;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_field(a.field_, b.field_) && a.terms_ == b.terms_;
}

Polynomial Polynomial::frobenius_power(unsigned e) const {
  mpz_class scale = pow_ui(mpz_class(field_->base().p()), e);
  Polynomial r(field_);
  ExpVec scaledExp(field_->arity());
  for (const auto& [exp, c] : terms_) {
    for (std::size_t i = 0; i < scaledExp.size(); ++i) scaledExp[i] = exp[i] * scale;
    r.terms_.emplace(scaledExp, field_->base().frobenius(c, e));
  }
  return r;
}

const std::pair<const ExpVec, Fq>& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return *terms_.rbegin();
}

std::string Polynomial::render() const {
  if (terms_.empty()) return "0";
  const GroundField& gf = field_->base();
  std::ostringstream out;
  bool first = true;
  // lex-descending order reads naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) out << " + ";
    first = false;
    std::string coeff = gf.render(c);
    bool coeff_is_one = (c == gf.one());
    bool coeff_composite = coeff.find('+') != std::string::npos;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += field_->variables()[i];
      if (e[i] != 1) mono += "^" + e[i].get_str();
    }
    if (mono.empty()) {
      out << (coeff_composite ? "(" + coeff + ")" : coeff);
    } else if (coeff_is_one) {
      out << mono;
    } else {
      out << (coeff_composite ? "(" + coeff + ")" : coeff) << "*" << mono;
    }
  }
  return out.str();
}

}  // namespace valfrob
