#include "valfrob/gauss.hpp"

#include <algorithm>
#include <map>

namespace valfrob {

namespace {

// u-adic order of a nonzero univariate-in-u polynomial slice
mpz_class min_exp(const Polynomial& f, std::size_t var) {
  bool have = false;
  mpz_class best = 0;
  for (const auto& [e, c] : f.terms()) {
    if (!have || e[var] < best) {
      best = e[var];
      have = true;
    }
  }
  if (!have) throw DomainError("order of the zero polynomial");
  return best;
}

RationalFunction scale_var_exponents(const RationalFunction& f, std::size_t var,
                                     const mpz_class& factor) {
  auto scale_poly = [&](const Polynomial& p) {
    Polynomial out(p.field());
    ExpVec e;
    for (const auto& [exp, c] : p.terms()) {
      e = exp;
      e[var] *= factor;
      out.add_term(e, c);
    }
    return out;
  };
  return RationalFunction(scale_poly(f.num()), scale_poly(f.den()));
}

}  // namespace

PerfectedBase::PerfectedBase(std::uint32_t p)
    : p_(p), field_(FieldDescriptor::make(p, 1, {"u"})) {}

PerfectedBase::Elem PerfectedBase::constant(const mpz_class& n) const {
  return {RationalFunction::constant(field_, n), 0};
}

PerfectedBase::Elem PerfectedBase::uniformizer(unsigned level) const {
  if (level > kLevelCap) throw PrecisionExhausted("perfection level cap exceeded", kLevelCap);
  // s = u^(p^level)
  return {RationalFunction(Polynomial::monomial(
              field_, {pow_ui(mpz_class(p_), level)}, field_->base().one())),
          level};
}

PerfectedBase::Elem PerfectedBase::lift(const Elem& a, unsigned level) const {
  if (level < a.level) throw DomainError("cannot lower a perfection level");
  if (level > kLevelCap) throw PrecisionExhausted("perfection level cap exceeded", kLevelCap);
  if (level == a.level) return a;
  mpz_class factor = pow_ui(mpz_class(p_), level - a.level);
  return {scale_var_exponents(a.f, 0, factor), level};
}

PerfectedBase::Elem PerfectedBase::add(const Elem& a, const Elem& b) const {
  unsigned lvl = std::max(a.level, b.level);
  return {lift(a, lvl).f + lift(b, lvl).f, lvl};
}

PerfectedBase::Elem PerfectedBase::mul(const Elem& a, const Elem& b) const {
  unsigned lvl = std::max(a.level, b.level);
  return {lift(a, lvl).f * lift(b, lvl).f, lvl};
}

PerfectedBase::Elem PerfectedBase::div(const Elem& a, const Elem& b) const {
  unsigned lvl = std::max(a.level, b.level);
  return {lift(a, lvl).f / lift(b, lvl).f, lvl};
}

PerfectedBase::Elem PerfectedBase::pth_root(const Elem& a) const {
  if (a.level + 1 > kLevelCap)
    throw PrecisionExhausted("perfection level cap exceeded taking a p-th root", kLevelCap);
  // (sum c_i u'^i)^p = sum c_i u'^(ip) = sum c_i u^i at the coarser level
  return {a.f, a.level + 1};
}

bool PerfectedBase::eq(const Elem& a, const Elem& b) const {
  unsigned lvl = std::max(a.level, b.level);
  return lift(a, lvl).f.eq(lift(b, lvl).f);
}

mpq_class PerfectedBase::value(const Elem& a) const {
  if (a.f.is_zero()) throw DomainError("value of zero");
  mpz_class ord = min_exp(a.f.num(), 0) - min_exp(a.f.den(), 0);
  mpq_class v(ord, pow_ui(mpz_class(p_), a.level));
  v.canonicalize();
  return v;
}

GaussValuation::GaussValuation(std::uint32_t p, Variant variant)
    : p_(p), variant_(variant), field_(FieldDescriptor::make(p, 1, {"u", "x"})) {
  ValueGroup base = ValueGroup::p_divisible(p);
  ValueGroup z = ValueGroup::lex(1);
  group_ = variant == Variant::group_first ? ValueGroup::lex_sum({base, z})
                                           : ValueGroup::lex_sum({z, base});
}

GaussValuation::Elem GaussValuation::from_rf(RationalFunction f, unsigned level) const {
  if (!same_field(f.field(), field_)) throw DomainError("element not over F_p(u, x)");
  return {std::move(f), level};
}

GaussValuation::Elem GaussValuation::lift(const Elem& a, unsigned level) const {
  if (level < a.level) throw DomainError("cannot lower a perfection level");
  if (level > PerfectedBase::kLevelCap)
    throw PrecisionExhausted("perfection level cap exceeded", PerfectedBase::kLevelCap);
  if (level == a.level) return a;
  mpz_class factor = pow_ui(mpz_class(p_), level - a.level);
  return {scale_var_exponents(a.f, 0, factor), level};
}

GroupElement GaussValuation::poly_value(const Polynomial& f, unsigned level) const {
  if (f.is_zero()) throw DomainError("value of the zero polynomial");
  // group terms by x-degree, track the u-adic order of each coefficient
  std::map<mpz_class, mpz_class> ord_by_xdeg;  // x-degree -> min u-exponent
  for (const auto& [e, c] : f.terms()) {
    auto it = ord_by_xdeg.find(e[1]);
    if (it == ord_by_xdeg.end())
      ord_by_xdeg.emplace(e[1], e[0]);
    else if (e[0] < it->second)
      it->second = e[0];
  }
  mpz_class scale = pow_ui(mpz_class(p_), level);
  bool have = false;
  GroupElement best;
  for (const auto& [xdeg, uord] : ord_by_xdeg) {
    mpq_class nu(uord, scale);
    nu.canonicalize();
    GroupElement cand{variant_ == Variant::group_first
                          ? std::vector<mpq_class>{nu, mpq_class(xdeg)}
                          : std::vector<mpq_class>{mpq_class(xdeg), nu}};
    if (!have || group_.compare(cand, best) == Ordering::less) {
      best = std::move(cand);
      have = true;
    }
  }
  return best;
}

GroupElement GaussValuation::value(const Elem& a) const {
  if (a.f.is_zero()) throw DomainError("value of zero");
  return ge_sub(poly_value(a.f.num(), a.level), poly_value(a.f.den(), a.level));
}

bool GaussValuation::in_valuation_ring(const Elem& a) const {
  if (a.f.is_zero()) return true;
  return group_.sign(value(a)) != Ordering::less;
}

std::vector<GaussValuation::Elem> GaussValuation::x_basis_decompose(const Elem& v) const {
  unsigned fine = v.level + 1;
  if (fine > PerfectedBase::kLevelCap)
    throw PrecisionExhausted("perfection level cap exceeded in basis decomposition",
                             PerfectedBase::kLevelCap);
  // v = A/B = A B^(p-1) / B^p; split g := A B^(p-1) by x-degree mod p.
  Polynomial g = v.f.num() * v.f.den().pow(mpz_class(p_) - 1);
  std::vector<Polynomial> roots(p_, Polynomial(field_));
  ExpVec e(2);
  for (const auto& [exp, c] : g.terms()) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), exp[1].get_mpz_t(), mpz_class(p_).get_mpz_t());
    // term c u^a x^b with b = pq + i contributes c u'^a x^q to r_i
    // (coefficients in F_p are their own p-th roots)
    e[0] = exp[0];
    e[1] = q;
    roots[r.get_ui()].add_term(e, c);
  }
  Polynomial den_fine =
      scale_var_exponents(RationalFunction(v.f.den()), 0, mpz_class(p_)).num();
  std::vector<Elem> out;
  out.reserve(p_);
  for (std::uint32_t i = 0; i < p_; ++i)
    out.push_back({RationalFunction(roots[i], den_fine), fine});
  return out;
}

}  // namespace valfrob
