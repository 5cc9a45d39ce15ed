#include "valfrob/hahn.hpp"

#include <algorithm>
#include <map>

namespace valfrob {

void HahnSeries::normalize() {
  std::map<mpq_class, Fq> combined;
  for (const auto& [e, c] : terms_) {
    auto it = combined.find(e);
    if (it == combined.end())
      combined.emplace(e, c);
    else
      it->second = field_.add(it->second, c);
  }
  terms_.clear();
  for (const auto& [e, c] : combined) {
    if (c.is_zero()) continue;
    if (tail_bound_ && e >= *tail_bound_) continue;  // not certified
    terms_.emplace_back(e, c);
  }
}

HahnSeries HahnSeries::finite(const GroundField& f, std::vector<Term> terms) {
  HahnSeries s(f);
  s.terms_ = std::move(terms);
  s.normalize();
  return s;
}

HahnSeries HahnSeries::truncated(const GroundField& f, std::vector<Term> terms,
                                 mpq_class tail_bound) {
  HahnSeries s(f);
  s.terms_ = std::move(terms);
  s.tail_bound_ = std::move(tail_bound);
  s.normalize();
  return s;
}

HahnSeries HahnSeries::add(const HahnSeries& o) const {
  if (!(field_ == o.field_)) throw DomainError("Hahn series field mismatch");
  HahnSeries s(field_);
  s.terms_ = terms_;
  s.terms_.insert(s.terms_.end(), o.terms_.begin(), o.terms_.end());
  if (tail_bound_ && o.tail_bound_)
    s.tail_bound_ = std::min(*tail_bound_, *o.tail_bound_);
  else if (tail_bound_)
    s.tail_bound_ = tail_bound_;
  else
    s.tail_bound_ = o.tail_bound_;
  s.normalize();
  return s;
}

HahnSeries HahnSeries::neg() const {
  HahnSeries s(field_);
  s.terms_ = terms_;
  for (auto& [e, c] : s.terms_) c = field_.neg(c);
  s.tail_bound_ = tail_bound_;
  return s;
}

HahnSeries HahnSeries::sub(const HahnSeries& o) const { return add(o.neg()); }

HahnSeries HahnSeries::mul(const HahnSeries& o) const {
  if (!(field_ == o.field_)) throw DomainError("Hahn series field mismatch");
  if (exactly_zero() || o.exactly_zero()) return HahnSeries(field_);
  HahnSeries s(field_);
  // Unknown-part exponents: anything involving a tail starts at
  // tail + the other factor's least possible exponent.
  auto least_possible = [](const HahnSeries& x) -> std::optional<mpq_class> {
    if (!x.terms_.empty()) return x.terms_.front().first;
    return x.tail_bound_;  // nonempty unless exactly zero
  };
  std::optional<mpq_class> tail;
  auto consider = [&tail](const std::optional<mpq_class>& t) {
    if (!t) return;
    if (!tail || *t < *tail) tail = t;
  };
  if (tail_bound_) {
    auto lo = least_possible(o);
    consider(mpq_class(*tail_bound_ + *lo));
  }
  if (o.tail_bound_) {
    auto lo = least_possible(*this);
    consider(mpq_class(*o.tail_bound_ + *lo));
  }
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_)
      s.terms_.emplace_back(ea + eb, field_.mul(ca, cb));
  s.tail_bound_ = tail;
  s.normalize();
  return s;
}

HahnSeries HahnSeries::pow(unsigned long e) const {
  HahnSeries acc = finite(field_, {{mpq_class(0), field_.one()}});
  for (unsigned long i = 0; i < e; ++i) acc = acc.mul(*this);
  return acc;
}

std::optional<mpq_class> HahnSeries::leading_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().first;
}

HahnSeries hahn_t(const GroundField& f) {
  return HahnSeries::finite(f, {{mpq_class(1), f.one()}});
}

HahnSeries hahn_witness_y(const GroundField& f, unsigned depth) {
  std::vector<HahnSeries::Term> terms;
  mpz_class pk = 1;
  for (unsigned i = 1; i <= depth; ++i) {
    pk *= f.p();
    mpq_class e = 1 - mpq_class(1, pk);
    e.canonicalize();
    terms.emplace_back(e, f.one());
  }
  pk *= f.p();
  mpq_class tail = 1 - mpq_class(1, pk);
  tail.canonicalize();
  return HahnSeries::truncated(f, std::move(terms), tail);
}

mpq_class hahn_embed_value(const Polynomial& f, const mpq_class& bound) {
  if (f.is_zero()) throw DomainError("value of zero");
  if (f.field()->arity() != 2) throw DomainError("witness embedding is for a two-variable field");
  const GroundField& gf = f.field()->base();

  for (unsigned depth = 4; depth <= 64; depth *= 2) {
    HahnSeries x = hahn_t(gf);
    HahnSeries y = hahn_witness_y(gf, depth);
    HahnSeries acc = HahnSeries::finite(gf, {});
    for (const auto& [e, c] : f.terms()) {
      if (!mpz_fits_ulong_p(e[0].get_mpz_t()) || !mpz_fits_ulong_p(e[1].get_mpz_t()))
        throw DomainError("exponent too large for Hahn evaluation");
      HahnSeries term = x.pow(e[0].get_ui()).mul(y.pow(e[1].get_ui()));
      acc = acc.add(term.mul(HahnSeries::finite(gf, {{mpq_class(0), c}})));
    }
    auto lead = acc.leading_exponent();
    if (lead && *lead < bound) return *lead;
    if (lead) break;  // certified leading term, but at or beyond the bound
    if (acc.exactly_zero())
      throw DomainError("image vanished exactly; the input is zero on the witness");
    if (acc.tail_bound() && *acc.tail_bound() >= bound) break;  // nothing below the bound
    // otherwise escalate the depth; deeper truncations can only help
  }
  throw PrecisionExhausted("no certified leading term below the exponent bound",
                           static_cast<long>(mpz_class(bound.get_num() / bound.get_den()).get_si()));
}

GroupElement unit_pth_power_factor(const GroupElement& gamma, const ValueGroup& group) {
  if (!group.p_divisible_flag())
    throw DomainError("the value group is not p-divisible; no p-th power factorization");
  group.validate(gamma);
  if (group.sign(gamma) != Ordering::greater)
    throw DomainError("p-th power factorization needs a positive value");
  std::uint32_t p = group.kind() == ValueGroup::Kind::p_divisible
                        ? group.divisible_p()
                        : group.components().front().divisible_p();
  GroupElement half = gamma;
  for (auto& c : half.coords) {
    c /= p;
    c.canonicalize();
  }
  // rejects mixed-p sums, where gamma/p falls outside the group
  group.validate(half);
  return half;
}

}  // namespace valfrob
