#include "valfrob/series.hpp"

#include "valfrob/errors.hpp"

namespace valfrob {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct LazySeries::Impl {
  GroundField field;
  Gen gen;
  mutable std::vector<Fq> memo;
  mutable std::mutex mu;

  Impl(GroundField f, Gen g) : field(f), gen(std::move(g)) {}

  Fq at(std::uint64_t i) const {
    std::lock_guard<std::mutex> lock(mu);
    while (memo.size() <= i) memo.push_back(gen(memo.size()));
    return memo[i];
  }
};

LazySeries::LazySeries(GroundField field, Gen gen)
    : impl_(std::make_shared<Impl>(field, std::move(gen))) {}

const GroundField& LazySeries::field() const { return impl_->field; }

Fq LazySeries::at(std::uint64_t i) const { return impl_->at(i); }

LazySeries LazySeries::zero(const GroundField& f) {
  return LazySeries(f, [](std::uint64_t) { return Fq{}; });
}

LazySeries LazySeries::one(const GroundField& f) { return t_power(f, 0); }

LazySeries LazySeries::t_power(const GroundField& f, std::uint64_t k) {
  Fq one = f.one();
  return LazySeries(f, [k, one](std::uint64_t i) { return i == k ? one : Fq{}; });
}

LazySeries LazySeries::seeded_unit_order(const GroundField& f, std::uint64_t seed) {
  return LazySeries(f, [f, seed](std::uint64_t i) -> Fq {
    if (i == 0) return Fq{};
    std::uint64_t r = splitmix64(seed ^ (i * 0xD1B54A32D192ED03ULL));
    if (i == 1) return f.from_int(mpz_class(1 + r % (f.p() - 1)));
    return f.from_int(mpz_class(r % f.p()));
  });
}

LazySeries LazySeries::add(const LazySeries& o) const {
  if (!(field() == o.field())) throw DomainError("series ground field mismatch");
  LazySeries a = *this, b = o;
  GroundField f = field();
  return LazySeries(f, [f, a, b](std::uint64_t i) { return f.add(a.at(i), b.at(i)); });
}

LazySeries LazySeries::sub(const LazySeries& o) const {
  if (!(field() == o.field())) throw DomainError("series ground field mismatch");
  LazySeries a = *this, b = o;
  GroundField f = field();
  return LazySeries(f, [f, a, b](std::uint64_t i) { return f.sub(a.at(i), b.at(i)); });
}

LazySeries LazySeries::mul(const LazySeries& o) const {
  if (!(field() == o.field())) throw DomainError("series ground field mismatch");
  LazySeries a = *this, b = o;
  GroundField f = field();
  return LazySeries(f, [f, a, b](std::uint64_t i) {
    Fq acc{};
    for (std::uint64_t j = 0; j <= i; ++j) acc = f.add(acc, f.mul(a.at(j), b.at(i - j)));
    return acc;
  });
}

LazySeries LazySeries::scaled(const Fq& c) const {
  LazySeries a = *this;
  GroundField f = field();
  return LazySeries(f, [f, a, c](std::uint64_t i) { return f.mul(a.at(i), c); });
}

LazySeries LazySeries::frobenius(unsigned e) const {
  LazySeries a = *this;
  GroundField f = field();
  std::uint64_t scale = 1;
  for (unsigned i = 0; i < e; ++i) scale *= f.p();
  return LazySeries(f, [f, a, e, scale](std::uint64_t i) -> Fq {
    if (i % scale != 0) return Fq{};
    return f.frobenius(a.at(i / scale), e);
  });
}

LazySeries LazySeries::split() const {
  LazySeries a = *this;
  GroundField f = field();
  std::uint64_t p = f.p();
  return LazySeries(f, [f, a, p](std::uint64_t i) { return f.pth_root(a.at(i * p)); });
}

long series_ord(const LazySeries& x, long cap) {
  if (cap < 1) throw DomainError("order scan needs a positive cap");
  for (long i = 0; i < cap; ++i)
    if (!x.at(static_cast<std::uint64_t>(i)).is_zero()) return i;
  throw PrecisionExhausted("no nonzero coefficient below the cap", cap);
}

SeriesEmbedding::SeriesEmbedding(FieldRef field, std::uint64_t seed, long initial_cap)
    : field_(std::move(field)), seed_(seed), initial_cap_(initial_cap) {
  if (field_->arity() < 1) throw DomainError("embedding needs at least one variable");
  if (initial_cap_ < 2) initial_cap_ = 2;
  const GroundField& gf = field_->base();
  images_.push_back(LazySeries::t_power(gf, 1));  // first variable -> t exactly
  if (field_->arity() >= 2) {
    // second variable -> t * p(t); order exactly 2 by the stream's forced
    // unit coefficient
    images_.push_back(LazySeries::t_power(gf, 1).mul(LazySeries::seeded_unit_order(gf, seed_)));
  }
  for (std::size_t i = 2; i < field_->arity(); ++i)
    images_.push_back(LazySeries::t_power(gf, 1).mul(
        LazySeries::seeded_unit_order(gf, splitmix64(seed_ + i))));
  // certify each image nonzero within the cap
  for (const auto& img : images_) series_ord(img, initial_cap_);
}

namespace {

LazySeries series_pow(const LazySeries& base, unsigned long k) {
  LazySeries acc = LazySeries::one(base.field());
  LazySeries sq = base;
  while (k > 0) {
    if (k & 1) acc = acc.mul(sq);
    k >>= 1;
    if (k > 0) sq = sq.mul(sq);
  }
  return acc;
}

}  // namespace

LazySeries SeriesEmbedding::eval(const Polynomial& f) const {
  const GroundField& gf = field_->base();
  LazySeries acc = LazySeries::zero(gf);
  for (const auto& [e, c] : f.terms()) {
    LazySeries term = LazySeries::one(gf).scaled(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mpz_fits_ulong_p(e[i].get_mpz_t()))
        throw DomainError("exponent too large for series evaluation");
      term = term.mul(series_pow(images_[i], e[i].get_ui()));
    }
    acc = acc.add(term);
  }
  return acc;
}

long SeriesEmbedding::value(const RationalFunction& f) const {
  if (f.is_zero()) throw DomainError("value of zero");
  LazySeries n = eval(f.num());
  LazySeries d = eval(f.den());
  for (long cap = initial_cap_;; cap *= 2) {
    bool last = cap >= kHardCap;
    if (last) cap = kHardCap;
    try {
      return series_ord(n, cap) - series_ord(d, cap);
    } catch (const PrecisionExhausted&) {
      if (last)
        throw PrecisionExhausted(
            "series order undecided at the escalation limit; the image may vanish", kHardCap);
    }
  }
}

}  // namespace valfrob
