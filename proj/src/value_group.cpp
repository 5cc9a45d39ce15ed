#include "valfrob/value_group.hpp"

#include <algorithm>
#include <sstream>

#include "valfrob/polynomial.hpp"

namespace valfrob {

namespace {

// 3.14159... to 64 decimal places.
constexpr const char* kPiDigits =
    "3"
    "1415926535897932384626433832795028841971693993751058209749445923";

class PiOracle final : public IrrationalOracle {
 public:
  std::string name() const override { return "pi"; }
  int max_digits() const override { return 64; }
  std::pair<mpq_class, mpq_class> enclosure(int digits) const override {
    if (digits < 1) digits = 1;
    if (digits > max_digits())
      throw PrecisionExhausted("pi digit table exhausted", digits);
    mpz_class scaled(std::string(kPiDigits, kPiDigits + 1 + digits), 10);
    mpz_class denom = pow_ui(mpz_class(10), static_cast<unsigned long>(digits));
    mpq_class lo(scaled, denom), hi(scaled + 1, denom);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
  }
};

}  // namespace

std::shared_ptr<const IrrationalOracle> pi_oracle() {
  static const auto instance = std::make_shared<const PiOracle>();
  return instance;
}

GroupElement ge_add(const GroupElement& a, const GroupElement& b) {
  if (a.coords.size() != b.coords.size()) throw DomainError("group element arity mismatch");
  GroupElement r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

GroupElement ge_sub(const GroupElement& a, const GroupElement& b) {
  if (a.coords.size() != b.coords.size()) throw DomainError("group element arity mismatch");
  GroupElement r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

GroupElement ge_neg(const GroupElement& a) {
  GroupElement r = a;
  for (auto& c : r.coords) c = -c;
  return r;
}

GroupElement ge_scale(const mpz_class& n, const GroupElement& a) {
  GroupElement r = a;
  for (auto& c : r.coords) c *= n;
  return r;
}

bool ge_is_zero(const GroupElement& a) {
  for (const auto& c : a.coords)
    if (c != 0) return false;
  return true;
}

ValueGroup ValueGroup::lex(int rank) {
  if (rank < 1) throw DomainError("lex group rank must be >= 1");
  ValueGroup g;
  g.kind_ = Kind::lex;
  g.rank_ = rank;
  return g;
}

ValueGroup ValueGroup::embedded(std::shared_ptr<const IrrationalOracle> alpha) {
  if (!alpha) throw DomainError("embedded group needs an irrational oracle");
  ValueGroup g;
  g.kind_ = Kind::embedded;
  g.oracle_ = std::move(alpha);
  return g;
}

ValueGroup ValueGroup::p_divisible(std::uint32_t p) {
  if (p < 2) throw DomainError("p_divisible group needs a prime p");
  ValueGroup g;
  g.kind_ = Kind::p_divisible;
  g.p_ = p;
  return g;
}

ValueGroup ValueGroup::lex_sum(std::vector<ValueGroup> components) {
  if (components.empty()) throw DomainError("lex_sum needs at least one component");
  if (components.size() == 1) return components[0];
  ValueGroup g;
  g.kind_ = Kind::lex_sum;
  g.components_ = std::move(components);
  return g;
}

int ValueGroup::rational_rank() const {
  switch (kind_) {
    case Kind::lex:
      return rank_;
    case Kind::embedded:
      return 2;
    case Kind::p_divisible:
      return 1;
    case Kind::lex_sum: {
      int r = 0;
      for (const auto& c : components_) r += c.rational_rank();
      return r;
    }
  }
  return 0;
}

std::size_t ValueGroup::arity() const {
  switch (kind_) {
    case Kind::lex:
      return static_cast<std::size_t>(rank_);
    case Kind::embedded:
      return 2;
    case Kind::p_divisible:
      return 1;
    case Kind::lex_sum: {
      std::size_t r = 0;
      for (const auto& c : components_) r += c.arity();
      return r;
    }
  }
  return 0;
}

bool ValueGroup::p_divisible_flag() const {
  switch (kind_) {
    case Kind::p_divisible:
      return true;
    case Kind::lex_sum: {
      for (const auto& c : components_)
        if (!c.p_divisible_flag()) return false;
      return true;
    }
    default:
      return false;
  }
}

bool ValueGroup::finitely_generated() const {
  switch (kind_) {
    case Kind::lex:
    case Kind::embedded:
      return true;
    case Kind::p_divisible:
      return false;
    case Kind::lex_sum: {
      for (const auto& c : components_)
        if (!c.finitely_generated()) return false;
      return true;
    }
  }
  return false;
}

std::size_t ValueGroup::convex_rank() const {
  switch (kind_) {
    case Kind::lex:
      return static_cast<std::size_t>(rank_);
    case Kind::embedded:
    case Kind::p_divisible:
      return 1;  // dense subgroups of R are archimedean
    case Kind::lex_sum: {
      std::size_t r = 0;
      for (const auto& c : components_) r += c.convex_rank();
      return r;
    }
  }
  return 0;
}

void ValueGroup::validate(const GroupElement& a) const {
  if (a.coords.size() != arity()) throw DomainError("group element arity mismatch");
  switch (kind_) {
    case Kind::lex:
    case Kind::embedded:
      for (const auto& c : a.coords)
        if (c.get_den() != 1) throw DomainError("non-integral coordinate in discrete factor");
      break;
    case Kind::p_divisible: {
      // denominator must be a power of p
      mpz_class den = a.coords[0].get_den();
      while (den > 1) {
        if (!mpz_divisible_ui_p(den.get_mpz_t(), p_))
          throw DomainError("denominator of a p_divisible coordinate is not a p-power");
        den /= p_;
      }
      break;
    }
    case Kind::lex_sum: {
      std::size_t off = 0;
      for (const auto& comp : components_) {
        GroupElement part{
            std::vector<mpq_class>(a.coords.begin() + off, a.coords.begin() + off + comp.arity())};
        comp.validate(part);
        off += comp.arity();
      }
      break;
    }
  }
}

Ordering ValueGroup::sign_of_coords(const mpq_class* c, std::size_t n) const {
  switch (kind_) {
    case Kind::lex: {
      for (std::size_t i = 0; i < n; ++i) {
        if (c[i] > 0) return Ordering::greater;
        if (c[i] < 0) return Ordering::less;
      }
      return Ordering::equal;
    }
    case Kind::p_divisible: {
      if (c[0] > 0) return Ordering::greater;
      if (c[0] < 0) return Ordering::less;
      return Ordering::equal;
    }
    case Kind::embedded: {
      const mpq_class& da = c[0];
      const mpq_class& db = c[1];
      if (db == 0) {
        if (da > 0) return Ordering::greater;
        if (da < 0) return Ordering::less;
        return Ordering::equal;
      }
      // sign of da + db*alpha, certified by refining the enclosure
      for (int digits = 8; digits <= oracle_->max_digits(); digits = std::min(digits * 2, oracle_->max_digits())) {
        auto [lo, hi] = oracle_->enclosure(digits);
        mpq_class at_lo = da + db * lo;
        mpq_class at_hi = da + db * hi;
        if (at_lo > 0 && at_hi > 0) return Ordering::greater;
        if (at_lo < 0 && at_hi < 0) return Ordering::less;
        if (digits == oracle_->max_digits()) break;
      }
      throw PrecisionExhausted(
          "irrational enclosure exhausted while comparing; coordinates exceed the supported "
          "magnitude",
          oracle_->max_digits());
    }
    case Kind::lex_sum: {
      std::size_t off = 0;
      for (const auto& comp : components_) {
        Ordering s = comp.sign_of_coords(c + off, comp.arity());
        if (s != Ordering::equal) return s;
        off += comp.arity();
      }
      return Ordering::equal;
    }
  }
  return Ordering::equal;
}

Ordering ValueGroup::compare(const GroupElement& a, const GroupElement& b) const {
  if (a.coords.size() != arity() || b.coords.size() != arity())
    throw DomainError("group element arity mismatch");
  if (a.coords == b.coords) return Ordering::equal;
  GroupElement d = ge_sub(a, b);
  return sign_of_coords(d.coords.data(), d.coords.size());
}

mpz_class ValueGroup::index_p(std::uint32_t p) const {
  switch (kind_) {
    case Kind::lex:
      return pow_ui(mpz_class(p), static_cast<unsigned long>(rank_));
    case Kind::embedded:
      return pow_ui(mpz_class(p), 2);
    case Kind::p_divisible:
      // pG = G at the group's own p; index p at any other prime
      return p == p_ ? mpz_class(1) : mpz_class(p);
    case Kind::lex_sum: {
      mpz_class r = 1;
      for (const auto& c : components_) r *= c.index_p(p);
      return r;
    }
  }
  return 1;
}

std::optional<GroupElement> ValueGroup::smallest_positive() const {
  switch (kind_) {
    case Kind::lex: {
      GroupElement e = zero();
      e.coords.back() = 1;
      return e;
    }
    case Kind::embedded:
    case Kind::p_divisible:
      return std::nullopt;  // dense in R
    case Kind::lex_sum: {
      // the last factor decides: anything positive there is dominated by
      // every element with a positive earlier coordinate
      auto tail = components_.back().smallest_positive();
      if (!tail) return std::nullopt;
      GroupElement e = zero();
      std::size_t off = arity() - components_.back().arity();
      for (std::size_t i = 0; i < tail->coords.size(); ++i) e.coords[off + i] = tail->coords[i];
      return e;
    }
  }
  return std::nullopt;
}

std::string ValueGroup::render(const GroupElement& a) const {
  switch (kind_) {
    case Kind::embedded: {
      std::ostringstream out;
      if (a.coords[1] == 0) return a.coords[0].get_str();
      if (a.coords[0] != 0) out << a.coords[0].get_str() << (a.coords[1] > 0 ? " + " : " - ");
      else if (a.coords[1] < 0)
        out << "-";
      mpq_class mag = abs(a.coords[1]);
      if (mag != 1) out << mag.get_str() << "*";
      out << oracle_->name();
      return out.str();
    }
    case Kind::p_divisible:
      return a.coords[0].get_str();
    case Kind::lex:
    case Kind::lex_sum: {
      std::ostringstream out;
      out << "(";
      for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (i) out << ", ";
        out << a.coords[i].get_str();
      }
      out << ")";
      return out.str();
    }
  }
  return "";
}

std::string ValueGroup::describe() const {
  switch (kind_) {
    case Kind::lex:
      return "lex Z^" + std::to_string(rank_);
    case Kind::embedded:
      return "Z + Z*" + oracle_->name();
    case Kind::p_divisible:
      return "Z[1/" + std::to_string(p_) + "]";
    case Kind::lex_sum: {
      std::string out = "lex_sum(";
      for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) out += ", ";
        out += components_[i].describe();
      }
      return out + ")";
    }
  }
  return "";
}

bool operator==(const ValueGroup& a, const ValueGroup& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case ValueGroup::Kind::lex:
      return a.rank_ == b.rank_;
    case ValueGroup::Kind::embedded:
      return a.oracle_->name() == b.oracle_->name();
    case ValueGroup::Kind::p_divisible:
      return a.p_ == b.p_;
    case ValueGroup::Kind::lex_sum:
      return a.components_ == b.components_;
  }
  return false;
}

}  // namespace valfrob
