#ifndef VALFROB_VALUE_GROUP_HPP
#define VALFROB_VALUE_GROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "valfrob/errors.hpp"

namespace valfrob {

enum class Ordering { less = -1, equal = 0, greater = 1 };

// Produces nested rational enclosures (lo, hi) of a fixed irrational, with
// hi - lo <= 10^-digits. Implementations must be safe to call concurrently.
class IrrationalOracle {
 public:
  virtual ~IrrationalOracle() = default;
  virtual std::string name() const = 0;
  virtual int max_digits() const = 0;
  virtual std::pair<mpq_class, mpq_class> enclosure(int digits) const = 0;
};

// pi from a fixed 64-digit table. Requests beyond the table fail loudly.
std::shared_ptr<const IrrationalOracle> pi_oracle();

// Element of a value group: coordinates over the group's generator basis.
// Integral for lex and embedded factors; for a p-divisible factor the single
// coordinate is a rational whose denominator is a p-power (mpq canonical form
// keeps the numerator prime to p automatically).
struct GroupElement {
  std::vector<mpq_class> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement ge_add(const GroupElement& a, const GroupElement& b);
GroupElement ge_sub(const GroupElement& a, const GroupElement& b);
GroupElement ge_neg(const GroupElement& a);
GroupElement ge_scale(const mpz_class& n, const GroupElement& a);
bool ge_is_zero(const GroupElement& a);

// Exact ordered abelian group of one of four kinds:
//   lex(d)          Z^d with the lexicographic order
//   embedded        Z + Z*alpha inside R, alpha a designated irrational
//   p_divisible     Z[1/p] with the real order
//   lex_sum         lexicographic concatenation of the above
class ValueGroup {
 public:
  enum class Kind { lex, embedded, p_divisible, lex_sum };

  ValueGroup() = default;  // lex Z^1; reassign before use

  static ValueGroup lex(int rank);
  static ValueGroup embedded(std::shared_ptr<const IrrationalOracle> alpha);
  static ValueGroup p_divisible(std::uint32_t p);
  static ValueGroup lex_sum(std::vector<ValueGroup> components);

  Kind kind() const { return kind_; }
  const std::vector<ValueGroup>& components() const { return components_; }
  const std::shared_ptr<const IrrationalOracle>& irrational() const { return oracle_; }
  std::uint32_t divisible_p() const { return p_; }

  int rational_rank() const;
  // number of stored coordinates of an element
  std::size_t arity() const;
  bool p_divisible_flag() const;
  bool finitely_generated() const;
  // Krull dimension of a valuation ring with this value group = number of
  // proper convex subgroups: d for lex(d), 1 for the dense kinds, additive
  // over lex_sum.
  std::size_t convex_rank() const;

  GroupElement zero() const { return GroupElement{std::vector<mpq_class>(arity(), 0)}; }
  // Throws DomainError when the coordinates are not valid for this group.
  void validate(const GroupElement& a) const;

  Ordering compare(const GroupElement& a, const GroupElement& b) const;
  Ordering sign(const GroupElement& a) const { return compare(a, zero()); }

  // [G : pG]; 1 for a p-divisible factor at its own p, multiplicative over
  // lex_sum.
  mpz_class index_p(std::uint32_t p) const;

  // Minimum positive element when one exists: lex groups and lex_sums whose
  // last factor is discrete. Dense kinds have none.
  std::optional<GroupElement> smallest_positive() const;

  std::string render(const GroupElement& a) const;
  std::string describe() const;

  friend bool operator==(const ValueGroup& a, const ValueGroup& b);

 private:
  Kind kind_ = Kind::lex;
  int rank_ = 1;                                    // lex
  std::shared_ptr<const IrrationalOracle> oracle_;  // embedded
  std::uint32_t p_ = 0;                             // p_divisible
  std::vector<ValueGroup> components_;              // lex_sum

  Ordering sign_of_coords(const mpq_class* c, std::size_t n) const;
};

}  // namespace valfrob

#endif
