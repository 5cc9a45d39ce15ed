#ifndef VALFROB_FIELD_HPP
#define VALFROB_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "valfrob/ground_field.hpp"

namespace valfrob {

class FieldDescriptor;
using FieldRef = std::shared_ptr<const FieldDescriptor>;

// Describes a rational function field K = F_q(variables). `perfected_variables`
// are generators that have been closed under p-th roots: they still carry
// transcendence degree but contribute nothing to [K:K^p]. The plain function
// fields used for polynomial arithmetic have an empty perfected list; the
// mixed form is only needed to describe fields like the perfection of F_p(s)
// with one further indeterminate adjoined.
class FieldDescriptor {
 public:
  static FieldRef make(std::uint32_t p, std::uint32_t k, std::vector<std::string> vars);
  static FieldRef make(GroundField base, std::vector<std::string> vars,
                       std::vector<std::string> perfected_vars = {});

  const GroundField& base() const { return base_; }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<std::string>& perfected_variables() const { return perfected_variables_; }

  std::size_t arity() const { return variables_.size(); }
  // Index of a variable name, or -1.
  int var_index(const std::string& name) const;

  // True when [K:K^p] = 1.
  bool perfected() const { return variables_.empty(); }

  // [K:K^p] = p^#variables (finite base fields are perfect, perfected
  // generators contribute 1).
  mpz_class degree_over_pth_powers() const;

  // Transcendence degree over the prime field.
  std::size_t trdeg() const { return variables_.size() + perfected_variables_.size(); }

  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
    return a.base_ == b.base_ && a.variables_ == b.variables_ &&
           a.perfected_variables_ == b.perfected_variables_;
  }

 private:
  FieldDescriptor(GroundField base, std::vector<std::string> vars,
                  std::vector<std::string> perfected_vars);

  GroundField base_;
  std::vector<std::string> variables_;
  std::vector<std::string> perfected_variables_;
};

inline bool same_field(const FieldRef& a, const FieldRef& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace valfrob

#endif
