#ifndef VALFROB_VALUATION_HPP
#define VALFROB_VALUATION_HPP

#include <string>
#include <vector>

#include "valfrob/rational_function.hpp"
#include "valfrob/value_group.hpp"

namespace valfrob {

struct MonomializedCheck {
  bool ok = false;
  bool group_finitely_generated = false;
  bool parameter_count_matches_rank = false;
  bool parameter_weights_free_basis = false;
  bool residue_weights_zero = false;
  std::vector<std::string> diagnostics;
};

// Residue field of a monomial valuation: one monomial generator per basis
// vector of the kernel lattice of the weight pairing. Generators may be
// Laurent monomials (negative exponents) in the original variables.
struct ResidueFieldInfo {
  FieldRef field;  // F_q(generator names)
  std::vector<std::string> names;
  std::vector<std::vector<mpz_class>> generator_exponents;  // per generator
};

// Image of a value-zero element in the residue field.
struct ResidueElement {
  ResidueFieldInfo residue_field;
  RationalFunction value;  // element of residue_field.field
};

// Monomial valuation on F_q(x_1,...,x_n): fixed nonnegative weight per
// variable, value of a polynomial = minimum weight pairing over its support,
// extended to fractions by subtraction. Variables are partitioned into
// parameters (intended to carry a free basis of the value group) and residue
// variables (intended weight zero); `verify_monomialized` checks whether the
// declared partition actually is of that shape.
class MonomialValuation {
 public:
  MonomialValuation(FieldRef field, ValueGroup group, std::vector<GroupElement> weights,
                    std::vector<std::size_t> parameters, std::vector<std::size_t> residue_vars);

  const FieldRef& field() const { return field_; }
  const ValueGroup& group() const { return group_; }
  const std::vector<GroupElement>& weights() const { return weights_; }
  const std::vector<std::size_t>& parameters() const { return parameters_; }
  const std::vector<std::size_t>& residue_vars() const { return residue_vars_; }

  GroupElement weight_pairing(const ExpVec& exponents) const;

  GroupElement value(const Polynomial& f) const;       // error on zero
  GroupElement value(const RationalFunction& f) const;  // error on zero
  bool in_valuation_ring(const RationalFunction& f) const;  // zero counts as inside

  Polynomial initial_form(const Polynomial& f) const;

  MonomializedCheck verify_monomialized() const;
  bool monomialized() const { return verify_monomialized().ok; }

  // rank over Q of the subgroup the weights actually span; a consistent
  // descriptor declares a group of exactly this rational rank
  std::size_t weight_span_rank() const;

  ResidueFieldInfo residue_field() const;
  ResidueElement residue(const RationalFunction& f) const;  // needs value 0

 private:
  // weight coordinates as an integer matrix (group arity rows, n columns),
  // rows scaled to clear denominators
  std::vector<std::vector<mpz_class>> weight_matrix() const;

  FieldRef field_;
  ValueGroup group_;
  std::vector<GroupElement> weights_;
  std::vector<std::size_t> parameters_;
  std::vector<std::size_t> residue_vars_;
};

}  // namespace valfrob

#endif
