#include "valfrob/valuation.hpp"

#include <algorithm>
#include <set>

#include "valfrob/int_linalg.hpp"

namespace valfrob {

MonomialValuation::MonomialValuation(FieldRef field, ValueGroup group,
                                     std::vector<GroupElement> weights,
                                     std::vector<std::size_t> parameters,
                                     std::vector<std::size_t> residue_vars)
    : field_(std::move(field)),
      group_(std::move(group)),
      weights_(std::move(weights)),
      parameters_(std::move(parameters)),
      residue_vars_(std::move(residue_vars)) {
  const std::size_t n = field_->arity();
  if (weights_.size() != n) throw DomainError("one weight per variable required");
  for (const auto& w : weights_) {
    group_.validate(w);
    if (group_.sign(w) == Ordering::less) throw DomainError("negative variable weight");
  }
  std::set<std::size_t> seen;
  for (auto i : parameters_) {
    if (i >= n) throw DomainError("parameter index out of range");
    seen.insert(i);
  }
  for (auto i : residue_vars_) {
    if (i >= n) throw DomainError("residue variable index out of range");
    seen.insert(i);
  }
  if (seen.size() != parameters_.size() + residue_vars_.size() || seen.size() != n)
    throw DomainError("parameters and residue variables must partition the variable set");
}

GroupElement MonomialValuation::weight_pairing(const ExpVec& exponents) const {
  GroupElement acc = group_.zero();
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    acc = ge_add(acc, ge_scale(exponents[i], weights_[i]));
  }
  return acc;
}

GroupElement MonomialValuation::value(const Polynomial& f) const {
  if (f.is_zero()) throw DomainError("value of the zero polynomial");
  bool have = false;
  GroupElement best;
  for (const auto& [e, c] : f.terms()) {
    GroupElement v = weight_pairing(e);
    if (!have || group_.compare(v, best) == Ordering::less) {
      best = std::move(v);
      have = true;
    }
  }
  return best;
}

GroupElement MonomialValuation::value(const RationalFunction& f) const {
  if (f.is_zero()) throw DomainError("value of zero");
  return ge_sub(value(f.num()), value(f.den()));
}

bool MonomialValuation::in_valuation_ring(const RationalFunction& f) const {
  if (f.is_zero()) return true;
  return group_.sign(value(f)) != Ordering::less;
}

Polynomial MonomialValuation::initial_form(const Polynomial& f) const {
  GroupElement v = value(f);
  Polynomial init(field_);
  for (const auto& [e, c] : f.terms())
    if (group_.compare(weight_pairing(e), v) == Ordering::equal) init.add_term(e, c);
  return init;
}

std::vector<std::vector<mpz_class>> MonomialValuation::weight_matrix() const {
  const std::size_t rows = group_.arity();
  const std::size_t n = field_->arity();
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(n, 0));
  // clear denominators per row (p-divisible coordinates may be fractional)
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class lcm = 1;
    for (std::size_t i = 0; i < n; ++i) {
      mpz_class den = weights_[i].coords[r].get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t i = 0; i < n; ++i) {
      mpq_class scaled = weights_[i].coords[r] * lcm;
      m[r][i] = scaled.get_num();
    }
  }
  return m;
}

std::size_t MonomialValuation::weight_span_rank() const {
  return rank(weight_matrix());
}

MonomializedCheck MonomialValuation::verify_monomialized() const {
  MonomializedCheck out;
  out.group_finitely_generated = group_.finitely_generated();
  if (!out.group_finitely_generated)
    out.diagnostics.push_back("value group is not finitely generated; no finite free basis");

  const int rank = group_.rational_rank();
  out.parameter_count_matches_rank = static_cast<int>(parameters_.size()) == rank;
  if (!out.parameter_count_matches_rank)
    out.diagnostics.push_back("declared " + std::to_string(parameters_.size()) +
                              " parameters but the group has rational rank " +
                              std::to_string(rank));

  out.residue_weights_zero = true;
  for (auto i : residue_vars_) {
    if (!ge_is_zero(weights_[i])) {
      out.residue_weights_zero = false;
      out.diagnostics.push_back("residue variable '" + field_->variables()[i] +
                                "' has nonzero weight");
    }
  }

  out.parameter_weights_free_basis = false;
  // for the finitely generated kinds, coordinate arity equals rational rank
  if (out.group_finitely_generated && out.parameter_count_matches_rank) {
    // square integer matrix of parameter weight coordinates; free generation
    // of the whole group means |det| = 1
    const std::size_t d = parameters_.size();
    ZMatrix m(d, std::vector<mpz_class>(d, 0));
    bool integral = true;
    for (std::size_t j = 0; j < d; ++j) {
      const GroupElement& w = weights_[parameters_[j]];
      for (std::size_t r = 0; r < d; ++r) {
        if (w.coords[r].get_den() != 1) integral = false;
        m[r][j] = w.coords[r].get_num();
      }
    }
    if (integral) {
      out.parameter_weights_free_basis = abs_det(m) == 1;
      if (!out.parameter_weights_free_basis)
        out.diagnostics.push_back("parameter weights do not generate the group freely");
    } else {
      out.diagnostics.push_back("parameter weights have fractional coordinates");
    }
  }

  out.ok = out.group_finitely_generated && out.parameter_count_matches_rank &&
           out.parameter_weights_free_basis && out.residue_weights_zero;
  return out;
}

ResidueFieldInfo MonomialValuation::residue_field() const {
  ResidueFieldInfo info;
  auto kernel = integer_kernel_basis(weight_matrix());

  // Sign-normalize each basis vector (last nonzero coordinate positive, so a
  // vector like (1,-1) is presented as y/x rather than x/y). Plain weight-zero
  // variables come out as unit vectors and keep their own names; anything else
  // gets a fresh name.
  std::vector<std::string> names;
  std::set<std::string> used;
  for (auto& vec : kernel) {
    for (std::size_t i = vec.size(); i-- > 0;) {
      if (vec[i] == 0) continue;
      if (vec[i] < 0)
        for (auto& x : vec) x = -x;
      break;
    }
    int unit_at = -1;
    bool is_unit = true;
    for (std::size_t i = 0; i < vec.size(); ++i) {
      if (vec[i] == 0) continue;
      if (unit_at == -1 && vec[i] == 1) {
        unit_at = static_cast<int>(i);
      } else {
        is_unit = false;
        break;
      }
    }
    std::string nm;
    if (is_unit && unit_at >= 0) {
      nm = field_->variables()[static_cast<std::size_t>(unit_at)];
    } else {
      for (int t = 1;; ++t) {
        nm = "t" + std::to_string(t);
        if (field_->var_index(nm) < 0 && !used.count(nm)) break;
      }
    }
    used.insert(nm);
    names.push_back(nm);
    info.generator_exponents.push_back(vec);
  }
  info.names = names;
  info.field = FieldDescriptor::make(field_->base(), names);
  return info;
}

ResidueElement MonomialValuation::residue(const RationalFunction& f) const {
  if (f.is_zero()) throw DomainError("residue of zero");
  if (group_.sign(value(f)) != Ordering::equal)
    throw DomainError("residue requires a value-zero element");

  ResidueFieldInfo info = residue_field();
  const std::size_t n = field_->arity();
  const std::size_t m = info.generator_exponents.size();

  Polynomial ini_num = initial_form(f.num());
  Polynomial ini_den = initial_form(f.den());
  const ExpVec& base_exp = ini_den.terms().begin()->first;

  // columns of the kernel basis
  ZMatrix basis_cols(n, std::vector<mpz_class>(m, 0));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) basis_cols[i][j] = info.generator_exponents[j][i];

  // rewrite a (monomials of equal value) / x^base_exp as a Laurent
  // polynomial in the generators
  auto to_lattice_coords = [&](const Polynomial& p) {
    std::vector<std::pair<std::vector<mpz_class>, Fq>> out;
    for (const auto& [e, c] : p.terms()) {
      std::vector<mpz_class> diff(n);
      for (std::size_t i = 0; i < n; ++i) diff[i] = e[i] - base_exp[i];
      auto coords = solve_integer(basis_cols, diff);
      if (!coords)
        throw DomainError(
            "initial-form quotient not expressible in residue generators; the descriptor is not "
            "monomialized");
      out.emplace_back(std::move(*coords), c);
    }
    return out;
  };

  auto num_terms = to_lattice_coords(ini_num);
  auto den_terms = to_lattice_coords(ini_den);

  // shift exponents so both Laurent polynomials become ordinary polynomials
  std::vector<mpz_class> shift(m, 0);
  for (const auto& [e, c] : num_terms)
    for (std::size_t j = 0; j < m; ++j) shift[j] = std::min(shift[j], e[j]);
  for (const auto& [e, c] : den_terms)
    for (std::size_t j = 0; j < m; ++j) shift[j] = std::min(shift[j], e[j]);

  auto build = [&](const std::vector<std::pair<std::vector<mpz_class>, Fq>>& terms) {
    Polynomial p(info.field);
    ExpVec e(m);
    for (const auto& [coords, c] : terms) {
      for (std::size_t j = 0; j < m; ++j) e[j] = coords[j] - shift[j];
      p.add_term(e, c);
    }
    return p;
  };

  ResidueElement out{info, RationalFunction(build(num_terms), build(den_terms))};
  return out;
}

}  // namespace valfrob
