#include "valfrob/frob_split.hpp"

#include <algorithm>
#include <sstream>

#include "valfrob/sweep.hpp"

namespace valfrob {

namespace {

// dense Gaussian elimination over the rational function field;
// nullopt when the matrix is singular or the system inconsistent
std::optional<std::vector<RationalFunction>> solve_rf_system(
    std::vector<std::vector<RationalFunction>> m, std::vector<RationalFunction> rhs,
    const FieldRef& field) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t lead = 0;
  std::vector<int> pivot_of_col(cols, -1);
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t r = lead; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[lead], m[piv]);
    std::swap(rhs[lead], rhs[piv]);
    RationalFunction d = m[lead][c];
    for (std::size_t j = c; j < cols; ++j) m[lead][j] = m[lead][j] / d;
    rhs[lead] = rhs[lead] / d;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m[r][c].is_zero()) continue;
      RationalFunction f = m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] - f * m[lead][j];
      rhs[r] = rhs[r] - f * rhs[lead];
    }
    pivot_of_col[c] = static_cast<int>(lead);
    ++lead;
  }
  for (std::size_t r = lead; r < rows; ++r)
    if (!rhs[r].is_zero()) return std::nullopt;
  for (std::size_t c = 0; c < cols; ++c)
    if (pivot_of_col[c] < 0) return std::nullopt;  // basis not independent
  std::vector<RationalFunction> sol(cols, RationalFunction::zero(field));
  for (std::size_t c = 0; c < cols; ++c) sol[c] = rhs[static_cast<std::size_t>(pivot_of_col[c])];
  return sol;
}

// coordinates of v = a/b over the monomial p^e-basis: v = sum s_beta^(p^e) x^beta
std::map<ExpVec, RationalFunction, ExpVecLess> monomial_coordinates(const RationalFunction& v,
                                                                    unsigned e) {
  const mpz_class q = pow_ui(mpz_class(v.field()->base().p()), e);
  Polynomial g = v.num() * v.den().pow(q - 1);
  FrobDecomposition d = p_decompose(g, e);
  std::map<ExpVec, RationalFunction, ExpVecLess> out;
  for (const auto& [beta, c] : d.components)
    out.emplace(beta, RationalFunction(c, v.den()));
  return out;
}

}  // namespace

FrobDecomposition p_decompose(const Polynomial& f, unsigned e) {
  if (e < 1) throw DomainError("decomposition iteration must be >= 1");
  FrobDecomposition out;
  out.e = e;
  out.field = f.field();
  const GroundField& gf = f.field()->base();
  const mpz_class q = pow_ui(mpz_class(gf.p()), e);
  ExpVec beta(f.field()->arity()), gamma(f.field()->arity());
  for (const auto& [exp, c] : f.terms()) {
    for (std::size_t i = 0; i < exp.size(); ++i) {
      mpz_fdiv_qr(gamma[i].get_mpz_t(), beta[i].get_mpz_t(), exp[i].get_mpz_t(), q.get_mpz_t());
    }
    auto it = out.components.find(beta);
    if (it == out.components.end())
      it = out.components.emplace(beta, Polynomial(f.field())).first;
    it->second.add_term(gamma, gf.pth_root(c, e));
  }
  return out;
}

Polynomial recompose(const FrobDecomposition& d) {
  Polynomial acc(d.field);
  for (const auto& [beta, c] : d.components) {
    Polynomial xbeta = Polynomial::monomial(d.field, beta, d.field->base().one());
    acc = acc + c.frobenius_power(d.e) * xbeta;
  }
  return acc;
}

Polynomial eta_split(const Polynomial& f, const MonomialValuation& nu) {
  if (!same_field(f.field(), nu.field())) throw DomainError("polynomial over the wrong field");
  if (!nu.verify_monomialized().ok)
    throw DomainError("splitting is only defined for verified monomialized descriptors");
  if (f.is_zero()) return f;
  FrobDecomposition d = p_decompose(f, 1);
  ExpVec zero(f.field()->arity(), 0);
  auto it = d.components.find(zero);
  if (it == d.components.end()) return Polynomial::zero(f.field());
  return it->second.frobenius_power(1);
}

RationalFunction extend_split(const RationalFunction& r, const MonomialValuation& nu,
                              unsigned e) {
  if (!same_field(r.field(), nu.field())) throw DomainError("element over the wrong field");
  if (!nu.verify_monomialized().ok)
    throw DomainError("splitting is only defined for verified monomialized descriptors");
  if (e < 1) throw DomainError("extension iteration must be >= 1");
  if (r.is_zero()) return r;
  if (!nu.in_valuation_ring(r))
    throw DomainError("element lies outside the valuation ring; the splitting does not extend");
  const mpz_class q = pow_ui(mpz_class(r.field()->base().p()), e);
  Polynomial g = r.num() * r.den().pow(q - 1);
  FrobDecomposition d = p_decompose(g, e);
  ExpVec zero(r.field()->arity(), 0);
  auto it = d.components.find(zero);
  if (it == d.components.end()) return RationalFunction::zero(r.field());
  return RationalFunction(it->second.frobenius_power(e), r.den().pow(q));
}

bool verify_inf_eq(const Polynomial& f, const MonomialValuation& nu) {
  if (f.is_zero()) throw DomainError("inf-equation on zero");
  const unsigned p = nu.field()->base().p();
  GroupElement lhs = nu.value(f);
  FrobDecomposition d = p_decompose(f, 1);
  bool have = false;
  GroupElement rhs;
  for (const auto& [beta, c] : d.components) {
    // nu(c^p x^beta) = p*nu(c) + <w, beta>
    GroupElement term = ge_add(ge_scale(p, nu.value(c)), nu.weight_pairing(beta));
    if (!have || nu.group().compare(term, rhs) == Ordering::less) {
      rhs = std::move(term);
      have = true;
    }
  }
  return nu.group().compare(lhs, rhs) == Ordering::equal;
}

bool verify_claim(const Polynomial& a, const MonomialValuation& nu) {
  if (a.is_zero()) throw DomainError("claim check on zero");
  Polynomial eta = eta_split(a, nu);
  if (eta.is_zero()) return true;
  return nu.group().compare(nu.value(eta), nu.value(a)) != Ordering::less;
}

FreeBasisReport verify_free_basis(const std::vector<RationalFunction>& samples,
                                  const std::vector<RationalFunction>& basis,
                                  const MonomialValuation& nu, unsigned e) {
  const FieldRef& field = nu.field();
  const mpz_class q = pow_ui(mpz_class(field->base().p()), e);
  mpz_class expected_size = pow_ui(q, static_cast<unsigned long>(field->arity()));
  if (expected_size > 4096) throw DomainError("p^(e*n) basis too large to enumerate");
  if (mpz_class(static_cast<unsigned long>(basis.size())) != expected_size)
    throw DomainError("basis size must equal [K:K^(p^e)] = " + expected_size.get_str());

  // coordinate matrix of the declared basis over the monomial p^e-basis
  std::vector<ExpVec> betas;
  {
    ExpVec cur(field->arity(), 0);
    for (mpz_class i = 0; i < expected_size; ++i) {
      betas.push_back(cur);
      for (std::size_t v = 0; v < cur.size(); ++v) {
        cur[v] += 1;
        if (cur[v] < q) break;
        cur[v] = 0;
      }
    }
  }
  std::vector<std::vector<RationalFunction>> m(
      betas.size(), std::vector<RationalFunction>(basis.size(), RationalFunction::zero(field)));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto coords = monomial_coordinates(basis[j], e);
    for (std::size_t r = 0; r < betas.size(); ++r) {
      auto it = coords.find(betas[r]);
      if (it != coords.end()) m[r][j] = it->second;
    }
  }

  FreeBasisReport report;
  report.ok = true;
  for (const auto& v : samples) {
    FreeBasisCertificate cert;
    if (!nu.in_valuation_ring(v)) {
      cert.failure = "sample lies outside the valuation ring";
      report.ok = false;
      report.per_sample.push_back(std::move(cert));
      continue;
    }
    std::vector<RationalFunction> rhs(betas.size(), RationalFunction::zero(field));
    auto coords = monomial_coordinates(v, e);
    for (std::size_t r = 0; r < betas.size(); ++r) {
      auto it = coords.find(betas[r]);
      if (it != coords.end()) rhs[r] = it->second;
    }
    auto sol = solve_rf_system(m, std::move(rhs), field);
    if (!sol) throw DomainError("basis does not span K over K^(p^e)");
    cert.ok = true;
    for (const auto& coord : *sol) {
      if (coord.is_zero()) {
        cert.coordinate_values.push_back("zero");
        continue;
      }
      GroupElement val = nu.value(coord);
      cert.coordinate_values.push_back(nu.group().render(val));
      if (nu.group().sign(val) == Ordering::less) {
        cert.ok = false;
        cert.failure = "coordinate with negative value " + nu.group().render(val);
      }
    }
    report.ok = report.ok && cert.ok;
    report.per_sample.push_back(std::move(cert));
  }
  return report;
}

FreeBasisReport verify_free_basis(const std::vector<GaussValuation::Elem>& samples,
                                  const std::vector<GaussValuation::Elem>& basis,
                                  const GaussValuation& w) {
  if (basis.size() != w.p())
    throw DomainError("basis size must equal [L(X):L(X)^p] = " + std::to_string(w.p()));
  // common presentation level for the system
  unsigned level = 0;
  for (const auto& b : basis) level = std::max(level, b.level);
  for (const auto& s : samples) level = std::max(level, s.level);

  std::vector<std::vector<RationalFunction>> m(
      w.p(), std::vector<RationalFunction>(w.p(), RationalFunction::zero(w.field())));
  unsigned fine = level + 1;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto coords = w.x_basis_decompose(w.lift(basis[j], level));
    for (std::size_t i = 0; i < coords.size(); ++i) m[i][j] = coords[i].f;
  }

  FreeBasisReport report;
  report.ok = true;
  for (const auto& s : samples) {
    FreeBasisCertificate cert;
    if (!w.in_valuation_ring(s)) {
      cert.failure = "sample lies outside the valuation ring";
      report.ok = false;
      report.per_sample.push_back(std::move(cert));
      continue;
    }
    auto coords = w.x_basis_decompose(w.lift(s, level));
    std::vector<RationalFunction> rhs;
    rhs.reserve(coords.size());
    for (const auto& c : coords) rhs.push_back(c.f);
    auto sol = solve_rf_system(m, std::move(rhs), w.field());
    if (!sol) throw DomainError("basis does not span L(X) over L(X)^p");
    cert.ok = true;
    for (const auto& coord : *sol) {
      if (coord.is_zero()) {
        cert.coordinate_values.push_back("zero");
        continue;
      }
      GroupElement val = w.value({coord, fine});
      cert.coordinate_values.push_back(w.value_group().render(val));
      if (w.value_group().sign(val) == Ordering::less) {
        cert.ok = false;
        cert.failure = "coordinate with negative value " + w.value_group().render(val);
      }
    }
    report.ok = report.ok && cert.ok;
    report.per_sample.push_back(std::move(cert));
  }
  return report;
}

SplittingWitness run_claim_suite(const MonomialValuation& nu, unsigned samples,
                                 std::uint64_t seed, bool parallel) {
  SplittingWitness w;
  w.descriptor = nu.group().describe() + " on " +
                 std::to_string(nu.field()->arity()) + " variables, p=" +
                 std::to_string(nu.field()->base().p());
  w.samples = samples;
  w.seed = seed;

  if (!nu.verify_monomialized().ok) {
    w.failure = "descriptor is not monomialized";
    return w;
  }
  const FieldRef& field = nu.field();
  const unsigned p = field->base().p();

  // splitting axiom: 1 -> 1
  if (!extend_split(RationalFunction::one(field), nu).eq(RationalFunction::one(field))) {
    w.failure = "extension does not fix 1";
    return w;
  }

  auto check = [&](std::size_t, Rng& rng) -> std::optional<std::string> {
    Polynomial f = random_nonzero_polynomial(rng, field, 2 * p, 5);
    if (!verify_inf_eq(f, nu)) return "inf-equation failed on " + f.render();
    if (!verify_claim(f, nu)) return "claim failed on " + f.render();

    // p-th power linearity of the extension
    Polynomial g = random_nonzero_polynomial(rng, field, 2, 3);
    RationalFunction gp(g.frobenius_power(1));
    RationalFunction rf(f);
    RationalFunction lhs = extend_split(gp * rf, nu);
    RationalFunction rhs = gp * extend_split(rf, nu);
    if (!lhs.eq(rhs)) return "extension is not K^p-linear on " + f.render();

    // extension lands in the ring
    Polynomial b = random_nonzero_polynomial(rng, field, 2 * p, 5);
    RationalFunction a(f), bb(b);
    RationalFunction r = nu.group().compare(nu.value(a), nu.value(bb)) == Ordering::less
                             ? bb / a
                             : a / bb;
    RationalFunction img = extend_split(r, nu);
    if (!img.is_zero() && !nu.in_valuation_ring(img))
      return "extension image left the valuation ring on " + r.render();
    return std::nullopt;
  };

  SweepOutcome outcome = run_sweep(samples, seed, check, parallel);
  w.inf_eq_checked = samples;
  w.claim_checked = samples;
  w.extension_checked = samples;
  w.ok = outcome.ok();
  if (!outcome.ok()) {
    std::ostringstream msg;
    msg << outcome.failures << " of " << outcome.samples << " samples failed; first: "
        << outcome.failure_log.front().second;
    w.failure = msg.str();
  }
  return w;
}

}  // namespace valfrob
