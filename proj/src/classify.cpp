#include "valfrob/classify.hpp"

#include <sstream>

namespace valfrob {

namespace {

std::string render_field(const FieldDescriptor& f) {
  std::string out = "F_" + std::to_string(f.base().q());
  std::string args;
  for (const auto& v : f.perfected_variables()) {
    if (!args.empty()) args += ", ";
    args += v + "^(1/p^oo)";
  }
  for (const auto& v : f.variables()) {
    if (!args.empty()) args += ", ";
    args += v;
  }
  if (!args.empty()) out += "(" + args + ")";
  return out;
}

bool group_is_discrete_rank_one(const ValueGroup& g) {
  return g.finitely_generated() && g.rational_rank() <= 1 && g.smallest_positive().has_value();
}

FieldRef ambient_field(const ValuationDescriptor& d) {
  if (const auto* m = std::get_if<MonomialDescriptor>(&d)) return m->nu.field();
  if (const auto* g = std::get_if<GaussDescriptor>(&d))
    return FieldDescriptor::make(GroundField(g->w.p(), 1), {"x"}, {"s"});
  if (const auto* s = std::get_if<SeriesEmbeddingDescriptor>(&d)) return s->field;
  return std::get<HahnWitnessDescriptor>(d).field;
}

}  // namespace

const std::string& descriptor_name(const ValuationDescriptor& d) {
  return std::visit([](const auto& x) -> const std::string& { return x.name; }, d);
}

DescriptorFacts facts_of(const ValuationDescriptor& d) {
  DescriptorFacts f;
  if (const auto* m = std::get_if<MonomialDescriptor>(&d)) {
    const MonomialValuation& nu = m->nu;
    f.name = m->name;
    f.p = nu.field()->base().p();
    f.degree_K_Kp = nu.field()->degree_over_pth_powers();
    f.ambient_perfect = nu.field()->perfected();
    f.group = nu.group();
    ResidueFieldInfo res = nu.residue_field();
    f.residue_field = res.field;
    f.residue_degree = res.field->degree_over_pth_powers();
    f.monomialized = nu.verify_monomialized().ok;
    f.ambient = render_field(*nu.field());
  } else if (const auto* g = std::get_if<GaussDescriptor>(&d)) {
    f.name = g->name;
    f.p = g->w.p();
    f.degree_K_Kp = g->w.p();  // one indeterminate over a perfect base
    f.ambient_perfect = false;
    f.group = g->w.value_group();
    f.residue_field = FieldDescriptor::make(g->w.p(), 1, {});
    f.residue_degree = 1;
    f.monomialized = false;
    f.ambient = "F_" + std::to_string(g->w.p()) + "(s^(1/p^oo))(x)";
  } else if (const auto* s = std::get_if<SeriesEmbeddingDescriptor>(&d)) {
    f.name = s->name;
    f.p = s->field->base().p();
    f.degree_K_Kp = s->field->degree_over_pth_powers();
    f.ambient_perfect = s->field->perfected();
    f.group = ValueGroup::lex(1);
    f.residue_field = FieldDescriptor::make(s->field->base(), {});
    f.residue_degree = 1;
    f.monomialized = false;
    f.ambient = render_field(*s->field);
  } else {
    const auto& h = std::get<HahnWitnessDescriptor>(d);
    f.name = h.name;
    f.p = h.field->base().p();
    f.degree_K_Kp = h.field->degree_over_pth_powers();
    f.ambient_perfect = h.field->perfected();
    f.group = ValueGroup::p_divisible(f.p);
    f.residue_field = FieldDescriptor::make(h.field->base(), {});
    f.residue_degree = 1;
    f.monomialized = false;
    f.ambient = render_field(*h.field);
  }
  return f;
}

CenterDescriptor canonical_center(const MonomialValuation& nu) {
  // localize the polynomial ring at the prime generated by the positive
  // weight variables; the residue field is generated by the others
  CenterDescriptor c;
  std::vector<std::string> zero_weight_vars;
  for (std::size_t i = 0; i < nu.field()->arity(); ++i) {
    if (ge_is_zero(nu.weights()[i]))
      zero_weight_vars.push_back(nu.field()->variables()[i]);
    else
      ++c.dimension;
  }
  c.residue_field = FieldDescriptor::make(nu.field()->base(), zero_weight_vars);
  c.canonical = true;
  return c;
}

mpz_class degree_K_Kp(const FieldDescriptor& k) { return k.degree_over_pth_powers(); }

DefectCheck defect_identity(const DescriptorFacts& f) {
  DefectCheck c;
  c.index_p_gamma = f.group.index_p(f.p);
  c.residue_degree = f.residue_degree;
  c.product = c.index_p_gamma * c.residue_degree;
  c.field_degree = f.degree_K_Kp;
  c.equal = c.product == c.field_degree;
  return c;
}

CenterCheck abhyankar_center_check(const DescriptorFacts& f, const CenterDescriptor& r) {
  CenterCheck c;
  c.rational_rank = f.group.rational_rank();
  if (!r.residue_field) throw DomainError("center needs a residue field descriptor");
  if (!(f.residue_field->base() == r.residue_field->base()))
    throw DomainError("center and valuation residue fields have different ground fields");
  std::size_t t_nu = f.residue_field->trdeg();
  std::size_t t_r = r.residue_field->trdeg();
  if (t_r > t_nu)
    throw DomainError("center residue field has larger transcendence degree than kappa_nu");
  c.trdeg = static_cast<int>(t_nu - t_r);
  c.dim = r.dimension;
  if (c.rational_rank + c.trdeg > static_cast<int>(c.dim))
    throw DomainError("dimension inequality violated: rank + trdeg exceeds dim R");
  c.equal = c.rational_rank + c.trdeg == static_cast<int>(c.dim);

  // guard: [Gamma:pGamma][kappa:kappa^p] <= p^dim(R) [kappa_R:kappa_R^p]
  mpz_class lhs = f.group.index_p(f.p) * f.residue_degree;
  mpz_class rhs = pow_ui(mpz_class(f.p), r.dimension) * r.residue_field->degree_over_pth_powers();
  if (lhs > rhs)
    throw DomainError("ramification-residue bound violated: " + lhs.get_str() + " > " +
                      rhs.get_str());
  return c;
}

CenterDegreeCheck center_degree_identity(const CenterDescriptor& r, const FieldDescriptor& k) {
  CenterDegreeCheck c;
  c.lhs = degree_K_Kp(k);
  c.rhs = pow_ui(mpz_class(k.base().p()), r.dimension) *
          r.residue_field->degree_over_pth_powers();
  c.equal = c.lhs == c.rhs;
  return c;
}

FibreDimension fibre_dimension(const DescriptorFacts& f) {
  FibreDimension out;
  out.maximal_ideal_finitely_generated = f.group.smallest_positive().has_value();
  out.dimension = out.maximal_ideal_finitely_generated ? mpz_class(f.p) * f.residue_degree
                                                       : f.residue_degree;
  return out;
}

Verdict f_finite_verdict(const DescriptorFacts& f) {
  FibreDimension fd = fibre_dimension(f);
  Verdict v;
  v.rule = "f-finite-fibre-criterion";
  v.statement =
      "V is F-finite exactly when dim over kappa^p of V/m^[p] equals [K:K^p]; here " +
      fd.dimension.get_str() + (fd.dimension == f.degree_K_Kp ? " = " : " != ") +
      f.degree_K_Kp.get_str();
  v.value = fd.dimension == f.degree_K_Kp ? "yes" : "no";
  if (v.value == "yes") {
    // consistency facts about F-finite valuation rings; failures are bugs
    mpz_class idx = f.group.index_p(f.p);
    if (!(idx == 1 || idx == f.p))
      throw DomainError("F-finite verdict with [Gamma:pGamma] outside {1, p}");
    if (f.group.finitely_generated() && !group_is_discrete_rank_one(f.group))
      throw DomainError("F-finite verdict with a finitely generated group that is not discrete");
  }
  return v;
}

SplitDecision split_verdict(const ValuationDescriptor& d, const ClassifyOptions& opts) {
  DescriptorFacts f = facts_of(d);
  Verdict ff = f_finite_verdict(f);
  SplitDecision out;

  if (group_is_discrete_rank_one(f.group)) {
    // rule 1: Noetherian valuation ring
    out.verdict.rule = "noetherian-split-iff-f-finite";
    out.verdict.statement =
        "for a Noetherian valuation ring with F-finite fraction field, Frobenius split, "
        "F-finite, excellent and defectless all coincide";
    out.verdict.value = ff.value;
    return out;
  }
  if (ff.value == "yes") {
    // rule 2
    out.verdict.rule = "f-finite-implies-split";
    out.verdict.statement =
        "an F-finite valuation ring is Frobenius split: Frobenius makes it a free module over "
        "its p-th power subring";
    out.verdict.value = "yes";
    return out;
  }
  DefectCheck defect = defect_identity(f);
  if (defect.product == 1 && !f.ambient_perfect) {
    // rule 3
    out.verdict.rule = "totally-unramified-no-splitting";
    out.verdict.statement =
        "with [Gamma:pGamma][kappa:kappa^p] = 1 the maximal ideal equals its Frobenius "
        "expansion and the residue field is perfect, so a splitting of a non-perfect K would "
        "be injective on V; none exists";
    out.verdict.value = "no";
    return out;
  }
  if (const auto* m = std::get_if<MonomialDescriptor>(&d); m && f.monomialized) {
    // rule 4: run the claim suite and attach the witness
    SplittingWitness w = run_claim_suite(m->nu, opts.samples, opts.seed, opts.parallel);
    if (w.ok) {
      out.verdict.rule = "monomial-splitting-extends";
      out.verdict.statement =
          "the coefficient-of-1 splitting for the monomial p-basis never decreases values, so "
          "it extends from the monomialized center to the valuation ring";
      out.verdict.value = "yes";
      out.witness = std::move(w);
      return out;
    }
    throw DomainError("claim suite failed on a monomialized descriptor: " + w.failure);
  }
  out.verdict.rule = "defect-intermediate-open";
  out.verdict.statement =
      "no criterion applies when the defect sits strictly between defectless and totally "
      "unramified";
  out.verdict.value = "unknown";
  return out;
}

ClassificationReport classify(const ValuationDescriptor& d,
                              const std::optional<CenterDescriptor>& center,
                              const ClassifyOptions& opts) {
  DescriptorFacts f = facts_of(d);
  ClassificationReport r;
  r.descriptor = f.name;
  r.ambient = f.ambient;
  r.p = f.p;
  r.group = f.group.describe();
  r.degree_K_Kp = f.degree_K_Kp;

  DefectCheck defect = defect_identity(f);
  r.index_p_gamma = defect.index_p_gamma;
  r.residue_degree = defect.residue_degree;
  r.defect_product = defect.product;
  r.defectless = defect.equal;

  FibreDimension fd = fibre_dimension(f);
  r.fibre_dim = fd.dimension;
  r.maximal_ideal_finitely_generated = fd.maximal_ideal_finitely_generated;
  if (std::holds_alternative<MonomialDescriptor>(d)) r.monomialized = f.monomialized;

  if (center) {
    r.center_check = abhyankar_center_check(f, *center);
    r.center_degree = center_degree_identity(*center, *ambient_field(d));
  }

  bool dvr = group_is_discrete_rank_one(f.group);
  r.dvr.value = dvr ? "yes" : "no";
  r.dvr.rule = "dvr-discrete-rank-one";
  r.dvr.statement = "a valuation ring is a DVR exactly when its value group is a finitely "
                    "generated discrete group of rational rank one";

  if (std::holds_alternative<GaussDescriptor>(d)) {
    r.abhyankar.value = "unknown";
    r.abhyankar.rule = "ground-field-not-fixed";
    r.abhyankar.statement =
        "the valuation is nontrivial on the perfect base field, so the function-field "
        "dichotomy between rank plus residue transcendence and the total transcendence "
        "degree does not apply";
  } else {
    r.abhyankar.value = defect.equal ? "yes" : "no";
    r.abhyankar.rule = "abhyankar-defectless";
    r.abhyankar.statement =
        "over a perfect ground field a valuation of a function field is Abhyankar exactly "
        "when [Gamma:pGamma][kappa:kappa^p] = [K:K^p]; here " + defect.product.get_str() +
        (defect.equal ? " = " : " != ") + defect.field_degree.get_str();
  }

  r.f_finite = f_finite_verdict(f);

  SplitDecision sd = split_verdict(d, opts);
  r.frobenius_split = sd.verdict;
  r.witness = std::move(sd.witness);

  // informational consequences
  if (r.f_finite.value == "yes" && !dvr)
    r.notes.push_back(
        "F-finite but not Noetherian: this valuation has no excellent center with fraction "
        "field K");
  std::size_t dimV = f.group.convex_rank();
  unsigned long s = mpz_sizeinbase(r.degree_K_Kp.get_mpz_t(), f.p) - 1;
  if (dimV > s)
    r.notes.push_back(
        "the valuation ring has dimension " + std::to_string(dimV) + " > " + std::to_string(s) +
        " = log_p [K:K^p], so no F-finite Noetherian center exists");

  r.seed = opts.seed;
  r.samples = opts.samples;
  if (const auto* s = std::get_if<SeriesEmbeddingDescriptor>(&d)) r.precision = s->precision;
  return r;
}

std::string render_report(const ClassificationReport& r) {
  std::ostringstream out;
  out << "descriptor: " << r.descriptor << "\n";
  out << "field: " << r.ambient << " (p = " << r.p << ")\n";
  out << "value group: " << r.group << "\n";
  out << "[K:K^p] = " << r.degree_K_Kp.get_str() << ", [Gamma:pGamma] = "
      << r.index_p_gamma.get_str() << ", [kappa:kappa^p] = " << r.residue_degree.get_str()
      << "\n";
  out << "defect product = " << r.defect_product.get_str() << " ("
      << (r.defectless ? "defectless" : "with defect") << ")\n";
  out << "dim_{kappa^p} V/m^[p] = " << r.fibre_dim.get_str() << " (maximal ideal "
      << (r.maximal_ideal_finitely_generated ? "finitely generated" : "not finitely generated")
      << ")\n";
  if (r.center_check) {
    out << "center: rank " << r.center_check->rational_rank << " + trdeg "
        << r.center_check->trdeg << (r.center_check->equal ? " = " : " != ") << "dim "
        << r.center_check->dim << " -> " << (r.center_check->equal ? "Abhyankar" : "not Abhyankar")
        << " center\n";
    out << "center degree identity: " << r.center_degree->lhs.get_str()
        << (r.center_degree->equal ? " = " : " != ") << r.center_degree->rhs.get_str() << "\n";
  }
  auto verdict_line = [&out](const char* label, const Verdict& v) {
    out << label << ": " << v.value << "  [" << v.rule << "] " << v.statement << "\n";
  };
  verdict_line("DVR", r.dvr);
  verdict_line("F-finite", r.f_finite);
  verdict_line("Frobenius split", r.frobenius_split);
  if (r.witness)
    out << "witness: " << r.witness->samples << " samples, seed " << r.witness->seed << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  out << "seed: " << r.seed << ", samples: " << r.samples;
  if (r.precision > 0) out << ", precision: " << r.precision;
  out << "\n";
  return out.str();
}

}  // namespace valfrob
