#include "valfrob/gallery.hpp"

#include <sstream>

#include "valfrob/hahn.hpp"
#include "valfrob/parse.hpp"

namespace valfrob {

namespace {

std::vector<std::string> numbered_vars(const char* stem, unsigned n) {
  std::vector<std::string> vars;
  for (unsigned i = 1; i <= n; ++i) vars.push_back(stem + std::to_string(i));
  return vars;
}

GroupElement lex_unit(const ValueGroup& g, std::size_t at) {
  GroupElement e = g.zero();
  e.coords[at] = 1;
  return e;
}

}  // namespace

MonomialValuation lex_valuation(std::uint32_t p, unsigned n) {
  FieldRef field = FieldDescriptor::make(p, 1, numbered_vars("x", n));
  ValueGroup g = ValueGroup::lex(static_cast<int>(n));
  std::vector<GroupElement> weights;
  std::vector<std::size_t> params;
  for (unsigned i = 0; i < n; ++i) {
    weights.push_back(lex_unit(g, i));
    params.push_back(i);
  }
  return MonomialValuation(field, g, std::move(weights), std::move(params), {});
}

MonomialValuation blowup_pi_original(std::uint32_t p) {
  // weights (1, 1, pi) on (x, y, z); all three declared as parameters
  FieldRef field = FieldDescriptor::make(p, 1, {"x", "y", "z"});
  ValueGroup g = ValueGroup::embedded(pi_oracle());
  GroupElement one{{mpq_class(1), mpq_class(0)}};
  GroupElement pi{{mpq_class(0), mpq_class(1)}};
  return MonomialValuation(field, g, {one, one, pi}, {0, 1, 2}, {});
}

MonomialValuation blowup_pi_monomialized(std::uint32_t p) {
  // after blowing up: coordinates (x, u, w) = (x, y/x, z/x),
  // weights x -> 1, u -> 0, w -> pi - 1; parameters {x, w}
  FieldRef field = FieldDescriptor::make(p, 1, {"x", "u", "w"});
  ValueGroup g = ValueGroup::embedded(pi_oracle());
  GroupElement one{{mpq_class(1), mpq_class(0)}};
  GroupElement pim1{{mpq_class(-1), mpq_class(1)}};
  return MonomialValuation(field, g, {one, g.zero(), pim1}, {0, 2}, {1});
}

std::map<std::string, std::string> report_fields(const ClassificationReport& r) {
  std::map<std::string, std::string> f;
  f["descriptor"] = r.descriptor;
  f["p"] = std::to_string(r.p);
  f["group"] = r.group;
  f["degree_K_Kp"] = r.degree_K_Kp.get_str();
  f["index_p_gamma"] = r.index_p_gamma.get_str();
  f["residue_degree"] = r.residue_degree.get_str();
  f["defect_product"] = r.defect_product.get_str();
  f["defectless"] = r.defectless ? "true" : "false";
  f["fibre_dimension"] = r.fibre_dim.get_str();
  f["maximal_ideal_finitely_generated"] = r.maximal_ideal_finitely_generated ? "true" : "false";
  if (r.monomialized) f["monomialized"] = *r.monomialized ? "true" : "false";
  if (r.center_check) {
    f["abhyankar_center"] = r.center_check->equal ? "true" : "false";
    f["center_degree_identity"] = r.center_degree->equal ? "true" : "false";
  }
  f["dvr"] = r.dvr.value;
  f["f_finite"] = r.f_finite.value;
  f["frobenius_split"] = r.frobenius_split.value;
  f["split_rule"] = r.frobenius_split.rule;
  return f;
}

std::vector<GalleryEntry> builtin_gallery() {
  std::vector<GalleryEntry> entries;

  {
    MonomialValuation nu = lex_valuation(2, 2);
    GalleryEntry e{"lex2-p2", MonomialDescriptor{nu, "lex2-p2"}, canonical_center(nu), {}, {}};
    e.expectations = {
        {"monomialized", "true", "closed_form"},
        {"degree_K_Kp", "4", "closed_form"},
        {"index_p_gamma", "4", "closed_form"},
        {"defectless", "true", "closed_form"},
        {"fibre_dimension", "2", "closed_form"},
        {"f_finite", "no", "closed_form"},
        {"frobenius_split", "yes", "closed_form"},
        {"split_rule", "monomial-splitting-extends", "closed_form"},
        {"abhyankar_center", "true", "closed_form"},
        {"dvr", "no", "closed_form"},
    };
    entries.push_back(std::move(e));
  }
  {
    MonomialValuation nu = lex_valuation(3, 3);
    GalleryEntry e{"lex3-p3", MonomialDescriptor{nu, "lex3-p3"}, canonical_center(nu), {}, {}};
    e.expectations = {
        {"monomialized", "true", "closed_form"},
        {"degree_K_Kp", "27", "closed_form"},
        {"defectless", "true", "closed_form"},
        {"fibre_dimension", "3", "closed_form"},
        {"f_finite", "no", "closed_form"},
        {"frobenius_split", "yes", "closed_form"},
        {"abhyankar_center", "true", "closed_form"},
    };
    entries.push_back(std::move(e));
  }
  {
    // one-variable function field: every valuation ring is a divisorial DVR
    MonomialValuation nu = lex_valuation(2, 1);
    GalleryEntry e{"curve-dvr-p2", MonomialDescriptor{nu, "curve-dvr-p2"}, canonical_center(nu),
                   {}, {}};
    e.expectations = {
        {"dvr", "yes", "closed_form"},
        {"f_finite", "yes", "closed_form"},
        {"frobenius_split", "yes", "closed_form"},
        {"split_rule", "noetherian-split-iff-f-finite", "closed_form"},
        {"defectless", "true", "closed_form"},
        {"abhyankar_center", "true", "closed_form"},
    };
    entries.push_back(std::move(e));
  }
  {
    // order of vanishing along x = 0 in the plane: divisorial, transcendental
    // residue field
    FieldRef field = FieldDescriptor::make(2, 1, {"x", "y"});
    ValueGroup g = ValueGroup::lex(1);
    MonomialValuation nu(field, g, {lex_unit(g, 0), g.zero()}, {0}, {1});
    GalleryEntry e{"divisorial-plane-p2", MonomialDescriptor{nu, "divisorial-plane-p2"},
                   canonical_center(nu), {}, {}};
    e.expectations = {
        {"monomialized", "true", "closed_form"},
        {"residue_degree", "2", "closed_form"},
        {"fibre_dimension", "4", "closed_form"},
        {"degree_K_Kp", "4", "closed_form"},
        {"dvr", "yes", "closed_form"},
        {"f_finite", "yes", "closed_form"},
        {"frobenius_split", "yes", "closed_form"},
        {"defectless", "true", "closed_form"},
        {"abhyankar_center", "true", "closed_form"},
    };
    entries.push_back(std::move(e));
  }
  {
    // weights (1, 1, pi) in the original coordinates: rank 2 group on a
    // three-dimensional center, no free generation
    MonomialValuation nu = blowup_pi_original(2);
    GalleryEntry e{"plane-pi-original", MonomialDescriptor{nu, "plane-pi-original"},
                   canonical_center(nu), {}, {}};
    e.expectations = {
        {"monomialized", "false", "closed_form"},
        {"degree_K_Kp", "8", "closed_form"},
        {"index_p_gamma", "4", "closed_form"},
        {"residue_degree", "2", "closed_form"},
        {"defectless", "true", "closed_form"},
        {"abhyankar_center", "true", "closed_form"},
        {"f_finite", "no", "closed_form"},
        {"frobenius_split", "unknown", "closed_form"},
    };
    entries.push_back(std::move(e));
  }
  {
    MonomialValuation nu = blowup_pi_monomialized(2);
    GalleryEntry e{"plane-pi-monomialized", MonomialDescriptor{nu, "plane-pi-monomialized"},
                   canonical_center(nu), {}, {}};
    e.expectations = {
        {"monomialized", "true", "closed_form"},
        {"degree_K_Kp", "8", "closed_form"},
        {"index_p_gamma", "4", "closed_form"},
        {"residue_degree", "2", "closed_form"},
        {"defectless", "true", "closed_form"},
        {"abhyankar_center", "true", "closed_form"},
        {"f_finite", "no", "closed_form"},
        {"frobenius_split", "yes", "closed_form"},
        {"split_rule", "monomial-splitting-extends", "closed_form"},
        {"dvr", "no", "closed_form"},
    };
    // the residue of u must be the transcendental generator itself
    e.extra_check = [nu]() -> std::optional<std::string> {
      RationalFunction u = rf_parse("u", nu.field());
      ResidueElement res = nu.residue(u);
      if (res.residue_field.field->arity() != 1) return "residue field is not F_p(one generator)";
      RationalFunction gen = RationalFunction::variable(res.residue_field.field, 0);
      if (!res.value.eq(gen)) return "residue of u is not the residue generator";
      return std::nullopt;
    };
    entries.push_back(std::move(e));
  }
  {
    SeriesEmbeddingDescriptor d;
    d.field = FieldDescriptor::make(2, 1, {"x", "y"});
    d.seed = 42;
    d.precision = 256;
    d.name = "power-series-dvr-p2";
    // the polynomial-ring center of the plane, which is too big for this DVR
    GalleryEntry e{d.name, d, CenterDescriptor{2, FieldDescriptor::make(2, 1, {}), false}, {}, {}};
    e.expectations = {
        {"dvr", "yes", "closed_form"},
        {"degree_K_Kp", "4", "closed_form"},
        {"defect_product", "2", "closed_form"},
        {"defectless", "false", "closed_form"},
        {"fibre_dimension", "2", "closed_form"},
        {"abhyankar_center", "false", "closed_form"},
        {"center_degree_identity", "true", "closed_form"},
        {"f_finite", "no", "closed_form"},
        {"frobenius_split", "no", "closed_form"},
        {"split_rule", "noetherian-split-iff-f-finite", "closed_form"},
    };
    e.extra_check = [d]() -> std::optional<std::string> {
      SeriesEmbedding emb(d.field, d.seed, d.precision);
      RationalFunction x = rf_parse("x", d.field);
      RationalFunction y = rf_parse("y", d.field);
      long vx = emb.value(x);
      long vy = emb.value(y);
      if (vx != 1) return "image of x has order " + std::to_string(vx) + ", wanted 1";
      if (vy < 2) return "image of y has order " + std::to_string(vy) + ", wanted >= 2";
      return std::nullopt;
    };
    entries.push_back(std::move(e));
  }
  {
    GalleryEntry e{"gauss-group-first-p2",
                   GaussDescriptor{GaussValuation(2, GaussValuation::Variant::group_first),
                                   "gauss-group-first-p2"},
                   {}, {}, {}};
    e.expectations = {
        {"degree_K_Kp", "2", "closed_form"},
        {"index_p_gamma", "2", "closed_form"},
        {"residue_degree", "1", "closed_form"},
        {"defectless", "true", "closed_form"},
        {"fibre_dimension", "2", "closed_form"},
        {"maximal_ideal_finitely_generated", "true", "closed_form"},
        {"f_finite", "yes", "closed_form"},
        {"frobenius_split", "yes", "closed_form"},
        {"split_rule", "f-finite-implies-split", "closed_form"},
        {"dvr", "no", "closed_form"},
    };
    entries.push_back(std::move(e));
  }
  {
    GalleryEntry e{"gauss-z-first-p2",
                   GaussDescriptor{GaussValuation(2, GaussValuation::Variant::z_first),
                                   "gauss-z-first-p2"},
                   {}, {}, {}};
    e.expectations = {
        {"degree_K_Kp", "2", "closed_form"},
        {"defectless", "true", "closed_form"},
        {"fibre_dimension", "1", "closed_form"},
        {"maximal_ideal_finitely_generated", "false", "closed_form"},
        {"f_finite", "no", "closed_form"},
        {"frobenius_split", "unknown", "closed_form"},
    };
    entries.push_back(std::move(e));
  }
  {
    HahnWitnessDescriptor d;
    d.field = FieldDescriptor::make(2, 1, {"x", "y"});
    d.name = "hahn-totally-unramified-p2";
    GalleryEntry e{d.name, d, CenterDescriptor{2, FieldDescriptor::make(2, 1, {}), false}, {}, {}};
    e.expectations = {
        {"degree_K_Kp", "4", "closed_form"},
        {"index_p_gamma", "1", "closed_form"},
        {"residue_degree", "1", "closed_form"},
        {"defect_product", "1", "closed_form"},
        {"fibre_dimension", "1", "closed_form"},
        {"abhyankar_center", "false", "closed_form"},
        {"f_finite", "no", "closed_form"},
        {"frobenius_split", "no", "closed_form"},
        {"split_rule", "totally-unramified-no-splitting", "closed_form"},
    };
    e.extra_check = [d]() -> std::optional<std::string> {
      // leading exponent of the y witness image: 1 - 1/p
      Polynomial y = Polynomial::variable(d.field, 1);
      mpq_class got = hahn_embed_value(y, mpq_class(4));
      mpq_class want = 1 - mpq_class(1, d.field->base().p());
      want.canonicalize();
      if (got != want) return "hahn value of y is " + got.get_str() + ", wanted " + want.get_str();
      return std::nullopt;
    };
    entries.push_back(std::move(e));
  }
  {
    MonomialValuation nu = lex_valuation(5, 2);
    GalleryEntry e{"lex2-p5", MonomialDescriptor{nu, "lex2-p5"}, canonical_center(nu), {}, {}};
    e.expectations = {
        {"degree_K_Kp", "25", "closed_form"},
        {"fibre_dimension", "5", "closed_form"},
        {"f_finite", "no", "closed_form"},
        {"frobenius_split", "yes", "closed_form"},
        {"abhyankar_center", "true", "closed_form"},
    };
    entries.push_back(std::move(e));
  }
  return entries;
}

GalleryResult run_entry(const GalleryEntry& e, const ClassifyOptions& opts) {
  GalleryResult out;
  out.name = e.name;
  out.ok = true;
  try {
    ClassificationReport report = classify(e.descriptor, e.center, opts);
    auto fields = report_fields(report);
    for (const auto& exp : e.expectations) {
      auto it = fields.find(exp.field);
      if (it == fields.end()) {
        out.ok = false;
        out.diffs.push_back(exp.field + ": expected " + exp.expected + ", field missing");
      } else if (it->second != exp.expected) {
        out.ok = false;
        out.diffs.push_back(exp.field + ": expected " + exp.expected + ", got " + it->second);
      }
    }
    if (e.extra_check) {
      auto fail = e.extra_check();
      if (fail) {
        out.ok = false;
        out.diffs.push_back("extra check: " + *fail);
      }
    }
  } catch (const std::exception& ex) {
    out.ok = false;
    out.diffs.push_back(std::string("exception: ") + ex.what());
  }
  return out;
}

std::vector<GalleryResult> run_gallery(const ClassifyOptions& opts) {
  std::vector<GalleryResult> out;
  for (const auto& e : builtin_gallery()) out.push_back(run_entry(e, opts));
  return out;
}

}  // namespace valfrob
