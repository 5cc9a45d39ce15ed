#include "valfrob/descriptor_io.hpp"

#include <fstream>

namespace valfrob {

namespace {

mpq_class rational_from_json(const Json& j) {
  if (j.is_number_integer()) return mpq_class(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpq_class q;
    if (q.set_str(j.get<std::string>(), 10) != 0)
      throw DomainError("bad rational literal '" + j.get<std::string>() + "'");
    q.canonicalize();
    return q;
  }
  throw DomainError("coordinate must be an integer or an \"a/b\" string");
}

Json rational_to_json(const mpq_class& q) {
  if (q.get_den() == 1 && mpz_fits_slong_p(q.get_num().get_mpz_t()))
    return Json(q.get_num().get_si());
  return Json(q.get_str());
}

FieldRef field_from_json(const Json& j) {
  std::uint32_t p = j.at("p").get<std::uint32_t>();
  std::uint32_t k = j.value("k", 1u);
  std::vector<std::string> vars = j.value("variables", std::vector<std::string>{});
  return FieldDescriptor::make(p, k, std::move(vars));
}

Json field_to_json(const FieldDescriptor& f) {
  Json j;
  j["p"] = f.base().p();
  j["k"] = f.base().k();
  j["variables"] = f.variables();
  return j;
}

}  // namespace

ValueGroup group_from_json(const Json& j, std::uint32_t p) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "lex") return ValueGroup::lex(j.at("rank").get<int>());
  if (kind == "embedded") {
    if (j.value("irrational", "pi") != std::string("pi"))
      throw DomainError("only the irrational \"pi\" ships with the library");
    if (j.value("rank", 2) != 2) throw DomainError("embedded groups have rank 2");
    return ValueGroup::embedded(pi_oracle());
  }
  if (kind == "p_divisible") return ValueGroup::p_divisible(p);
  if (kind == "lex_sum") {
    std::vector<ValueGroup> comps;
    for (const auto& c : j.at("components")) comps.push_back(group_from_json(c, p));
    return ValueGroup::lex_sum(std::move(comps));
  }
  throw DomainError("unknown group kind '" + kind + "'");
}

Json group_to_json(const ValueGroup& g) {
  Json j;
  switch (g.kind()) {
    case ValueGroup::Kind::lex:
      j["kind"] = "lex";
      j["rank"] = g.rational_rank();
      break;
    case ValueGroup::Kind::embedded:
      j["kind"] = "embedded";
      j["rank"] = 2;
      j["irrational"] = g.irrational()->name();
      break;
    case ValueGroup::Kind::p_divisible:
      j["kind"] = "p_divisible";
      break;
    case ValueGroup::Kind::lex_sum: {
      j["kind"] = "lex_sum";
      Json comps = Json::array();
      for (const auto& c : g.components()) comps.push_back(group_to_json(c));
      j["components"] = std::move(comps);
      break;
    }
  }
  return j;
}

GroupElement element_from_json(const Json& j, const ValueGroup& g) {
  if (!j.is_array()) throw DomainError("group element must be a coordinate array");
  GroupElement e;
  for (const auto& c : j) e.coords.push_back(rational_from_json(c));
  g.validate(e);
  return e;
}

Json element_to_json(const GroupElement& e) {
  Json j = Json::array();
  for (const auto& c : e.coords) j.push_back(rational_to_json(c));
  return j;
}

ValuationDescriptor descriptor_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "monomial") {
    FieldRef field = field_from_json(j.at("field"));
    ValueGroup group = group_from_json(j.at("group"), field->base().p());
    std::vector<GroupElement> weights;
    const Json& w = j.at("weights");
    for (const auto& name : field->variables()) {
      if (!w.contains(name)) throw DomainError("missing weight for variable '" + name + "'");
      weights.push_back(element_from_json(w.at(name), group));
    }
    auto to_indices = [&](const std::vector<std::string>& names) {
      std::vector<std::size_t> idx;
      for (const auto& n : names) {
        int i = field->var_index(n);
        if (i < 0) throw DomainError("unknown variable '" + n + "' in partition");
        idx.push_back(static_cast<std::size_t>(i));
      }
      return idx;
    };
    std::vector<std::string> params = j.value("parameters", std::vector<std::string>{});
    std::vector<std::string> residue = j.value("residue_vars", std::vector<std::string>{});
    MonomialValuation nu(field, group, std::move(weights), to_indices(params),
                         to_indices(residue));
    return MonomialDescriptor{std::move(nu), j.value("name", std::string("monomial"))};
  }
  if (kind == "gauss") {
    std::uint32_t p = j.at("p").get<std::uint32_t>();
    std::string variant = j.at("variant").get<std::string>();
    if (variant != "group_first" && variant != "z_first")
      throw DomainError("gauss variant must be group_first or z_first");
    GaussValuation w(p, variant == "group_first" ? GaussValuation::Variant::group_first
                                                 : GaussValuation::Variant::z_first);
    return GaussDescriptor{std::move(w), j.value("name", "gauss-" + variant)};
  }
  if (kind == "series_embedding") {
    std::uint32_t p = j.at("p").get<std::uint32_t>();
    SeriesEmbeddingDescriptor d;
    d.field = FieldDescriptor::make(p, 1, {"x", "y"});
    d.seed = j.value("seed", std::uint64_t{42});
    d.precision = j.value("precision", 256);
    d.name = j.value("name", std::string("series-embedding"));
    return d;
  }
  if (kind == "hahn") {
    std::uint32_t p = j.at("p").get<std::uint32_t>();
    HahnWitnessDescriptor d;
    d.field = FieldDescriptor::make(p, 1, {"x", "y"});
    d.name = j.value("name", std::string("hahn-witness"));
    return d;
  }
  throw DomainError("unknown valuation kind '" + kind + "'");
}

Json descriptor_to_json(const ValuationDescriptor& d) {
  Json j;
  if (const auto* m = std::get_if<MonomialDescriptor>(&d)) {
    j["kind"] = "monomial";
    j["name"] = m->name;
    j["field"] = field_to_json(*m->nu.field());
    j["group"] = group_to_json(m->nu.group());
    Json w;
    for (std::size_t i = 0; i < m->nu.field()->arity(); ++i)
      w[m->nu.field()->variables()[i]] = element_to_json(m->nu.weights()[i]);
    j["weights"] = std::move(w);
    Json params = Json::array(), residue = Json::array();
    for (auto i : m->nu.parameters()) params.push_back(m->nu.field()->variables()[i]);
    for (auto i : m->nu.residue_vars()) residue.push_back(m->nu.field()->variables()[i]);
    j["parameters"] = std::move(params);
    j["residue_vars"] = std::move(residue);
  } else if (const auto* g = std::get_if<GaussDescriptor>(&d)) {
    j["kind"] = "gauss";
    j["name"] = g->name;
    j["p"] = g->w.p();
    j["variant"] =
        g->w.variant() == GaussValuation::Variant::group_first ? "group_first" : "z_first";
  } else if (const auto* s = std::get_if<SeriesEmbeddingDescriptor>(&d)) {
    j["kind"] = "series_embedding";
    j["name"] = s->name;
    j["p"] = s->field->base().p();
    j["seed"] = s->seed;
    j["precision"] = s->precision;
  } else {
    const auto& h = std::get<HahnWitnessDescriptor>(d);
    j["kind"] = "hahn";
    j["name"] = h.name;
    j["p"] = h.field->base().p();
  }
  return j;
}

ValuationDescriptor load_descriptor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open descriptor file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw DomainError("bad JSON in '" + path + "': " + e.what());
  }
  return descriptor_from_json(j);
}

CenterDescriptor center_from_json(const Json& j) {
  CenterDescriptor c;
  c.dimension = j.at("dimension").get<unsigned>();
  c.residue_field = field_from_json(j.at("residue_field"));
  c.canonical = j.value("canonical", false);
  return c;
}

CenterDescriptor load_center(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open center file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw DomainError("bad JSON in '" + path + "': " + e.what());
  }
  return center_from_json(j);
}

Json report_to_json(const ClassificationReport& r) {
  Json j;
  j["schema_version"] = 1;
  j["descriptor"] = r.descriptor;
  j["field"] = r.ambient;
  j["p"] = r.p;
  j["group"] = r.group;
  Json degrees;
  degrees["K_over_Kp"] = r.degree_K_Kp.get_str();
  degrees["index_p_gamma"] = r.index_p_gamma.get_str();
  degrees["residue_degree"] = r.residue_degree.get_str();
  degrees["defect_product"] = r.defect_product.get_str();
  degrees["fibre_dimension"] = r.fibre_dim.get_str();
  j["degrees"] = std::move(degrees);
  Json flags;
  flags["defectless"] = r.defectless;
  flags["maximal_ideal_finitely_generated"] = r.maximal_ideal_finitely_generated;
  if (r.monomialized) flags["monomialized"] = *r.monomialized;
  j["flags"] = std::move(flags);
  if (r.center_check) {
    Json c;
    c["rational_rank"] = r.center_check->rational_rank;
    c["trdeg"] = r.center_check->trdeg;
    c["dim"] = r.center_check->dim;
    c["abhyankar_center"] = r.center_check->equal;
    c["degree_identity_lhs"] = r.center_degree->lhs.get_str();
    c["degree_identity_rhs"] = r.center_degree->rhs.get_str();
    c["degree_identity"] = r.center_degree->equal;
    j["center"] = std::move(c);
  }
  auto verdict = [](const Verdict& v) {
    Json out;
    out["value"] = v.value;
    out["rule"] = v.rule;
    out["statement"] = v.statement;
    return out;
  };
  Json verdicts;
  verdicts["dvr"] = verdict(r.dvr);
  verdicts["f_finite"] = verdict(r.f_finite);
  verdicts["frobenius_split"] = verdict(r.frobenius_split);
  j["verdicts"] = std::move(verdicts);
  if (r.witness) {
    Json w;
    w["descriptor"] = r.witness->descriptor;
    w["samples"] = r.witness->samples;
    w["seed"] = r.witness->seed;
    w["inf_eq_checked"] = r.witness->inf_eq_checked;
    w["claim_checked"] = r.witness->claim_checked;
    w["extension_checked"] = r.witness->extension_checked;
    w["ok"] = r.witness->ok;
    j["witness"] = std::move(w);
  }
  j["notes"] = r.notes;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  if (r.precision > 0) j["precision"] = r.precision;
  return j;
}

}  // namespace valfrob
