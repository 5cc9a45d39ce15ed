// valfrob: exact valuation-theoretic computations in prime characteristic.
//
// Subcommands: eval, split, classify, verify, gallery. Descriptor files are
// JSON; schemas are documented in the README. Exit codes: 0 success,
// 1 verification failure, 2 usage error, 3 precision budget exhausted.

#include <iostream>

#include <CLI11.hpp>

#include "valfrob/descriptor_io.hpp"
#include "valfrob/gallery.hpp"
#include "valfrob/hahn.hpp"
#include "valfrob/parse.hpp"
#include "valfrob/series.hpp"
#include "valfrob/sweep.hpp"

namespace {

using namespace valfrob;

struct GlobalFlags {
  std::string format = "text";
  std::uint64_t seed = 42;
  long precision = 256;
  unsigned samples = 200;
  bool serial = false;
};

int cmd_eval(const GlobalFlags& g, const std::string& valuation_path, const std::string& expr) {
  ValuationDescriptor d = load_descriptor(valuation_path);
  Json out;
  out["input"] = expr;
  if (const auto* m = std::get_if<MonomialDescriptor>(&d)) {
    RationalFunction f = rf_parse(expr, m->nu.field());
    GroupElement v = m->nu.value(f);
    out["value"] = element_to_json(v);
    out["rendered"] = m->nu.group().render(v);
  } else if (const auto* gd = std::get_if<GaussDescriptor>(&d)) {
    RationalFunction f = rf_parse(expr, gd->w.field());
    GroupElement v = gd->w.value(gd->w.from_rf(f));
    out["value"] = element_to_json(v);
    out["rendered"] = gd->w.value_group().render(v);
  } else if (const auto* s = std::get_if<SeriesEmbeddingDescriptor>(&d)) {
    SeriesEmbedding emb(s->field, g.seed == 42 ? s->seed : g.seed,
                        g.precision == 256 ? s->precision : g.precision);
    RationalFunction f = rf_parse(expr, s->field);
    long v = emb.value(f);
    out["value"] = v;
    out["rendered"] = std::to_string(v);
    out["seed"] = emb.seed();
  } else {
    const auto& h = std::get<HahnWitnessDescriptor>(d);
    RationalFunction f = rf_parse(expr, h.field);
    if (!f.is_polynomial())
      throw DomainError("the witness embedding evaluates polynomials only");
    mpq_class v = hahn_embed_value(f.num(), mpq_class(g.precision));
    out["value"] = v.get_str();
    out["rendered"] = v.get_str();
  }
  if (g.format == "json")
    std::cout << out.dump(2) << "\n";
  else
    std::cout << out["rendered"].get<std::string>() << "\n";
  return 0;
}

int cmd_split(const GlobalFlags& g, const std::string& valuation_path, const std::string& expr,
              unsigned e) {
  ValuationDescriptor d = load_descriptor(valuation_path);
  const auto* m = std::get_if<MonomialDescriptor>(&d);
  if (!m) throw DomainError("split needs a monomial valuation descriptor");
  RationalFunction f = rf_parse(expr, m->nu.field());
  Json out;
  out["input"] = f.render();
  RationalFunction image = extend_split(f, m->nu, e);
  out["image"] = image.render();
  bool claim = true;
  if (f.is_zero()) {
    out["value_in"] = nullptr;
  } else {
    GroupElement vin = m->nu.value(f);
    out["value_in"] = m->nu.group().render(vin);
    if (image.is_zero()) {
      out["value_out"] = nullptr;
    } else {
      GroupElement vout = m->nu.value(image);
      out["value_out"] = m->nu.group().render(vout);
      claim = m->nu.group().compare(vout, vin) != Ordering::less;
    }
  }
  out["claim_holds"] = claim;
  if (g.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << out["image"].get<std::string>() << "\n";
    std::cout << out.dump() << "\n";
  }
  return claim ? 0 : 1;
}

int cmd_classify(const GlobalFlags& g, const std::string& valuation_path,
                 const std::string& center_path) {
  ValuationDescriptor d = load_descriptor(valuation_path);
  std::optional<CenterDescriptor> center;
  if (!center_path.empty()) center = load_center(center_path);
  ClassifyOptions opts{g.seed, g.samples, !g.serial};
  ClassificationReport r = classify(d, center, opts);
  if (g.format == "json")
    std::cout << report_to_json(r).dump(2) << "\n";
  else
    std::cout << render_report(r);
  return 0;
}

int cmd_verify(const GlobalFlags& g, const std::string& valuation_path) {
  ValuationDescriptor d = load_descriptor(valuation_path);
  const auto* m = std::get_if<MonomialDescriptor>(&d);
  if (!m) throw DomainError("verify needs a monomial valuation descriptor");
  SplittingWitness w = run_claim_suite(m->nu, g.samples, g.seed, !g.serial);
  Json out;
  out["descriptor"] = w.descriptor;
  out["samples"] = w.samples;
  out["seed"] = w.seed;
  out["ok"] = w.ok;
  if (!w.ok) out["failure"] = w.failure;
  if (g.format == "json")
    std::cout << out.dump(2) << "\n";
  else
    std::cout << (w.ok ? "ok" : "FAILED: " + w.failure) << " (" << w.samples << " samples, seed "
              << w.seed << ")\n";
  return w.ok ? 0 : 1;
}

int cmd_gallery(const GlobalFlags& g, const std::string& only) {
  ClassifyOptions opts{g.seed, g.samples, !g.serial};
  bool all_ok = true;
  bool matched = false;
  Json jout = Json::array();
  for (const auto& entry : builtin_gallery()) {
    if (!only.empty() && entry.name != only) continue;
    matched = true;
    GalleryResult r = run_entry(entry, opts);
    all_ok = all_ok && r.ok;
    if (g.format == "json") {
      Json je;
      je["name"] = r.name;
      je["ok"] = r.ok;
      je["diffs"] = r.diffs;
      jout.push_back(std::move(je));
    } else {
      std::cout << (r.ok ? "[PASS] " : "[FAIL] ") << r.name << "\n";
      for (const auto& diff : r.diffs) std::cout << "       " << diff << "\n";
    }
  }
  if (!matched) throw DomainError("no gallery entry named '" + only + "'");
  if (g.format == "json") std::cout << jout.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact valuations, Frobenius splittings and F-finiteness classification"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalFlags g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "seed for randomized sweeps and streams");
  app.add_option("--precision", g.precision, "precision cap for series and witness scans");
  app.add_option("--samples", g.samples, "sample budget for verification sweeps");
  app.add_flag("--serial", g.serial, "run sweeps on the serial reference driver");

  std::string valuation_path, center_path, expr, entry;
  unsigned iteration = 1;

  CLI::App* eval = app.add_subcommand("eval", "value of an expression under a valuation");
  eval->add_option("--valuation", valuation_path, "descriptor JSON")->required();
  eval->add_option("--expr", expr, "expression")->required();

  CLI::App* split = app.add_subcommand("split", "apply the splitting to an element");
  split->add_option("--valuation", valuation_path, "descriptor JSON")->required();
  split->add_option("--expr", expr, "expression")->required();
  split->add_option("-e,--iteration", iteration, "Frobenius iteration");

  CLI::App* classify_cmd = app.add_subcommand("classify", "classification report");
  classify_cmd->add_option("--valuation", valuation_path, "descriptor JSON")->required();
  classify_cmd->add_option("--center", center_path, "center descriptor JSON");

  CLI::App* verify = app.add_subcommand("verify", "randomized splitting-law sweep");
  verify->add_option("--valuation", valuation_path, "descriptor JSON")->required();

  CLI::App* gallery = app.add_subcommand("gallery", "run the example gallery");
  gallery->add_option("--entry", entry, "run a single entry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(eval)) return cmd_eval(g, valuation_path, expr);
    if (app.got_subcommand(split)) return cmd_split(g, valuation_path, expr, iteration);
    if (app.got_subcommand(classify_cmd)) return cmd_classify(g, valuation_path, center_path);
    if (app.got_subcommand(verify)) return cmd_verify(g, valuation_path);
    if (app.got_subcommand(gallery)) return cmd_gallery(g, entry);
  } catch (const valfrob::PrecisionExhausted& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
