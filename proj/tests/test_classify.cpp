#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "valfrob/classify.hpp"
#include "valfrob/gallery.hpp"

using namespace valfrob;

namespace {

CenterDescriptor plane_center(std::uint32_t p, unsigned dim) {
  return CenterDescriptor{dim, FieldDescriptor::make(p, 1, {}), false};
}

ValuationDescriptor series_descriptor(std::uint32_t p) {
  SeriesEmbeddingDescriptor d;
  d.field = FieldDescriptor::make(p, 1, {"x", "y"});
  d.seed = 42;
  d.name = "series";
  return d;
}

ValuationDescriptor hahn_descriptor(std::uint32_t p) {
  HahnWitnessDescriptor d;
  d.field = FieldDescriptor::make(p, 1, {"x", "y"});
  d.name = "hahn";
  return d;
}

}  // namespace

TEST_CASE("field degrees over p-th powers") {
  CHECK(degree_K_Kp(*FieldDescriptor::make(2, 1, {"x", "y"})) == 4);
  CHECK(degree_K_Kp(*FieldDescriptor::make(5, 1, {"x", "y"})) == 25);
  // perfected base field: degree 1
  FieldRef L = FieldDescriptor::make(GroundField(3, 1), {}, {"s"});
  CHECK(degree_K_Kp(*L) == 1);
  CHECK(L->perfected());
  CHECK(L->trdeg() == 1);
  // one indeterminate over the perfection: degree p
  FieldRef LX = FieldDescriptor::make(GroundField(3, 1), {"x"}, {"s"});
  CHECK(degree_K_Kp(*LX) == 3);
}

TEST_CASE("defect identity across the descriptor kinds") {
  // lex on n variables: p^n * 1 = p^n
  for (std::uint32_t p : {2u, 3u, 5u}) {
    DescriptorFacts f = facts_of(MonomialDescriptor{lex_valuation(p, 3), "lex3"});
    DefectCheck c = defect_identity(f);
    CHECK(c.equal);
    CHECK(c.index_p_gamma == pow_ui(mpz_class(p), 3));
  }
  // the series DVR: p * 1 != p^2
  DefectCheck dvr = defect_identity(facts_of(series_descriptor(3)));
  CHECK_FALSE(dvr.equal);
  CHECK(dvr.product == 3);
  CHECK(dvr.field_degree == 9);
  // gauss, both variants: p * 1 = p
  for (auto variant : {GaussValuation::Variant::group_first, GaussValuation::Variant::z_first}) {
    DefectCheck g = defect_identity(facts_of(GaussDescriptor{GaussValuation(2, variant), "g"}));
    CHECK(g.equal);
    CHECK(g.product == 2);
  }
  // hahn witness: 1 * 1 != p^2, the other extreme
  DefectCheck h = defect_identity(facts_of(hahn_descriptor(2)));
  CHECK(h.product == 1);
  CHECK_FALSE(h.equal);
}

TEST_CASE("abhyankar center checks") {
  // lex with its canonical center: n + 0 = n
  MonomialValuation lex3 = lex_valuation(2, 3);
  CenterCheck c =
      abhyankar_center_check(facts_of(MonomialDescriptor{lex3, "lex3"}), canonical_center(lex3));
  CHECK(c.equal);
  CHECK(c.dim == 3);

  // the series DVR against the two-dimensional polynomial center: 1 + 0 != 2
  CenterCheck dvr = abhyankar_center_check(facts_of(series_descriptor(2)), plane_center(2, 2));
  CHECK_FALSE(dvr.equal);
  // the same valuation with its own valuation ring as center: 1 + 0 = 1
  CenterCheck own = abhyankar_center_check(facts_of(series_descriptor(2)), plane_center(2, 1));
  CHECK(own.equal);

  // violating the dimension inequality is a hard error, not a verdict
  CHECK_THROWS_AS(abhyankar_center_check(facts_of(MonomialDescriptor{lex3, "lex3"}),
                                         plane_center(2, 2)),
                  DomainError);
  // incomparable residue fields are refused
  CenterDescriptor alien{3, FieldDescriptor::make(3, 1, {}), false};
  CHECK_THROWS_AS(abhyankar_center_check(facts_of(MonomialDescriptor{lex3, "lex3"}), alien),
                  DomainError);
}

TEST_CASE("center degree identity") {
  FieldRef K2 = FieldDescriptor::make(2, 1, {"x", "y"});
  // the canonical plane center satisfies it
  CHECK(center_degree_identity(plane_center(2, 2), *K2).equal);
  // the series DVR's own valuation ring does not (p != p^2)
  CenterDegreeCheck bad = center_degree_identity(plane_center(2, 1), *K2);
  CHECK_FALSE(bad.equal);
  CHECK(bad.rhs == 2);
  CHECK(bad.lhs == 4);
  // dim 0 center of its own fraction field
  CenterDescriptor field_center{0, FieldDescriptor::make(2, 1, {"x", "y"}), false};
  CHECK(center_degree_identity(field_center, *K2).equal);
}

TEST_CASE("fibre dimensions and the finitely generated maximal ideal") {
  // lex plane: smallest positive exists -> p
  FibreDimension lex = fibre_dimension(facts_of(MonomialDescriptor{lex_valuation(2, 2), "lex"}));
  CHECK(lex.maximal_ideal_finitely_generated);
  CHECK(lex.dimension == 2);
  // gauss z_first: no smallest positive -> 1
  FibreDimension z = fibre_dimension(
      facts_of(GaussDescriptor{GaussValuation(2, GaussValuation::Variant::z_first), "z"}));
  CHECK_FALSE(z.maximal_ideal_finitely_generated);
  CHECK(z.dimension == 1);
  // DVR descriptor: p
  FibreDimension s = fibre_dimension(facts_of(series_descriptor(5)));
  CHECK(s.maximal_ideal_finitely_generated);
  CHECK(s.dimension == 5);
}

TEST_CASE("f-finiteness verdicts") {
  auto gauss_first =
      facts_of(GaussDescriptor{GaussValuation(2, GaussValuation::Variant::group_first), "g"});
  CHECK(f_finite_verdict(gauss_first).value == "yes");
  CHECK(f_finite_verdict(facts_of(MonomialDescriptor{lex_valuation(2, 2), "lex"})).value == "no");
  CHECK(f_finite_verdict(facts_of(series_descriptor(2))).value == "no");
}

TEST_CASE("split verdicts fire exactly one rule in order") {
  ClassifyOptions opts{11, 60, true};

  SplitDecision lex = split_verdict(MonomialDescriptor{lex_valuation(2, 2), "lex"}, opts);
  CHECK(lex.verdict.value == "yes");
  CHECK(lex.verdict.rule == "monomial-splitting-extends");
  REQUIRE(lex.witness.has_value());
  CHECK(lex.witness->ok);
  CHECK(lex.witness->samples == 60);

  SplitDecision dvr = split_verdict(series_descriptor(2), opts);
  CHECK(dvr.verdict.value == "no");
  CHECK(dvr.verdict.rule == "noetherian-split-iff-f-finite");

  SplitDecision hahn = split_verdict(hahn_descriptor(2), opts);
  CHECK(hahn.verdict.value == "no");
  CHECK(hahn.verdict.rule == "totally-unramified-no-splitting");

  SplitDecision gauss = split_verdict(
      GaussDescriptor{GaussValuation(2, GaussValuation::Variant::group_first), "g"}, opts);
  CHECK(gauss.verdict.value == "yes");
  CHECK(gauss.verdict.rule == "f-finite-implies-split");

  SplitDecision zfirst = split_verdict(
      GaussDescriptor{GaussValuation(2, GaussValuation::Variant::z_first), "z"}, opts);
  CHECK(zfirst.verdict.value == "unknown");

  SplitDecision original = split_verdict(MonomialDescriptor{blowup_pi_original(2), "o"}, opts);
  CHECK(original.verdict.value == "unknown");
}

TEST_CASE("equivalence of the center check and the defect identity over a sweep") {
  // canonical centers across many descriptor shapes: the two sides must agree
  std::vector<MonomialValuation> descriptors;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (unsigned n : {1u, 2u, 3u}) descriptors.push_back(lex_valuation(p, n));
    descriptors.push_back(blowup_pi_original(p));
    descriptors.push_back(blowup_pi_monomialized(p));
  }
  int count = 0;
  for (const auto& nu : descriptors) {
    DescriptorFacts f = facts_of(MonomialDescriptor{nu, "sweep"});
    CenterDescriptor center = canonical_center(nu);
    CHECK(abhyankar_center_check(f, center).equal == defect_identity(f).equal);
    // a verified monomialized descriptor is always defectless
    if (f.monomialized) CHECK(defect_identity(f).equal);
    ++count;
  }
  CHECK(count >= 15);
}

TEST_CASE("classification reports are deterministic") {
  ClassifyOptions opts{5, 40, true};
  ClassificationReport a = classify(series_descriptor(2), plane_center(2, 2), opts);
  ClassificationReport b = classify(series_descriptor(2), plane_center(2, 2), opts);
  CHECK(render_report(a) == render_report(b));
  CHECK(a.frobenius_split.value == "no");
  CHECK(a.notes.empty());

  // the F-finite non-Noetherian gauss ring carries its obstruction notes
  ClassificationReport g = classify(
      GaussDescriptor{GaussValuation(2, GaussValuation::Variant::group_first), "g"}, {}, opts);
  REQUIRE(g.notes.size() == 2);
}

TEST_CASE("gallery entries all pass") {
  ClassifyOptions opts{42, 60, true};
  auto results = run_gallery(opts);
  CHECK(results.size() >= 10);
  for (const auto& r : results) {
    INFO(r.name);
    for (const auto& d : r.diffs) { INFO(d); }
    CHECK(r.ok);
  }
}
