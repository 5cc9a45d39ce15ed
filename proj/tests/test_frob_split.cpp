#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "valfrob/frob_split.hpp"
#include "valfrob/gallery.hpp"
#include "valfrob/parse.hpp"
#include "valfrob/rng.hpp"

using namespace valfrob;

TEST_CASE("p-decomposition splits exponents by residue class") {
  FieldRef f = FieldDescriptor::make(2, 1, {"x"});
  Polynomial g = rf_parse("x^3 + x^2", f).num();
  FrobDecomposition d = p_decompose(g, 1);
  REQUIRE(d.components.size() == 2);
  // x^3 + x^2 = (x)^2 x + (x)^2: both residue classes carry c = x
  Polynomial x = rf_parse("x", f).num();
  CHECK(d.components.at(ExpVec{mpz_class(1)}) == x);
  CHECK(d.components.at(ExpVec{mpz_class(0)}) == x);
  // recomposition oracle: x^2 * x + x^2 * 1
  CHECK(recompose(d) == g);

  Polynomial xp = rf_parse("x^2", f).num();
  FrobDecomposition d2 = p_decompose(xp, 1);
  REQUIRE(d2.components.size() == 1);
  CHECK(d2.components.at(ExpVec{mpz_class(0)}) == x);

  FrobDecomposition d3 = p_decompose(rf_parse("1", f).num(), 1);
  CHECK(d3.components.at(ExpVec{mpz_class(0)}) == rf_parse("1", f).num());

  CHECK(p_decompose(Polynomial::zero(f), 1).components.empty());
}

TEST_CASE("recomposition is the identity on random polynomials") {
  Rng rng(1);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (unsigned n : {1u, 2u, 3u}) {
      FieldRef f = lex_valuation(p, n).field();
      for (unsigned e : {1u, 2u}) {
        for (int i = 0; i < 100; ++i) {
          Polynomial g = random_polynomial(rng, f, 2 * p + 1, 6);
          CHECK(recompose(p_decompose(g, e)) == g);
        }
      }
    }
  }
  // extension coefficients also root correctly
  FieldRef f9 = FieldDescriptor::make(3, 2, {"x", "y"});
  Rng rng9(2);
  for (int i = 0; i < 60; ++i) {
    Polynomial g = random_polynomial(rng9, f9, 5, 5);
    CHECK(recompose(p_decompose(g, 1)) == g);
  }
}

TEST_CASE("the monomial splitting keeps p-divisible monomials only") {
  MonomialValuation nu2 = lex_valuation(2, 2);
  FieldRef f = nu2.field();
  CHECK(eta_split(rf_parse("x1", f).num(), nu2).is_zero());
  CHECK(eta_split(rf_parse("1", f).num(), nu2) == rf_parse("1", f).num());
  CHECK(eta_split(rf_parse("x1^2 + x1^3", f).num(), nu2) == rf_parse("x1^2", f).num());

  // the closed-form rule, exhaustively for exponents <= 2p
  for (std::uint32_t p : {2u, 3u}) {
    MonomialValuation nu = lex_valuation(p, 2);
    FieldRef fp = nu.field();
    for (unsigned a = 0; a <= 2 * p; ++a) {
      for (unsigned b = 0; b <= 2 * p; ++b) {
        Polynomial m = Polynomial::monomial(fp, {mpz_class(a), mpz_class(b)}, fp->base().one());
        Polynomial img = eta_split(m, nu);
        if (a % p == 0 && b % p == 0)
          CHECK(img == m);
        else
          CHECK(img.is_zero());
      }
    }
  }

  // refuses descriptors without a verified free basis
  MonomialValuation bad = blowup_pi_original(2);
  CHECK_THROWS_AS(eta_split(rf_parse("x", bad.field()).num(), bad), DomainError);
}

TEST_CASE("extension formula on fractions") {
  MonomialValuation nu = lex_valuation(2, 2);
  FieldRef f = nu.field();
  // x1/x2: phi(x1 x2) = 0 since both exponents are odd
  CHECK(extend_split(rf_parse("x1/x2", f), nu).is_zero());
  // x1^2/x2^2 is a p-th power, hence fixed
  RationalFunction sq = rf_parse("x1^2/x2^2", f);
  CHECK(extend_split(sq, nu).eq(sq));
  CHECK(extend_split(RationalFunction::one(f), nu).eq(RationalFunction::one(f)));
  // elements outside the ring are refused
  CHECK_THROWS_AS(extend_split(rf_parse("1/x1", f), nu), DomainError);

  // agreement with eta on polynomial inputs
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    Polynomial g = random_polynomial(rng, f, 4, 5);
    CHECK(extend_split(RationalFunction(g), nu).eq(RationalFunction(eta_split(g, nu))));
  }

  // restricted to p-th powers the extension is the identity
  int done = 0;
  while (done < 100) {
    RationalFunction r = random_rational_function(rng, f, 3, 3);
    if (r.is_zero()) continue;
    ++done;
    RationalFunction rp = r.frobenius_power(1);
    if (!nu.in_valuation_ring(rp)) continue;
    CHECK(extend_split(rp, nu).eq(rp));
  }
}

TEST_CASE("extension is independent of the representative") {
  MonomialValuation nu = lex_valuation(3, 2);
  Rng rng(5);
  int done = 0;
  while (done < 150) {
    RationalFunction r = random_rational_function(rng, nu.field(), 3, 3);
    if (r.is_zero() || !nu.in_valuation_ring(r)) continue;
    ++done;
    Polynomial h = random_nonzero_polynomial(rng, nu.field(), 3, 3);
    RationalFunction same(r.num() * h, r.den() * h);
    CHECK(extend_split(r, nu).eq(extend_split(same, nu)));
  }
}

TEST_CASE("extension with higher Frobenius iterations") {
  MonomialValuation nu = lex_valuation(2, 1);
  FieldRef f = nu.field();
  // e = 2: x1^4 is a 4th power, x1^2 is not
  CHECK(extend_split(rf_parse("x1^4", f), nu, 2).eq(rf_parse("x1^4", f)));
  CHECK(extend_split(rf_parse("x1^2", f), nu, 2).is_zero());
  // p^e-linearity for e = 2
  Rng rng(6);
  int done = 0;
  while (done < 100) {
    RationalFunction r = random_rational_function(rng, f, 3, 3);
    if (r.is_zero() || !nu.in_valuation_ring(r)) continue;
    ++done;
    Polynomial g = random_nonzero_polynomial(rng, f, 2, 2);
    RationalFunction g4(g.frobenius_power(2));
    CHECK(extend_split(g4 * r, nu, 2).eq(g4 * extend_split(r, nu, 2)));
  }
}

TEST_CASE("inf-equation verifier") {
  for (std::uint32_t p : {2u, 3u}) {
    MonomialValuation nu = lex_valuation(p, 2);
    FieldRef f = nu.field();
    // x1 + x2^p: both sides are min(e1, p e2)
    Polynomial g = rf_parse("x1", f).num() + rf_parse("x2", f).num().pow(p);
    CHECK(verify_inf_eq(g, nu));
    CHECK(verify_inf_eq(rf_parse("x1^3*x2", f).num(), nu));
  }
  // monomialized pi chart: x + u x has both sides 1
  MonomialValuation nu = blowup_pi_monomialized(2);
  Polynomial g = rf_parse("x + u*x", nu.field()).num();
  CHECK(verify_inf_eq(g, nu));
  GroupElement v = nu.value(RationalFunction(g));
  CHECK(v.coords[0] == 1);
  CHECK(v.coords[1] == 0);
}

TEST_CASE("claim verifier") {
  MonomialValuation nu = lex_valuation(2, 2);
  FieldRef f = nu.field();
  CHECK(verify_claim(rf_parse("x1", f).num(), nu));              // eta vanishes
  CHECK(verify_claim(rf_parse("x1^2", f).num(), nu));            // equal values
  CHECK(verify_claim(rf_parse("x1^2 + x2", f).num(), nu));       // lex comparison
  MonomialValuation pi = blowup_pi_monomialized(3);
  Rng rng(44);
  for (int i = 0; i < 300; ++i) {
    Polynomial g = random_nonzero_polynomial(rng, pi.field(), 6, 6);
    CHECK(verify_claim(g, pi));
    CHECK(verify_inf_eq(g, pi));
  }
}

TEST_CASE("claim suite issues witnesses and parallel equals serial") {
  MonomialValuation nu = lex_valuation(3, 2);
  SplittingWitness serial = run_claim_suite(nu, 200, 7, false);
  SplittingWitness parallel = run_claim_suite(nu, 200, 7, true);
  CHECK(serial.ok);
  CHECK(parallel.ok);
  CHECK(serial.samples == parallel.samples);
  CHECK(serial.failure == parallel.failure);
}

TEST_CASE("free-basis certificates over the monomial basis") {
  MonomialValuation nu = lex_valuation(2, 2);
  FieldRef f = nu.field();
  std::vector<RationalFunction> basis;
  for (unsigned a = 0; a < 2; ++a)
    for (unsigned b = 0; b < 2; ++b)
      basis.push_back(RationalFunction(
          Polynomial::monomial(f, {mpz_class(a), mpz_class(b)}, f->base().one())));

  // elements of the polynomial subring always certify: their coordinates are
  // polynomials again
  Rng rng(10);
  std::vector<RationalFunction> samples;
  samples.push_back(RationalFunction::one(f));
  while (samples.size() < 50)
    samples.push_back(RationalFunction(random_polynomial(rng, f, 3, 4)));
  FreeBasisReport rep = verify_free_basis(samples, basis, nu, 1);
  CHECK(rep.ok);
  CHECK(rep.per_sample.size() == samples.size());

  // x1/x2 lies in the valuation ring (lex!) but its only coordinate is
  // x1 x2 / x2^2 with root 1/x2 of negative value: the certificate must
  // fail, which is precisely why this ring is not free over its p-th powers
  RationalFunction skew = rf_parse("x1/x2", f);
  REQUIRE(nu.in_valuation_ring(skew));
  FreeBasisReport counter = verify_free_basis({skew}, basis, nu, 1);
  CHECK_FALSE(counter.ok);

  // wrong size is refused
  std::vector<RationalFunction> short_basis(basis.begin(), basis.begin() + 3);
  CHECK_THROWS_AS(verify_free_basis(samples, short_basis, nu, 1), DomainError);
  // degenerate "basis" cannot span
  std::vector<RationalFunction> degenerate(4, RationalFunction::one(f));
  CHECK_THROWS_AS(verify_free_basis(samples, degenerate, nu, 1), DomainError);
}

TEST_CASE("free-basis certificates for the gauss extension") {
  for (std::uint32_t p : {2u, 3u}) {
    GaussValuation w(p, GaussValuation::Variant::group_first);
    FieldRef f = w.field();
    std::vector<GaussValuation::Elem> basis;
    for (std::uint32_t i = 0; i < p; ++i)
      basis.push_back(w.from_rf(RationalFunction::variable(f, 1).pow(mpz_class(i))));

    // the sample {1} certifies with r_0 = 1
    std::vector<GaussValuation::Elem> one = {w.from_rf(RationalFunction::one(f))};
    FreeBasisReport rep1 = verify_free_basis(one, basis, w);
    CHECK(rep1.ok);

    // x^(p+1) = (x)^p x certifies with r_1 = x
    std::vector<GaussValuation::Elem> xp1 = {
        w.from_rf(RationalFunction::variable(f, 1).pow(mpz_class(p + 1)))};
    CHECK(verify_free_basis(xp1, basis, w).ok);

    // random elements of the valuation ring
    Rng rng(p * 19);
    std::vector<GaussValuation::Elem> samples;
    while (samples.size() < 25) {
      RationalFunction num(random_nonzero_polynomial(rng, f, 3, 4));
      RationalFunction den(random_nonzero_polynomial(rng, f, 3, 4));
      GaussValuation::Elem cand = w.from_rf(num / den);
      if (!w.in_valuation_ring(cand)) cand = w.from_rf(den / num);
      if (w.in_valuation_ring(cand)) samples.push_back(cand);
    }
    CHECK(verify_free_basis(samples, basis, w).ok);
  }
}

TEST_CASE("negative-value coordinates are reported, not hidden") {
  // 1/x lies outside the ring; its certificate must fail
  GaussValuation w(2, GaussValuation::Variant::group_first);
  FieldRef f = w.field();
  std::vector<GaussValuation::Elem> basis = {
      w.from_rf(RationalFunction::one(f)),
      w.from_rf(RationalFunction::variable(f, 1))};
  std::vector<GaussValuation::Elem> outside = {
      w.from_rf(RationalFunction::one(f) / RationalFunction::variable(f, 1))};
  FreeBasisReport rep = verify_free_basis(outside, basis, w);
  CHECK_FALSE(rep.ok);
}
