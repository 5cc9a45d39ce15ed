#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "valfrob/gauss.hpp"
#include "valfrob/parse.hpp"
#include "valfrob/rng.hpp"

using namespace valfrob;

namespace {

GroupElement pair_el(mpq_class a, mpq_class b) {
  GroupElement e;
  e.coords.push_back(std::move(a));
  e.coords.push_back(std::move(b));
  return e;
}

}  // namespace

TEST_CASE("perfected base field values and roots") {
  PerfectedBase L(2);
  auto s = L.uniformizer();
  CHECK(L.value(s) == 1);
  auto root = L.pth_root(s);
  CHECK(L.value(root) == mpq_class(1, 2));
  CHECK(L.eq(L.mul(root, root), s));
  auto r2 = L.pth_root(root);
  CHECK(L.value(r2) == mpq_class(1, 4));

  // sums respect the ultrametric
  auto one = L.constant(1);
  auto sum = L.add(s, one);
  CHECK(L.value(sum) == 0);
  CHECK(L.value(L.div(s, L.mul(s, s))) == -1);

  // the level cap surrenders loudly
  auto x = s;
  for (int i = 0; i < static_cast<int>(PerfectedBase::kLevelCap); ++i) x = L.pth_root(x);
  CHECK_THROWS_AS(L.pth_root(x), PrecisionExhausted);
}

TEST_CASE("gauss values take the lexicographic infimum of term pairs") {
  GaussValuation w(2, GaussValuation::Variant::group_first);
  FieldRef f = w.field();
  // w(x) = (0, 1): the indeterminate is the smallest positive after the base
  CHECK(w.value(w.from_rf(rf_parse("x", f))) == pair_el(0, 1));
  // a base constant sits at (value, 0)
  CHECK(w.value(w.from_rf(rf_parse("u", f))) == pair_el(1, 0));
  // f = s x^2 + x^3 -> lex min of (1,2) and (0,3) is (0,3)
  CHECK(w.value(w.from_rf(rf_parse("u*x^2 + x^3", f))) == pair_el(0, 3));
  // z_first orders by the x-degree first
  GaussValuation wz(2, GaussValuation::Variant::z_first);
  CHECK(wz.value(wz.from_rf(rf_parse("u*x^2 + x^3", f))) == pair_el(2, 1));

  CHECK_THROWS_AS(w.value(w.from_rf(RationalFunction::zero(f))), DomainError);
}

TEST_CASE("gauss valuation axioms on sampled polynomial pairs") {
  for (auto variant : {GaussValuation::Variant::group_first, GaussValuation::Variant::z_first}) {
    GaussValuation w(3, variant);
    Rng rng(55);
    for (int i = 0; i < 400; ++i) {
      Polynomial a = random_nonzero_polynomial(rng, w.field(), 3, 4);
      Polynomial b = random_nonzero_polynomial(rng, w.field(), 3, 4);
      GroupElement va = w.poly_value(a, 0), vb = w.poly_value(b, 0);
      CHECK(w.poly_value(a * b, 0) == ge_add(va, vb));
      Polynomial s = a + b;
      if (s.is_zero()) continue;
      GroupElement inf = w.value_group().compare(va, vb) == Ordering::less ? va : vb;
      Ordering o = w.value_group().compare(w.poly_value(s, 0), inf);
      CHECK(o != Ordering::less);
      if (w.value_group().compare(va, vb) != Ordering::equal) CHECK(o == Ordering::equal);
    }
  }
}

TEST_CASE("levels embed compatibly") {
  GaussValuation w(2, GaussValuation::Variant::group_first);
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    Polynomial a = random_nonzero_polynomial(rng, w.field(), 3, 4);
    GaussValuation::Elem e0{RationalFunction(a), 0};
    GaussValuation::Elem e2 = w.lift(e0, 2);
    CHECK(w.value(e0) == w.value(e2));
  }
}

TEST_CASE("x-basis decomposition reconstructs the element") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    GaussValuation w(p, GaussValuation::Variant::group_first);
    Rng rng(p);
    for (int i = 0; i < 60; ++i) {
      RationalFunction v = random_rational_function(rng, w.field(), 4, 4);
      if (v.is_zero()) continue;
      GaussValuation::Elem e{v, 0};
      auto parts = w.x_basis_decompose(e);
      REQUIRE(parts.size() == p);
      // sum_i parts[i]^p x^i must equal v lifted one level up
      RationalFunction acc = RationalFunction::zero(w.field());
      for (std::uint32_t idx = 0; idx < p; ++idx) {
        RationalFunction xi = RationalFunction::variable(w.field(), 1).pow(mpz_class(idx));
        acc = acc + parts[idx].f.frobenius_power(1) * xi;
      }
      CHECK(acc.eq(w.lift(e, 1).f));
    }
  }
}
