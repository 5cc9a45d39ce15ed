#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "valfrob/rng.hpp"
#include "valfrob/value_group.hpp"

using namespace valfrob;

namespace {

GroupElement el(std::vector<long> v) {
  GroupElement e;
  for (long x : v) e.coords.emplace_back(x);
  return e;
}

GroupElement random_element(Rng& rng, const ValueGroup& g) {
  GroupElement e = g.zero();
  for (auto& c : e.coords) c = static_cast<long>(rng.below(21)) - 10;
  if (g.kind() == ValueGroup::Kind::p_divisible ||
      (g.kind() == ValueGroup::Kind::lex_sum && g.p_divisible_flag())) {
    // sprinkle p-power denominators
    for (auto& c : e.coords) {
      c /= static_cast<long>(1) << rng.below(4);
      c.canonicalize();
    }
  }
  return e;
}

}  // namespace

TEST_CASE("pi oracle produces nested shrinking enclosures") {
  auto oracle = pi_oracle();
  mpq_class prev_lo(0), prev_hi(4);
  for (int d = 1; d <= 64; d *= 2) {
    auto [lo, hi] = oracle->enclosure(d);
    CHECK(lo < hi);
    CHECK(lo >= prev_lo);
    CHECK(hi <= prev_hi);
    CHECK(hi - lo <= mpq_class(1));
    prev_lo = lo;
    prev_hi = hi;
  }
  auto [lo, hi] = oracle->enclosure(2);
  mpq_class want_lo(314, 100), want_hi(315, 100);
  want_lo.canonicalize();
  want_hi.canonicalize();
  CHECK(lo == want_lo);
  CHECK(hi == want_hi);
  CHECK_THROWS_AS(oracle->enclosure(65), PrecisionExhausted);
}

TEST_CASE("lex comparison orders the first coordinate first") {
  ValueGroup g = ValueGroup::lex(2);
  CHECK(g.compare(el({1, 0}), el({0, 5})) == Ordering::greater);
  CHECK(g.compare(el({0, 5}), el({1, 0})) == Ordering::less);
  CHECK(g.compare(el({3, -2}), el({3, -2})) == Ordering::equal);
}

TEST_CASE("embedded comparison decides by refining the enclosure") {
  ValueGroup g = ValueGroup::embedded(pi_oracle());
  // 2 vs 2*pi: 2 < 2*pi since pi > 3.14
  CHECK(g.compare(el({2, 0}), el({0, 2})) == Ordering::less);
  // 22/7 famously exceeds pi, scaled to integers: 22 > 7*pi
  CHECK(g.compare(el({22, 0}), el({0, 7})) == Ordering::greater);
  // 355/113 > pi as well (and needs a finer enclosure)
  CHECK(g.compare(el({355, 0}), el({0, 113})) == Ordering::greater);
  CHECK(g.compare(el({-1, 1}), el({0, 0})) == Ordering::greater);  // pi - 1 > 0
  CHECK(g.compare(el({4, -1}), el({0, 0})) == Ordering::greater);  // 4 - pi > 0
  CHECK(g.compare(el({3, -1}), el({0, 0})) == Ordering::less);     // 3 - pi < 0
  CHECK(g.compare(el({7, 3}), el({7, 3})) == Ordering::equal);
}

TEST_CASE("p_divisible elements carry p-power denominators only") {
  ValueGroup g = ValueGroup::p_divisible(3);
  GroupElement third;
  third.coords.emplace_back(mpq_class(1, 3));
  g.validate(third);
  GroupElement half;
  half.coords.emplace_back(mpq_class(1, 2));
  CHECK_THROWS_AS(g.validate(half), DomainError);
  // canonical form keeps the numerator prime to p
  GroupElement x;
  x.coords.emplace_back(mpq_class(6, 9));
  x.coords[0].canonicalize();
  CHECK(x.coords[0].get_num() == 2);
  CHECK(x.coords[0].get_den() == 3);
  g.validate(x);
}

TEST_CASE("index of pG matches p^rank for finitely generated groups") {
  CHECK(ValueGroup::lex(2).index_p(2) == 4);
  CHECK(ValueGroup::lex(3).index_p(3) == 27);
  CHECK(ValueGroup::embedded(pi_oracle()).index_p(5) == 25);
  CHECK(ValueGroup::p_divisible(3).index_p(3) == 1);
  ValueGroup mix = ValueGroup::lex_sum({ValueGroup::p_divisible(3), ValueGroup::lex(1)});
  CHECK(mix.index_p(3) == 3);

  // exact law index = p^rational_rank on every finitely generated kind
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (const ValueGroup& g :
         {ValueGroup::lex(1), ValueGroup::lex(4), ValueGroup::embedded(pi_oracle()),
          ValueGroup::lex_sum({ValueGroup::lex(2), ValueGroup::embedded(pi_oracle())})}) {
      REQUIRE(g.finitely_generated());
      CHECK(g.index_p(p) == pow_ui(mpz_class(p), g.rational_rank()));
    }
  }
}

TEST_CASE("smallest positive element exists exactly for discrete tails") {
  ValueGroup lex3 = ValueGroup::lex(3);
  auto sp = lex3.smallest_positive();
  REQUIRE(sp.has_value());
  CHECK(*sp == el({0, 0, 1}));

  CHECK_FALSE(ValueGroup::embedded(pi_oracle()).smallest_positive().has_value());
  CHECK_FALSE(ValueGroup::p_divisible(2).smallest_positive().has_value());

  ValueGroup ends_discrete =
      ValueGroup::lex_sum({ValueGroup::p_divisible(2), ValueGroup::lex(1)});
  auto sp2 = ends_discrete.smallest_positive();
  REQUIRE(sp2.has_value());
  CHECK(*sp2 == el({0, 1}));

  ValueGroup ends_dense = ValueGroup::lex_sum({ValueGroup::lex(1), ValueGroup::p_divisible(2)});
  CHECK_FALSE(ends_dense.smallest_positive().has_value());
}

TEST_CASE("smallest positive is minimal against random positives") {
  Rng rng(2024);
  for (const ValueGroup& g :
       {ValueGroup::lex(2), ValueGroup::lex(3),
        ValueGroup::lex_sum({ValueGroup::p_divisible(2), ValueGroup::lex(1)})}) {
    auto sp = g.smallest_positive();
    REQUIRE(sp.has_value());
    CHECK(g.sign(*sp) == Ordering::greater);
    int found = 0;
    while (found < 1000) {
      GroupElement x = random_element(rng, g);
      if (g.sign(x) != Ordering::greater) continue;
      ++found;
      CHECK(g.compare(*sp, x) != Ordering::greater);
    }
  }
}

TEST_CASE("rational ranks") {
  CHECK(ValueGroup::lex(3).rational_rank() == 3);
  CHECK(ValueGroup::embedded(pi_oracle()).rational_rank() == 2);
  CHECK(ValueGroup::p_divisible(5).rational_rank() == 1);
  CHECK(ValueGroup::lex_sum({ValueGroup::lex(2), ValueGroup::p_divisible(2)}).rational_rank() ==
        3);
}

TEST_CASE("order is total and translation invariant on random triples") {
  Rng rng(77);
  std::vector<ValueGroup> groups = {
      ValueGroup::lex(3), ValueGroup::embedded(pi_oracle()), ValueGroup::p_divisible(2),
      ValueGroup::lex_sum({ValueGroup::embedded(pi_oracle()), ValueGroup::p_divisible(3)})};
  for (const auto& g : groups) {
    for (int i = 0; i < 1000; ++i) {
      GroupElement a = random_element(rng, g);
      GroupElement b = random_element(rng, g);
      GroupElement c = random_element(rng, g);
      Ordering ab = g.compare(a, b);
      // translation invariance
      CHECK(g.compare(ge_add(a, c), ge_add(b, c)) == ab);
      // antisymmetry
      Ordering ba = g.compare(b, a);
      CHECK(static_cast<int>(ab) == -static_cast<int>(ba));
      // transitivity on the <= relation
      Ordering bc = g.compare(b, c);
      if (ab != Ordering::greater && bc != Ordering::greater)
        CHECK(g.compare(a, c) != Ordering::greater);
    }
  }
}

TEST_CASE("group element arithmetic is exact") {
  ValueGroup g = ValueGroup::p_divisible(2);
  GroupElement a, b;
  a.coords.emplace_back(mpq_class(3, 4));
  b.coords.emplace_back(mpq_class(1, 8));
  GroupElement s = ge_add(a, b);
  CHECK(s.coords[0] == mpq_class(7, 8));
  CHECK(ge_sub(s, b) == a);
  CHECK(ge_is_zero(ge_sub(a, a)));
  CHECK(ge_scale(4, b).coords[0] == mpq_class(1, 2));
}
