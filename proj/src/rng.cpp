#include "valfrob/rng.hpp"

namespace valfrob {

namespace {

Fq random_fq(Rng& rng, const GroundField& f) {
  Fq c{};
  for (unsigned i = 0; i < f.k(); ++i)
    c.c[i] = static_cast<std::uint32_t>(rng.below(f.p()));
  return c;
}

}  // namespace

Polynomial random_polynomial(Rng& rng, const FieldRef& field, unsigned max_exp,
                             unsigned max_terms) {
  Polynomial p(field);
  unsigned terms = 1 + static_cast<unsigned>(rng.below(max_terms));
  ExpVec e(field->arity());
  for (unsigned t = 0; t < terms; ++t) {
    for (auto& x : e) x = static_cast<unsigned long>(rng.below(max_exp + 1));
    p.add_term(e, random_fq(rng, field->base()));
  }
  return p;
}

Polynomial random_nonzero_polynomial(Rng& rng, const FieldRef& field, unsigned max_exp,
                                     unsigned max_terms) {
  for (int tries = 0; tries < 64; ++tries) {
    Polynomial p = random_polynomial(rng, field, max_exp, max_terms);
    if (!p.is_zero()) return p;
  }
  return Polynomial::constant(field, mpz_class(1));
}

RationalFunction random_rational_function(Rng& rng, const FieldRef& field, unsigned max_exp,
                                          unsigned max_terms) {
  return RationalFunction(random_polynomial(rng, field, max_exp, max_terms),
                          random_nonzero_polynomial(rng, field, max_exp, max_terms));
}

}  // namespace valfrob
