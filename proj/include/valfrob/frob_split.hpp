#ifndef VALFROB_FROB_SPLIT_HPP
#define VALFROB_FROB_SPLIT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "valfrob/gauss.hpp"
#include "valfrob/valuation.hpp"

namespace valfrob {

// f = sum_beta c_beta^(p^e) x^beta over the monomial basis
// {x^beta : 0 <= beta_i <= p^e - 1}. Kunz freeness over a perfect ground
// field makes this decomposition exact and unique.
struct FrobDecomposition {
  unsigned e = 1;
  FieldRef field;
  std::map<ExpVec, Polynomial, ExpVecLess> components;  // beta -> c_beta, nonzero only
};

FrobDecomposition p_decompose(const Polynomial& f, unsigned e);
Polynomial recompose(const FrobDecomposition& d);

// The splitting determined by the monomial basis: keeps the coefficient of
// the basis element 1 and returns it as a p-th power (an element of A^p).
// Monomials with any exponent not divisible by p map to 0. Refuses
// descriptors that are not verified monomialized.
Polynomial eta_split(const Polynomial& f, const MonomialValuation& nu);

// K^(p^e)-linear extension of the monomial splitting to the valuation ring:
// for r = a/b with nu(a) >= nu(b) the image is phi(a b^(p^e - 1)) / b^(p^e).
// Errors when r lies outside the valuation ring.
RationalFunction extend_split(const RationalFunction& r, const MonomialValuation& nu,
                              unsigned e = 1);

// Checks nu(sum of decomposition terms) = inf of the individual term values,
// the stronger form behind the splitting bound. True is a theorem; false
// means a bug.
bool verify_inf_eq(const Polynomial& f, const MonomialValuation& nu);

// Checks eta(a) = 0 or nu(eta(a)) >= nu(a).
bool verify_claim(const Polynomial& a, const MonomialValuation& nu);

// Per-sample certificate of membership of the coordinates in the valuation
// ring.
struct FreeBasisCertificate {
  bool ok = false;
  std::vector<std::string> coordinate_values;  // rendered nu(r_i) or "zero"
  std::string failure;
};

struct FreeBasisReport {
  bool ok = false;
  std::vector<FreeBasisCertificate> per_sample;
};

// Verifies that each sample v of the valuation ring decomposes as
// v = sum r_i^(p^e) b_i with every nu(r_i) >= 0. The basis must span K over
// K^(p^e) (checked; |basis| = [K:K^(p^e)]).
FreeBasisReport verify_free_basis(const std::vector<RationalFunction>& samples,
                                  const std::vector<RationalFunction>& basis,
                                  const MonomialValuation& nu, unsigned e);

// Same contract over L(X) with the Gauss valuation; basis elements and
// samples are carried at a perfection level. Only e = 1 is supported here.
FreeBasisReport verify_free_basis(const std::vector<GaussValuation::Elem>& samples,
                                  const std::vector<GaussValuation::Elem>& basis,
                                  const GaussValuation& w);

// Result of running the claim suite on one monomialized descriptor.
struct SplittingWitness {
  std::string descriptor;
  unsigned samples = 0;
  std::uint64_t seed = 0;
  unsigned inf_eq_checked = 0;
  unsigned claim_checked = 0;
  unsigned extension_checked = 0;
  bool ok = false;
  std::string failure;
};

// Randomized sweep over the splitting laws: inf-equation, claim, linearity
// of the extension over p-th powers, extension landing in the ring,
// splitting of 1. Issues a witness only when every sample passes. Runs the
// samples in parallel when `parallel` is set; results are identical either
// way.
SplittingWitness run_claim_suite(const MonomialValuation& nu, unsigned samples,
                                 std::uint64_t seed, bool parallel = true);

}  // namespace valfrob

#endif
