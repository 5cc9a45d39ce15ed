#ifndef VALFROB_CLASSIFY_HPP
#define VALFROB_CLASSIFY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "valfrob/frob_split.hpp"
#include "valfrob/gauss.hpp"
#include "valfrob/series.hpp"
#include "valfrob/valuation.hpp"

namespace valfrob {

// A Noetherian local center of a valuation: its dimension and residue field
// are all the classifier consumes. `canonical` marks the standard localized
// polynomial-ring center of a monomial descriptor.
struct CenterDescriptor {
  unsigned dimension = 0;
  FieldRef residue_field;
  bool canonical = false;
};

struct MonomialDescriptor {
  MonomialValuation nu;
  std::string name;
};

struct GaussDescriptor {
  GaussValuation w;
  std::string name;
};

// Discrete valuation on a two-variable function field obtained by embedding
// into a power series field: first variable -> t, second -> t * p(t) for a
// seeded stream.
struct SeriesEmbeddingDescriptor {
  FieldRef field;
  std::uint64_t seed = 42;
  long precision = 256;
  std::string name;
};

// Rank-one valuation on a two-variable function field with declared value
// group Z[1/p] and residue field F_p, realized by the Hahn witness
// X -> t, Y -> sum t^(1 - p^-i).
struct HahnWitnessDescriptor {
  FieldRef field;
  std::string name;
};

using ValuationDescriptor =
    std::variant<MonomialDescriptor, GaussDescriptor, SeriesEmbeddingDescriptor,
                 HahnWitnessDescriptor>;

// Uniform classifier view of a descriptor.
struct DescriptorFacts {
  std::string name;
  std::uint32_t p = 0;
  mpz_class degree_K_Kp;     // [K:K^p]
  bool ambient_perfect = false;
  ValueGroup group;
  FieldRef residue_field;    // kappa_nu
  mpz_class residue_degree;  // [kappa:kappa^p]
  bool monomialized = false;
  std::string ambient;       // rendered field description
};

DescriptorFacts facts_of(const ValuationDescriptor& d);
const std::string& descriptor_name(const ValuationDescriptor& d);

// The standard center F_q[x...] localized at the positive-weight variables.
CenterDescriptor canonical_center(const MonomialValuation& nu);

struct Verdict {
  std::string value;  // yes / no / unknown
  std::string rule;
  std::string statement;
};

struct DefectCheck {
  mpz_class index_p_gamma;
  mpz_class residue_degree;
  mpz_class product;
  mpz_class field_degree;
  bool equal = false;
};

struct CenterCheck {
  int rational_rank = 0;
  int trdeg = 0;       // kappa_nu over kappa_R
  unsigned dim = 0;    // dim R
  bool equal = false;  // rank + trdeg == dim
};

struct FibreDimension {
  mpz_class dimension;  // dim over kappa^p of V/m^[p]
  bool maximal_ideal_finitely_generated = false;
};

mpz_class degree_K_Kp(const FieldDescriptor& k);
DefectCheck defect_identity(const DescriptorFacts& f);
// Throws on a violated dimension inequality (that is never a verdict).
CenterCheck abhyankar_center_check(const DescriptorFacts& f, const CenterDescriptor& r);
// Both sides of [K:K^p] = p^dim(R) [kappa_R:kappa_R^p].
struct CenterDegreeCheck {
  mpz_class lhs, rhs;
  bool equal = false;
};
CenterDegreeCheck center_degree_identity(const CenterDescriptor& r, const FieldDescriptor& k);
FibreDimension fibre_dimension(const DescriptorFacts& f);
Verdict f_finite_verdict(const DescriptorFacts& f);

struct SplitDecision {
  Verdict verdict;
  std::optional<SplittingWitness> witness;
};

struct ClassifyOptions {
  std::uint64_t seed = 42;
  unsigned samples = 100;
  bool parallel = true;
};

// Verdict tree, one rule fires:
//   1. Noetherian V (finitely generated discrete rank-one group):
//      split iff F-finite
//   2. F-finite: split
//   3. totally unramified over a non-perfect field: not split
//   4. verified monomialized descriptor over a perfect ground field: split,
//      with a fresh splitting witness from the claim suite
//   5. otherwise unknown
SplitDecision split_verdict(const ValuationDescriptor& d, const ClassifyOptions& opts = {});

struct ClassificationReport {
  std::string descriptor;
  std::string ambient;
  std::uint32_t p = 0;
  std::string group;
  mpz_class degree_K_Kp;
  mpz_class index_p_gamma;
  mpz_class residue_degree;
  mpz_class defect_product;
  bool defectless = false;
  mpz_class fibre_dim;
  bool maximal_ideal_finitely_generated = false;
  std::optional<bool> monomialized;  // monomial descriptors only
  std::optional<CenterCheck> center_check;
  std::optional<CenterDegreeCheck> center_degree;
  Verdict dvr;
  Verdict abhyankar;
  Verdict f_finite;
  Verdict frobenius_split;
  std::optional<SplittingWitness> witness;
  std::vector<std::string> notes;
  std::uint64_t seed = 0;
  unsigned samples = 0;
  long precision = 0;  // series descriptors record their cap
};

ClassificationReport classify(const ValuationDescriptor& d,
                              const std::optional<CenterDescriptor>& center = std::nullopt,
                              const ClassifyOptions& opts = {});

std::string render_report(const ClassificationReport& r);

}  // namespace valfrob

#endif
