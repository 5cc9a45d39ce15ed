#ifndef VALFROB_GALLERY_HPP
#define VALFROB_GALLERY_HPP

#include <functional>
#include <map>

#include "valfrob/classify.hpp"

namespace valfrob {

// One curated descriptor with the report values it must reproduce.
// `origin` records where an expectation comes from: "closed_form" for values
// fixed by the classification facts themselves, "enumeration" for values
// frozen from an independent enumeration oracle.
struct GalleryEntry {
  struct Expectation {
    std::string field;
    std::string expected;
    std::string origin;
  };

  std::string name;
  ValuationDescriptor descriptor;
  std::optional<CenterDescriptor> center;
  std::vector<Expectation> expectations;
  // extra machine checks that do not fit the report diff (embedding orders,
  // witness values); returns a diagnostic on failure
  std::function<std::optional<std::string>()> extra_check;
};

struct GalleryResult {
  std::string name;
  bool ok = false;
  std::vector<std::string> diffs;  // "field: expected X, got Y"
};

// Flat string view of a report, the basis for gallery diffs.
std::map<std::string, std::string> report_fields(const ClassificationReport& r);

std::vector<GalleryEntry> builtin_gallery();
GalleryResult run_entry(const GalleryEntry& e, const ClassifyOptions& opts);
std::vector<GalleryResult> run_gallery(const ClassifyOptions& opts);

// Named monomial descriptors reused by tests and the verification sweeps.
MonomialValuation lex_valuation(std::uint32_t p, unsigned n);
MonomialValuation blowup_pi_monomialized(std::uint32_t p);
MonomialValuation blowup_pi_original(std::uint32_t p);

}  // namespace valfrob

#endif
