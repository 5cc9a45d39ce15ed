#ifndef VALFROB_DESCRIPTOR_IO_HPP
#define VALFROB_DESCRIPTOR_IO_HPP

#include <string>

#include <json.hpp>

#include "valfrob/classify.hpp"

namespace valfrob {

using Json = nlohmann::ordered_json;

// Value group descriptors:
//   {"kind":"lex","rank":d}
//   {"kind":"embedded","rank":2,"irrational":"pi"}
//   {"kind":"p_divisible"}
//   {"kind":"lex_sum","components":[...]}
ValueGroup group_from_json(const Json& j, std::uint32_t p);
Json group_to_json(const ValueGroup& g);

// Coordinates as an array; integers for discrete factors, integers or
// "a/b" strings for p-divisible ones.
GroupElement element_from_json(const Json& j, const ValueGroup& g);
Json element_to_json(const GroupElement& e);

// Valuation descriptors:
//   {"kind":"monomial","field":{"p":2,"k":1,"variables":["x","y"]},
//    "group":{...},"weights":{"x":[1,0],...},
//    "parameters":["x"],"residue_vars":["y"],"name":"..."}
//   {"kind":"gauss","p":2,"variant":"group_first"|"z_first"}
//   {"kind":"series_embedding","p":2,"seed":42,"precision":256}
//   {"kind":"hahn","p":2}
ValuationDescriptor descriptor_from_json(const Json& j);
Json descriptor_to_json(const ValuationDescriptor& d);
ValuationDescriptor load_descriptor(const std::string& path);

// {"dimension":2,"residue_field":{"p":2,"k":1,"variables":[]},"canonical":false}
CenterDescriptor center_from_json(const Json& j);
CenterDescriptor load_center(const std::string& path);

Json report_to_json(const ClassificationReport& r);

}  // namespace valfrob

#endif
