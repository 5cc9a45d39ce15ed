#include "valfrob/field.hpp"

#include <algorithm>

#include "valfrob/errors.hpp"
#include "valfrob/polynomial.hpp"

namespace valfrob {

FieldDescriptor::FieldDescriptor(GroundField base, std::vector<std::string> vars,
                                 std::vector<std::string> perfected_vars)
    : base_(base), variables_(std::move(vars)), perfected_variables_(std::move(perfected_vars)) {
  std::vector<std::string> all = variables_;
  all.insert(all.end(), perfected_variables_.begin(), perfected_variables_.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw DomainError("duplicate variable name in field descriptor");
}

FieldRef FieldDescriptor::make(std::uint32_t p, std::uint32_t k, std::vector<std::string> vars) {
  return make(GroundField(p, k), std::move(vars));
}

FieldRef FieldDescriptor::make(GroundField base, std::vector<std::string> vars,
                               std::vector<std::string> perfected_vars) {
  return FieldRef(new FieldDescriptor(base, std::move(vars), std::move(perfected_vars)));
}

int FieldDescriptor::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return static_cast<int>(i);
  return -1;
}

mpz_class FieldDescriptor::degree_over_pth_powers() const {
  return pow_ui(mpz_class(base_.p()), static_cast<unsigned long>(variables_.size()));
}

}  // namespace valfrob
