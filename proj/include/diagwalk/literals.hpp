#pragma once

#include <string>

#include "diagwalk/finite_field.hpp"

namespace diagwalk {

// "0" | "pow:<e>" (omega^e) | "c0,c1,...,c_{m-1}" (coefficients ascending by degree).
FieldElement parse_element(const FiniteField& field, const std::string& literal);

}  // namespace diagwalk
