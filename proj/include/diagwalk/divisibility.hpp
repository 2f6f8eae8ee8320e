#pragma once

#include <cstdint>
#include <set>
#include <string>

namespace diagwalk {

// Which sufficient conditions for b | (x^b - 1)/(x - 1), x = p^a, apply.
struct DivisibilityReport {
  std::uint32_t p = 2;
  std::uint32_t a = 1;
  std::uint32_t b = 1;
  bool k_integer = false;
  std::set<char> cases;  // subset of {'a', ..., 'f'}
  std::string notes;
};

// b | 1 + p^a + p^{2a} + ... + p^{(b-1)a}, evaluated exactly.
bool k_is_integer(std::uint32_t p, std::uint32_t a, std::uint32_t b);

// Same question through (p^{ab} - 1)/(p^a - 1) computed by big-integer division.
bool k_is_integer_by_quotient(std::uint32_t p, std::uint32_t a, std::uint32_t b);

DivisibilityReport remark_cases(std::uint32_t p, std::uint32_t a, std::uint32_t b);

std::string format_cases(const std::set<char>& cases);

}  // namespace diagwalk
