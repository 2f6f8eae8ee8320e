#include "diagwalk/literals.hpp"

namespace diagwalk {

FieldElement parse_element(const FiniteField& field, const std::string& literal) {
  if (literal == "0") return field.zero();
  constexpr std::string_view prefix = "pow:";
  if (literal.rfind(prefix, 0) == 0) {
    const std::string digits = literal.substr(prefix.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw Error(Errc::ParseError, "expected pow:<nonnegative integer>, got '" + literal + "'");
    std::uint64_t e = 0;
    try {
      e = std::stoull(digits);
    } catch (const std::out_of_range&) {
      throw Error(Errc::ParseError, "exponent out of range in '" + literal + "'");
    }
    return field.omega_pow(static_cast<std::int64_t>(e % (field.order() - 1)));
  }
  const auto coeffs = parse_coefficients(literal);
  if (coeffs.size() != field.degree())
    throw Error(Errc::ParseError, "element '" + literal + "' needs exactly " + std::to_string(field.degree()) +
                                      " coefficients");
  for (auto c : coeffs)
    if (c >= field.characteristic())
      throw Error(Errc::ParseError, "coefficient " + std::to_string(c) + " not in [0, p) in '" + literal + "'");
  return field.from_coefficients(coeffs);
}

}  // namespace diagwalk
