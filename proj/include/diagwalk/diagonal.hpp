#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "diagwalk/arith.hpp"
#include "diagwalk/divisibility.hpp"
#include "diagwalk/finite_field.hpp"
#include "diagwalk/gp_graph.hpp"

namespace diagwalk {

using SolutionCount = BigInt;

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

enum class CountMode { Nonzero, All };
enum class CountMethod { Formula, Brute, Convolution, Walk };

std::string_view to_string(CountMode mode) noexcept;
std::string_view to_string(CountMethod method) noexcept;
std::optional<CountMethod> parse_method(std::string_view text);

// Raised when (p^{ab} - 1) / (b(p^a - 1)) is not an integer.
class KNotIntegerError : public Error {
public:
  explicit KNotIntegerError(DivisibilityReport report);
  const DivisibilityReport& report() const noexcept { return report_; }

private:
  DivisibilityReport report_;
};

// k = (p^{ab} - 1) / (b(p^a - 1)); throws KNotIntegerError.
std::uint64_t diagonal_exponent(std::uint32_t p, std::uint32_t a, std::uint32_t b);

// x_1^k + ... + x_n^k = alpha over F_{p^{ab}} with k = (p^{ab}-1)/(b(p^a-1)).
class DiagonalSystem {
public:
  DiagonalSystem(std::uint32_t p, std::uint32_t a, std::uint32_t b, const FieldOptions& options = {});

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t a() const noexcept { return a_; }
  std::uint32_t b() const noexcept { return b_; }
  std::uint64_t k() const noexcept { return k_; }
  std::uint32_t q() const noexcept { return field_.order(); }
  const FiniteField& field() const noexcept { return field_; }
  const HammingView& view() const noexcept { return view_; }

  // N_r: solutions in (F^*)^r, by the Hamming walk formula.
  SolutionCount count_nonzero_formula(const FieldElement& alpha, unsigned r) const;
  // M_s: solutions in F^s, [alpha = 0] + sum_{i=1}^{s} C(s, i) N_i.
  SolutionCount count_all_formula(const FieldElement& alpha, unsigned s) const;

  SolutionCount count(const FieldElement& alpha, unsigned n, CountMode mode, CountMethod method,
                      std::uint64_t enumeration_cap = kDefaultEnumerationCap) const;

private:
  std::uint32_t p_;
  std::uint32_t a_;
  std::uint32_t b_;
  std::uint64_t k_;
  FiniteField field_;
  HammingView view_;
};

// k^s * w(s, x, y) on the explicitly built GP-graph.
SolutionCount walk_solution_count(const FiniteField& field, std::uint64_t k, const FieldElement& x,
                                  const FieldElement& y, unsigned s);
SolutionCount walk_solution_count(const DenseGraph& gp, const FiniteField& field, std::uint64_t k,
                                  const FieldElement& x, const FieldElement& y, unsigned s);
// k^s * w(s, x, y) for every y, indexed by element index.
std::vector<SolutionCount> walk_solution_counts(const DenseGraph& gp, std::uint64_t k, const FieldElement& x,
                                                unsigned s);

// Literal enumeration of all tuples; entry alpha of the histogram counts
// tuples with x_1^k + ... + x_r^k = alpha.
std::vector<SolutionCount> brute_force_histogram(const FiniteField& field, std::uint64_t k, unsigned r,
                                                 bool restrict_nonzero,
                                                 std::uint64_t cap = kDefaultEnumerationCap);
SolutionCount brute_force_count(const FiniteField& field, std::uint64_t k, const FieldElement& alpha, unsigned r,
                                bool restrict_nonzero, std::uint64_t cap = kDefaultEnumerationCap);

// r-fold additive convolution of f(beta) = k [beta in R_k] (+ [beta = 0] when zeros are allowed).
std::vector<SolutionCount> convolution_counts(const FiniteField& field, std::uint64_t k, unsigned r,
                                              bool restrict_nonzero);
SolutionCount convolution_count(const FiniteField& field, std::uint64_t k, const FieldElement& alpha, unsigned r,
                                bool restrict_nonzero);

}  // namespace diagwalk
