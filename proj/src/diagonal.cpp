#include "diagwalk/diagonal.hpp"

#include <functional>

#include "diagwalk/combinatorics.hpp"
#include "diagwalk/neps.hpp"

namespace diagwalk {

std::string_view to_string(CountMode mode) noexcept { return mode == CountMode::Nonzero ? "nonzero" : "all"; }

std::string_view to_string(CountMethod method) noexcept {
  switch (method) {
    case CountMethod::Formula: return "formula";
    case CountMethod::Brute: return "brute";
    case CountMethod::Convolution: return "convolution";
    case CountMethod::Walk: return "walk";
  }
  return "formula";
}

std::optional<CountMethod> parse_method(std::string_view text) {
  for (auto m : {CountMethod::Formula, CountMethod::Brute, CountMethod::Convolution, CountMethod::Walk})
    if (to_string(m) == text) return m;
  return std::nullopt;
}

KNotIntegerError::KNotIntegerError(DivisibilityReport report)
    : Error(Errc::KNotInteger, "k = (p^ab - 1)/(b(p^a - 1)) is not an integer for p=" + std::to_string(report.p) +
                                   ", a=" + std::to_string(report.a) + ", b=" + std::to_string(report.b)),
      report_(std::move(report)) {}

std::uint64_t diagonal_exponent(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
  if (b < 2) throw Error(Errc::BadParameters, "b must be greater than 1");
  if (!k_is_integer(p, a, b)) throw KNotIntegerError(remark_cases(p, a, b));
  std::uint64_t x = 0;
  std::uint64_t q = 0;
  if (!checked_pow(p, a, std::uint64_t{1} << 62, x) || !checked_pow(x, b, std::uint64_t{1} << 62, q))
    throw Error(Errc::BadParameters, "p^ab too large");
  return (q - 1) / (b * (x - 1));
}

DiagonalSystem::DiagonalSystem(std::uint32_t p, std::uint32_t a, std::uint32_t b, const FieldOptions& options)
    : p_(p),
      a_(a),
      b_(b),
      k_(diagonal_exponent(p, a, b)),
      field_(build_field(p, a * b, options)),
      view_(build_hamming_view(field_, k_, a, b)) {}

SolutionCount DiagonalSystem::count_nonzero_formula(const FieldElement& alpha, unsigned r) const {
  const auto coords = view_.coordinates(alpha);
  const auto zeros = zero_pattern(coords);
  // [alpha]_i = 0 is agreement with [0] in coordinate i.
  const AgreementPattern pattern(zeros.begin(), zeros.end());
  const BigInt walks = hamming_walks(b_, view_.alphabet(), r, pattern);
  return ipow(BigInt(k_), r) * walks;
}

SolutionCount DiagonalSystem::count_all_formula(const FieldElement& alpha, unsigned s) const {
  SolutionCount total = alpha.is_zero() ? 1 : 0;
  for (unsigned i = 1; i <= s; ++i) total += binomial(s, i) * count_nonzero_formula(alpha, i);
  return total;
}

SolutionCount DiagonalSystem::count(const FieldElement& alpha, unsigned n, CountMode mode, CountMethod method,
                                    std::uint64_t enumeration_cap) const {
  const bool nonzero = mode == CountMode::Nonzero;
  switch (method) {
    case CountMethod::Formula:
      return nonzero ? count_nonzero_formula(alpha, n) : count_all_formula(alpha, n);
    case CountMethod::Brute:
      return brute_force_count(field_, k_, alpha, n, nonzero, enumeration_cap);
    case CountMethod::Convolution:
      return convolution_count(field_, k_, alpha, n, nonzero);
    case CountMethod::Walk: {
      const DenseGraph gp = gp_graph(field_, k_);
      if (nonzero) return walk_solution_count(gp, field_, k_, field_.zero(), alpha, n);
      SolutionCount total = alpha.is_zero() ? 1 : 0;
      for (unsigned i = 1; i <= n; ++i)
        total += binomial(n, i) * walk_solution_count(gp, field_, k_, field_.zero(), alpha, i);
      return total;
    }
  }
  throw Error(Errc::BadParameters, "unknown counting method");
}

SolutionCount walk_solution_count(const DenseGraph& gp, const FiniteField& field, std::uint64_t k,
                                  const FieldElement& x, const FieldElement& y, unsigned s) {
  if (!field.contains(x) || !field.contains(y)) throw Error(Errc::MixedFields, "endpoints must lie in the field");
  return ipow(BigInt(k), s) * walk_count_power(gp, s, x.index(), y.index());
}

SolutionCount walk_solution_count(const FiniteField& field, std::uint64_t k, const FieldElement& x,
                                  const FieldElement& y, unsigned s) {
  return walk_solution_count(gp_graph(field, k), field, k, x, y, s);
}

std::vector<SolutionCount> walk_solution_counts(const DenseGraph& gp, std::uint64_t k, const FieldElement& x,
                                                unsigned s) {
  auto row = walk_rows(gp, s, x.index()).back();
  const BigInt scale = ipow(BigInt(k), s);
  for (auto& v : row) v *= scale;
  return row;
}

std::vector<SolutionCount> brute_force_histogram(const FiniteField& field, std::uint64_t k, unsigned r,
                                                 bool restrict_nonzero, std::uint64_t cap) {
  const std::uint32_t q = field.order();
  if (k == 0 || (q - 1) % k != 0)
    throw Error(Errc::KDoesNotDivide, "k=" + std::to_string(k) + " does not divide q-1=" + std::to_string(q - 1));
  std::vector<std::uint32_t> powers;
  for (std::uint32_t x = restrict_nonzero ? 1 : 0; x < q; ++x) powers.push_back(field.pow_index(x, k));
  std::uint64_t tuples = 0;
  if (!checked_pow(powers.size(), r, cap, tuples))
    throw Error(Errc::EnumerationTooLarge, std::to_string(powers.size()) + "^" + std::to_string(r) +
                                               " tuples exceeds the enumeration cap " + std::to_string(cap));

  std::vector<std::uint64_t> hist(q, 0);
  if (r == 0) {
    hist[0] = 1;
  } else {
    std::function<void(unsigned, std::uint32_t)> descend = [&](unsigned depth, std::uint32_t partial) {
      if (depth + 1 == r) {
        for (std::uint32_t pw : powers) ++hist[field.add_index(partial, pw)];
        return;
      }
      for (std::uint32_t pw : powers) descend(depth + 1, field.add_index(partial, pw));
    };
    descend(0, 0);
  }
  return {hist.begin(), hist.end()};
}

SolutionCount brute_force_count(const FiniteField& field, std::uint64_t k, const FieldElement& alpha, unsigned r,
                                bool restrict_nonzero, std::uint64_t cap) {
  if (!field.contains(alpha)) throw Error(Errc::MixedFields, "alpha must lie in the field");
  return brute_force_histogram(field, k, r, restrict_nonzero, cap)[alpha.index()];
}

std::vector<SolutionCount> convolution_counts(const FiniteField& field, std::uint64_t k, unsigned r,
                                              bool restrict_nonzero) {
  const ResidueSet residues = kth_power_residues(field, k);
  const std::uint32_t q = field.order();
  // Support of f with weights: each residue has exactly k k-th roots.
  std::vector<std::pair<std::uint32_t, std::uint64_t>> f;
  if (!restrict_nonzero) f.emplace_back(0, 1);
  for (std::uint32_t beta : residues.members()) f.emplace_back(beta, k);

  std::vector<SolutionCount> g(q);
  g[0] = 1;
  for (unsigned step = 0; step < r; ++step) {
    std::vector<SolutionCount> next(q);
    for (std::uint32_t gamma = 0; gamma < q; ++gamma) {
      if (g[gamma].is_zero()) continue;
      for (const auto& [beta, weight] : f) next[field.add_index(gamma, beta)] += g[gamma] * weight;
    }
    g = std::move(next);
  }
  return g;
}

SolutionCount convolution_count(const FiniteField& field, std::uint64_t k, const FieldElement& alpha, unsigned r,
                                bool restrict_nonzero) {
  if (!field.contains(alpha)) throw Error(Errc::MixedFields, "alpha must lie in the field");
  return convolution_counts(field, k, r, restrict_nonzero)[alpha.index()];
}

}  // namespace diagwalk
