#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "diagwalk/graph.hpp"

namespace diagwalk {

// A set of distinct nonzero 0/1 tuples of a common arity.
class NepsBasis {
public:
  using Tuple = std::vector<std::uint8_t>;

  NepsBasis(std::size_t arity, std::vector<Tuple> tuples);

  // Semicolon-separated bit strings: "11", "10;01", "11;10;01".
  static NepsBasis parse(const std::string& literal);
  // {e_1, ..., e_n}
  static NepsBasis standard(std::size_t arity);

  std::size_t arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return tuples_.size(); }
  const std::vector<Tuple>& tuples() const noexcept { return tuples_; }

  std::string to_string() const;

private:
  std::size_t arity_;
  std::vector<Tuple> tuples_;
};

// Entry t is true iff the two endpoints agree in coordinate t.
using AgreementPattern = std::vector<bool>;

enum class NepsEval {
  Aggregated,  // dynamic programming over column-sum vectors
  Naive,       // literal sum over all |B|^r sequences
};

inline constexpr std::uint64_t kMaxNaiveSequences = 50'000'000;

// Walk counts of one factor between a fixed pair of vertices, indexed by length.
using WalkSeries = std::vector<BigInt>;

// A factor whose walk counts depend only on whether the endpoints coincide.
struct WalkTable {
  WalkSeries same;
  WalkSeries differ;

  const WalkSeries& select(bool agree) const { return agree ? same : differ; }
};

DenseGraph neps_construct(std::span<const DenseGraph> factors, const NepsBasis& basis,
                          std::size_t max_order = kMaxDenseOrder);

// Mixed-radix decomposition of a product vertex, leftmost factor most significant.
std::vector<std::size_t> product_coordinates(std::span<const std::size_t> sizes, std::size_t vertex);
std::size_t product_index(std::span<const std::size_t> sizes, std::span<const std::size_t> coords);

AgreementPattern agreement_pattern(std::span<const std::size_t> sizes, std::size_t vi, std::size_t vj);

// Sum over (beta_1..beta_r) in B^r of prod_t series[t][beta_1t + ... + beta_rt].
WalkCount neps_walks(std::span<const WalkSeries> factor_series, const NepsBasis& basis, unsigned r,
                     NepsEval eval = NepsEval::Aggregated);

WalkCount neps_walks(std::span<const WalkTable> factor_tables, const NepsBasis& basis, unsigned r,
                     const AgreementPattern& pattern, NepsEval eval = NepsEval::Aggregated);

// Vertex-level wrapper: factor series come from matrix powers of each factor.
WalkCount neps_walks_between(std::span<const DenseGraph> factors, const NepsBasis& basis, unsigned r,
                             std::size_t vi, std::size_t vj, NepsEval eval = NepsEval::Aggregated);

WalkTable complete_walk_table(std::uint64_t m, unsigned r);

WalkCount neps_complete_walks(std::span<const std::uint64_t> sizes, const NepsBasis& basis, unsigned r,
                              const AgreementPattern& pattern, NepsEval eval = NepsEval::Aggregated);

// Cartesian sum G_1 + ... + G_n by the multinomial sum over weak compositions of r.
WalkCount cartesian_sum_walks(std::span<const WalkSeries> factor_series, unsigned r);
WalkCount cartesian_sum_walks(std::span<const WalkTable> factor_tables, unsigned r,
                              const AgreementPattern& pattern);

// H(b, q) = K_q + ... + K_q (b terms); `agree[t]` marks equal coordinates.
WalkCount hamming_walks(std::uint32_t b, std::uint64_t q, unsigned r, const AgreementPattern& agree);

}  // namespace diagwalk
