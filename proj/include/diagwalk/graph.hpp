#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "diagwalk/arith.hpp"
#include "diagwalk/error.hpp"

namespace diagwalk {

inline constexpr std::size_t kMaxDenseOrder = std::size_t{1} << 12;

// 0/1 adjacency matrix without self-loops. Undirected graphs are checked
// for symmetry at construction.
class DenseGraph {
public:
  DenseGraph(std::size_t order, std::vector<std::uint8_t> adjacency, bool directed);

  std::size_t order() const noexcept { return order_; }
  bool directed() const noexcept { return directed_; }
  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * order_ + j] != 0; }
  std::span<const std::uint8_t> row(std::size_t i) const { return {adj_.data() + i * order_, order_}; }

  std::size_t out_degree(std::size_t i) const;
  // Unordered pairs for undirected graphs, arcs for directed ones.
  std::size_t edge_count() const;
  bool is_regular() const;

  // "i: j k l" per vertex.
  std::string adjacency_list() const;

private:
  std::size_t order_;
  std::vector<std::uint8_t> adj_;
  bool directed_;
};

using WalkCount = BigInt;
using BigMatrix = std::vector<std::vector<BigInt>>;

// Entry (i, j) of A^r with A^0 = I.
WalkCount walk_count_power(const DenseGraph& g, unsigned r, std::size_t i, std::size_t j);

// Row i of A^t for every t in 0..r, by repeated row-times-matrix products.
std::vector<std::vector<BigInt>> walk_rows(const DenseGraph& g, unsigned r, std::size_t i);

// A^r by iterated full matrix multiplication.
BigMatrix adjacency_power(const DenseGraph& g, unsigned r);

DenseGraph complete_graph(std::size_t m);

// Walks of length r in K_m between equal (same) or distinct endpoints.
WalkCount complete_walks(std::uint64_t m, unsigned r, bool same);

}  // namespace diagwalk
