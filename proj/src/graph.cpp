#include "diagwalk/graph.hpp"

#include <sstream>

namespace diagwalk {

DenseGraph::DenseGraph(std::size_t order, std::vector<std::uint8_t> adjacency, bool directed)
    : order_(order), adj_(std::move(adjacency)), directed_(directed) {
  if (order_ == 0) throw Error(Errc::BadParameters, "graph needs at least one vertex");
  if (order_ > kMaxDenseOrder)
    throw Error(Errc::GraphTooLarge, std::to_string(order_) + " vertices exceeds " + std::to_string(kMaxDenseOrder));
  if (adj_.size() != order_ * order_) throw Error(Errc::BadParameters, "adjacency matrix has the wrong size");
  for (std::size_t i = 0; i < order_; ++i) {
    if (adj_[i * order_ + i] != 0) throw Error(Errc::BadParameters, "self-loop at vertex " + std::to_string(i));
    for (std::size_t j = 0; j < order_; ++j) {
      auto& v = adj_[i * order_ + j];
      if (v > 1) throw Error(Errc::BadParameters, "adjacency entries must be 0 or 1");
      if (!directed_ && v != adj_[j * order_ + i])
        throw Error(Errc::BadParameters, "undirected graph with asymmetric adjacency");
    }
  }
}

std::size_t DenseGraph::out_degree(std::size_t i) const {
  std::size_t d = 0;
  for (auto v : row(i)) d += v;
  return d;
}

std::size_t DenseGraph::edge_count() const {
  std::size_t arcs = 0;
  for (std::size_t i = 0; i < order_; ++i) arcs += out_degree(i);
  return directed_ ? arcs : arcs / 2;
}

bool DenseGraph::is_regular() const {
  const std::size_t d = out_degree(0);
  for (std::size_t i = 1; i < order_; ++i)
    if (out_degree(i) != d) return false;
  return true;
}

std::string DenseGraph::adjacency_list() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < order_; ++i) {
    out << i << ':';
    for (std::size_t j = 0; j < order_; ++j)
      if (adjacent(i, j)) out << ' ' << j;
    out << '\n';
  }
  return out.str();
}

namespace {

void check_vertex(const DenseGraph& g, std::size_t v) {
  if (v >= g.order())
    throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " not in [0, " + std::to_string(g.order()) + ")");
}

std::vector<BigInt> step(const DenseGraph& g, const std::vector<BigInt>& row) {
  const std::size_t n = g.order();
  std::vector<BigInt> next(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (row[k].is_zero()) continue;
    const auto adj = g.row(k);
    for (std::size_t j = 0; j < n; ++j)
      if (adj[j]) next[j] += row[k];
  }
  return next;
}

}  // namespace

std::vector<std::vector<BigInt>> walk_rows(const DenseGraph& g, unsigned r, std::size_t i) {
  check_vertex(g, i);
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(r + 1);
  rows.emplace_back(g.order());
  rows[0][i] = 1;
  for (unsigned t = 1; t <= r; ++t) rows.push_back(step(g, rows.back()));
  return rows;
}

WalkCount walk_count_power(const DenseGraph& g, unsigned r, std::size_t i, std::size_t j) {
  check_vertex(g, j);
  return walk_rows(g, r, i).back()[j];
}

BigMatrix adjacency_power(const DenseGraph& g, unsigned r) {
  const std::size_t n = g.order();
  BigMatrix power(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
  for (unsigned t = 0; t < r; ++t)
    for (auto& row : power) row = step(g, row);
  return power;
}

DenseGraph complete_graph(std::size_t m) {
  std::vector<std::uint8_t> adj(m * m, 1);
  for (std::size_t i = 0; i < m; ++i) adj[i * m + i] = 0;
  return DenseGraph(m, std::move(adj), false);
}

WalkCount complete_walks(std::uint64_t m, unsigned r, bool same) {
  if (m == 0) throw Error(Errc::BadParameters, "complete graph needs at least one vertex");
  const BigInt base = m - 1;
  BigInt numerator;
  if (same) {
    if (r == 0) return 1;
    // (m-1) * ((m-1)^{r-1} - (-1)^{r-1}) / m
    numerator = base * (ipow(base, r - 1) - ((r - 1) % 2 == 0 ? 1 : -1));
  } else {
    numerator = ipow(base, r) - (r % 2 == 0 ? 1 : -1);
  }
  if (numerator % m != 0)
    throw Error(Errc::BadParameters, "internal: complete-graph walk numerator not divisible by m");
  return numerator / m;
}

}  // namespace diagwalk
