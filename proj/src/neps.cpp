#include "diagwalk/neps.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "diagwalk/combinatorics.hpp"

namespace diagwalk {

NepsBasis::NepsBasis(std::size_t arity, std::vector<Tuple> tuples) : arity_(arity), tuples_(std::move(tuples)) {
  if (arity_ == 0) throw Error(Errc::InvalidBasis, "basis arity must be at least 1");
  if (tuples_.empty()) throw Error(Errc::InvalidBasis, "basis must contain at least one tuple");
  std::set<Tuple> seen;
  for (const auto& t : tuples_) {
    if (t.size() != arity_) throw Error(Errc::InvalidBasis, "tuple length differs from basis arity");
    if (std::any_of(t.begin(), t.end(), [](std::uint8_t v) { return v > 1; }))
      throw Error(Errc::InvalidBasis, "tuple entries must be 0 or 1");
    // The zero tuple would make every vertex adjacent to itself.
    if (std::all_of(t.begin(), t.end(), [](std::uint8_t v) { return v == 0; }))
      throw Error(Errc::InvalidBasis, "the all-zero tuple is not allowed");
    if (!seen.insert(t).second) throw Error(Errc::InvalidBasis, "duplicate tuple in basis");
  }
}

NepsBasis NepsBasis::parse(const std::string& literal) {
  std::vector<Tuple> tuples;
  std::stringstream in(literal);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.empty()) throw Error(Errc::ParseError, "empty tuple in basis '" + literal + "'");
    Tuple t;
    for (char c : item) {
      if (c != '0' && c != '1') throw Error(Errc::ParseError, "basis tuples are bit strings: '" + item + "'");
      t.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    tuples.push_back(std::move(t));
  }
  if (tuples.empty() || literal.back() == ';') throw Error(Errc::ParseError, "bad basis literal '" + literal + "'");
  const std::size_t arity = tuples.front().size();
  return NepsBasis(arity, std::move(tuples));
}

NepsBasis NepsBasis::standard(std::size_t arity) {
  std::vector<Tuple> tuples;
  for (std::size_t i = 0; i < arity; ++i) {
    Tuple t(arity, 0);
    t[i] = 1;
    tuples.push_back(std::move(t));
  }
  return NepsBasis(arity, std::move(tuples));
}

std::string NepsBasis::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < tuples_.size(); ++i) {
    if (i > 0) out += ';';
    for (auto v : tuples_[i]) out += static_cast<char>('0' + v);
  }
  return out;
}

std::vector<std::size_t> product_coordinates(std::span<const std::size_t> sizes, std::size_t vertex) {
  std::vector<std::size_t> coords(sizes.size());
  for (std::size_t t = sizes.size(); t-- > 0;) {
    coords[t] = vertex % sizes[t];
    vertex /= sizes[t];
  }
  return coords;
}

std::size_t product_index(std::span<const std::size_t> sizes, std::span<const std::size_t> coords) {
  std::size_t index = 0;
  for (std::size_t t = 0; t < sizes.size(); ++t) {
    if (coords[t] >= sizes[t]) throw Error(Errc::VertexOutOfRange, "coordinate outside factor");
    index = index * sizes[t] + coords[t];
  }
  return index;
}

AgreementPattern agreement_pattern(std::span<const std::size_t> sizes, std::size_t vi, std::size_t vj) {
  const auto ci = product_coordinates(sizes, vi);
  const auto cj = product_coordinates(sizes, vj);
  AgreementPattern out(sizes.size());
  for (std::size_t t = 0; t < sizes.size(); ++t) out[t] = ci[t] == cj[t];
  return out;
}

namespace {

std::size_t checked_product(std::span<const std::size_t> sizes, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t s : sizes) {
    if (s == 0) throw Error(Errc::BadParameters, "factor with no vertices");
    if (total > cap / s)
      throw Error(Errc::ProductTooLarge, "product graph exceeds " + std::to_string(cap) + " vertices");
    total *= s;
  }
  return total;
}

void check_series(std::span<const WalkSeries> series, const NepsBasis& basis, unsigned r) {
  if (series.size() != basis.arity())
    throw Error(Errc::ArityMismatch, std::to_string(series.size()) + " factors for a basis of arity " +
                                         std::to_string(basis.arity()));
  for (const auto& s : series)
    if (s.size() < std::size_t{r} + 1)
      throw Error(Errc::LengthTableTooShort, "walk table covers lengths < " + std::to_string(s.size()) +
                                                 ", need up to " + std::to_string(r));
}

BigInt product_term(std::span<const WalkSeries> series, std::span<const unsigned> sums) {
  BigInt term = 1;
  for (std::size_t t = 0; t < series.size(); ++t) {
    term *= series[t][sums[t]];
    if (term.is_zero()) break;
  }
  return term;
}

WalkCount aggregated(std::span<const WalkSeries> series, const NepsBasis& basis, unsigned r) {
  const std::size_t n = basis.arity();
  // Column-sum vector -> number of sequences in B^step reaching it.
  std::map<std::vector<unsigned>, BigInt> states;
  states.emplace(std::vector<unsigned>(n, 0), 1);
  for (unsigned step = 0; step < r; ++step) {
    std::map<std::vector<unsigned>, BigInt> next;
    for (const auto& [sums, count] : states) {
      for (const auto& beta : basis.tuples()) {
        auto moved = sums;
        for (std::size_t t = 0; t < n; ++t) moved[t] += beta[t];
        next[std::move(moved)] += count;
      }
    }
    states = std::move(next);
  }
  WalkCount total = 0;
  for (const auto& [sums, count] : states) total += count * product_term(series, sums);
  return total;
}

WalkCount naive(std::span<const WalkSeries> series, const NepsBasis& basis, unsigned r) {
  const std::size_t n = basis.arity();
  const std::size_t width = basis.size();
  std::uint64_t sequences = 1;
  if (!checked_pow(width, r, kMaxNaiveSequences, sequences))
    throw Error(Errc::EnumerationTooLarge, "|B|^r exceeds " + std::to_string(kMaxNaiveSequences));
  std::vector<std::size_t> choice(r, 0);
  WalkCount total = 0;
  std::vector<unsigned> sums(n);
  for (std::uint64_t s = 0; s < sequences; ++s) {
    std::fill(sums.begin(), sums.end(), 0u);
    for (unsigned l = 0; l < r; ++l)
      for (std::size_t t = 0; t < n; ++t) sums[t] += basis.tuples()[choice[l]][t];
    total += product_term(series, sums);
    for (unsigned l = 0; l < r; ++l) {
      if (++choice[l] < width) break;
      choice[l] = 0;
    }
  }
  return total;
}

std::vector<WalkSeries> select_series(std::span<const WalkTable> tables, const AgreementPattern& pattern) {
  if (pattern.size() != tables.size())
    throw Error(Errc::ArityMismatch, "agreement pattern length differs from the number of factors");
  std::vector<WalkSeries> series;
  series.reserve(tables.size());
  for (std::size_t t = 0; t < tables.size(); ++t) series.push_back(tables[t].select(pattern[t]));
  return series;
}

}  // namespace

DenseGraph neps_construct(std::span<const DenseGraph> factors, const NepsBasis& basis, std::size_t max_order) {
  if (factors.size() != basis.arity())
    throw Error(Errc::ArityMismatch, std::to_string(factors.size()) + " factors for a basis of arity " +
                                         std::to_string(basis.arity()));
  std::vector<std::size_t> sizes;
  bool directed = false;
  for (const auto& f : factors) {
    sizes.push_back(f.order());
    directed = directed || f.directed();
  }
  const std::size_t total = checked_product(sizes, std::min(max_order, kMaxDenseOrder));

  std::vector<std::vector<std::size_t>> coords(total);
  for (std::size_t v = 0; v < total; ++v) coords[v] = product_coordinates(sizes, v);

  std::vector<std::uint8_t> adj(total * total, 0);
  for (std::size_t x = 0; x < total; ++x) {
    for (std::size_t y = 0; y < total; ++y) {
      for (const auto& beta : basis.tuples()) {
        bool ok = true;
        for (std::size_t t = 0; t < sizes.size() && ok; ++t) {
          const std::size_t a = coords[x][t];
          const std::size_t b = coords[y][t];
          ok = beta[t] == 0 ? a == b : factors[t].adjacent(a, b);
        }
        if (ok) {
          adj[x * total + y] = 1;
          break;
        }
      }
    }
  }
  return DenseGraph(total, std::move(adj), directed);
}

WalkCount neps_walks(std::span<const WalkSeries> factor_series, const NepsBasis& basis, unsigned r, NepsEval eval) {
  check_series(factor_series, basis, r);
  return eval == NepsEval::Aggregated ? aggregated(factor_series, basis, r) : naive(factor_series, basis, r);
}

WalkCount neps_walks(std::span<const WalkTable> factor_tables, const NepsBasis& basis, unsigned r,
                     const AgreementPattern& pattern, NepsEval eval) {
  const auto series = select_series(factor_tables, pattern);
  return neps_walks(series, basis, r, eval);
}

WalkCount neps_walks_between(std::span<const DenseGraph> factors, const NepsBasis& basis, unsigned r,
                             std::size_t vi, std::size_t vj, NepsEval eval) {
  if (factors.size() != basis.arity())
    throw Error(Errc::ArityMismatch, "factor count differs from basis arity");
  std::vector<std::size_t> sizes;
  for (const auto& f : factors) sizes.push_back(f.order());
  const std::size_t total = checked_product(sizes, std::numeric_limits<std::size_t>::max());
  if (vi >= total || vj >= total) throw Error(Errc::VertexOutOfRange, "vertex outside the product graph");
  const auto ci = product_coordinates(sizes, vi);
  const auto cj = product_coordinates(sizes, vj);
  std::vector<WalkSeries> series;
  for (std::size_t t = 0; t < factors.size(); ++t) {
    const auto rows = walk_rows(factors[t], r, ci[t]);
    WalkSeries s;
    for (const auto& row : rows) s.push_back(row[cj[t]]);
    series.push_back(std::move(s));
  }
  return neps_walks(series, basis, r, eval);
}

WalkTable complete_walk_table(std::uint64_t m, unsigned r) {
  WalkTable table;
  for (unsigned l = 0; l <= r; ++l) {
    table.same.push_back(complete_walks(m, l, true));
    table.differ.push_back(complete_walks(m, l, false));
  }
  return table;
}

WalkCount neps_complete_walks(std::span<const std::uint64_t> sizes, const NepsBasis& basis, unsigned r,
                              const AgreementPattern& pattern, NepsEval eval) {
  std::vector<WalkTable> tables;
  for (auto m : sizes) tables.push_back(complete_walk_table(m, r));
  return neps_walks(tables, basis, r, pattern, eval);
}

WalkCount cartesian_sum_walks(std::span<const WalkSeries> factor_series, unsigned r) {
  if (factor_series.empty()) throw Error(Errc::ArityMismatch, "cartesian sum needs at least one factor");
  for (const auto& s : factor_series)
    if (s.size() < std::size_t{r} + 1)
      throw Error(Errc::LengthTableTooShort, "walk table does not reach length " + std::to_string(r));
  WalkCount total = 0;
  for_each_weak_composition(static_cast<unsigned>(factor_series.size()), r, [&](std::span<const unsigned> parts) {
    BigInt term = 1;
    for (std::size_t t = 0; t < parts.size() && !term.is_zero(); ++t) term *= factor_series[t][parts[t]];
    if (!term.is_zero()) total += multinomial(parts) * term;
  });
  return total;
}

WalkCount cartesian_sum_walks(std::span<const WalkTable> factor_tables, unsigned r, const AgreementPattern& pattern) {
  const auto series = select_series(factor_tables, pattern);
  return cartesian_sum_walks(series, r);
}

WalkCount hamming_walks(std::uint32_t b, std::uint64_t q, unsigned r, const AgreementPattern& agree) {
  if (b < 1 || q < 2) throw Error(Errc::BadParameters, "Hamming graph needs b >= 1 and q >= 2");
  if (agree.size() != b) throw Error(Errc::ArityMismatch, "agreement pattern length differs from b");
  const std::vector<WalkTable> tables(b, complete_walk_table(q, r));
  const WalkCount count = cartesian_sum_walks(tables, r, agree);

  // Only the number of agreeing coordinates may matter.
  const auto agreeing = static_cast<std::size_t>(std::count(agree.begin(), agree.end(), true));
  AgreementPattern canonical(b, false);
  std::fill_n(canonical.begin(), agreeing, true);
  if (canonical != agree && cartesian_sum_walks(tables, r, canonical) != count)
    throw Error(Errc::BadParameters, "internal: Hamming walk count depends on coordinate order");
  return count;
}

}  // namespace diagwalk
