#include "diagwalk/gp_graph.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "diagwalk/arith.hpp"

namespace diagwalk {

namespace {

std::uint64_t group_order(std::uint32_t p, std::uint32_t m) {
  std::uint64_t q = 0;
  if (!checked_pow(p, m, std::uint64_t{1} << 62, q))
    throw Error(Errc::BadParameters, "p^m too large for machine arithmetic");
  return q - 1;
}

void check_k(std::uint64_t group, std::uint64_t k) {
  if (k == 0 || group % k != 0)
    throw Error(Errc::KDoesNotDivide, "k=" + std::to_string(k) + " does not divide q-1=" + std::to_string(group));
}

}  // namespace

GpGraphParams gp_params(const FiniteField& field, std::uint64_t k) {
  const std::uint64_t group = field.order() - 1;
  check_k(group, k);
  GpGraphParams out;
  out.k = k;
  out.u = group / k;
  out.connected = is_primitive_divisor(out.u, field.characteristic(), field.degree());
  out.undirected = field.characteristic() == 2 || out.u % 2 == 0;
  return out;
}

DenseGraph gp_graph(const FiniteField& field, std::uint64_t k) {
  const GpGraphParams params = gp_params(field, k);
  const std::uint32_t q = field.order();
  if (q > kMaxDenseOrder)
    throw Error(Errc::GraphTooLarge, "GP-graph on " + std::to_string(q) + " vertices exceeds the dense cap");
  const ResidueSet residues = kth_power_residues(field, k);
  std::vector<std::uint8_t> adj(std::size_t{q} * q, 0);
  for (std::uint32_t x = 0; x < q; ++x)
    for (std::uint32_t r : residues.members()) adj[std::size_t{x} * q + field.add_index(x, r)] = 1;
  return DenseGraph(q, std::move(adj), !params.undirected);
}

bool is_primitive_divisor(std::uint64_t u, std::uint32_t p, std::uint32_t m) {
  if (u == 0) return false;
  const std::uint64_t one = 1 % u;
  if (pow_mod(p, m, u) != one) return false;
  for (std::uint32_t h = 1; h < m; ++h)
    if (pow_mod(p, h, u) == one) return false;
  return true;
}

std::vector<HammingDecomposition> hamming_parameters(std::uint32_t p, std::uint32_t m, std::uint64_t k) {
  const std::uint64_t group = group_order(p, m);
  check_k(group, k);
  const std::uint64_t u = group / k;
  std::vector<HammingDecomposition> out;
  for (std::uint64_t a : divisors(m)) {
    const std::uint64_t b = m / a;
    if (b < 2) continue;
    const std::uint64_t sub = group_order(p, static_cast<std::uint32_t>(a));
    if (u / b == sub && u % b == 0)
      out.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
  }
  return out;
}

HammingView::HammingView(const FiniteField& field, std::uint64_t k, HammingDecomposition d)
    : coords_(field, d.a, d.b, k), alphabet_(group_order(field.characteristic(), d.a) + 1) {}

AgreementPattern HammingView::agreement(const FieldElement& x, const FieldElement& y) const {
  const auto cx = coordinates(x);
  const auto cy = coordinates(y);
  AgreementPattern out(cx.size());
  for (std::size_t i = 0; i < cx.size(); ++i) out[i] = cx[i] == cy[i];
  return out;
}

std::size_t HammingView::hamming_distance(const FieldElement& x, const FieldElement& y) const {
  const auto pattern = agreement(x, y);
  return static_cast<std::size_t>(std::count(pattern.begin(), pattern.end(), false));
}

HammingView build_hamming_view(const FiniteField& field, std::uint64_t k, std::uint32_t a, std::uint32_t b) {
  const auto options = hamming_parameters(field.characteristic(), field.degree(), k);
  const HammingDecomposition wanted{a, b};
  if (std::find(options.begin(), options.end(), wanted) == options.end())
    throw Error(Errc::BadDecomposition, "(a, b) = (" + std::to_string(a) + ", " + std::to_string(b) +
                                            ") does not satisfy (q-1)/k = b(p^a - 1)");
  return HammingView(field, k, wanted);
}

namespace {

std::size_t distance(const std::vector<FieldElement>& x, const std::vector<FieldElement>& y) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] == y[i] ? 0 : 1;
  return d;
}

}  // namespace

bool verify_isomorphism(const FiniteField& field, std::uint64_t k, const CoordinateMap& coords, std::uint64_t seed) {
  const ResidueSet residues = kth_power_residues(field, k);
  const std::uint32_t q = field.order();
  auto edge = [&](std::uint32_t x, std::uint32_t y) {
    return residues.contains_index(field.add_index(y, field.neg_index(x)));
  };

  if (q <= kExhaustiveIsomorphismOrder) {
    std::vector<std::vector<FieldElement>> table;
    table.reserve(q);
    std::set<std::vector<std::uint32_t>> images;
    for (std::uint32_t x = 0; x < q; ++x) {
      table.push_back(coords(field.element(x)));
      std::vector<std::uint32_t> key;
      for (const auto& c : table.back()) key.push_back(c.index());
      if (!images.insert(std::move(key)).second) return false;
    }
    for (std::uint32_t x = 0; x < q; ++x)
      for (std::uint32_t y = 0; y < q; ++y)
        if (edge(x, y) != (distance(table[x], table[y]) == 1)) return false;
    return true;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
  std::uniform_int_distribution<std::size_t> pick_residue(0, residues.size() - 1);
  for (std::uint64_t s = 0; s < kIsomorphismSamples; ++s) {
    const std::uint32_t x = pick(rng);
    // Half the samples are edges so the "=>" direction is exercised too.
    const std::uint32_t y =
        s % 2 == 0 ? field.add_index(x, residues.members()[pick_residue(rng)]) : pick(rng);
    if (edge(x, y) != (distance(coords(field.element(x)), coords(field.element(y))) == 1)) return false;
  }
  return true;
}

bool verify_isomorphism(const HammingView& view) {
  return verify_isomorphism(view.field(), view.k(),
                            [&view](const FieldElement& x) { return view.coordinates(x); });
}

}  // namespace diagwalk
