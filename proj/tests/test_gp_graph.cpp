#include <map>

#include "doctest.h"

#include "diagwalk/gp_graph.hpp"

using namespace diagwalk;

TEST_CASE("GP-graph construction") {
  const auto f9 = build_field(3, 2);
  const auto complete = gp_graph(f9, 1);
  CHECK(complete.adjacency_list() == complete_graph(9).adjacency_list());

  const auto paley = gp_graph(f9, 2);
  CHECK_FALSE(paley.directed());
  CHECK(paley.is_regular());
  CHECK(paley.out_degree(0) == 4);

  const auto one_factor = gp_graph(f9, 8);
  CHECK(one_factor.directed());
  for (std::size_t v = 0; v < 9; ++v) CHECK(one_factor.out_degree(v) == 1);

  try {
    gp_graph(f9, 3);
    FAIL("expected KDoesNotDivide");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::KDoesNotDivide);
  }

  // Out-degree (q-1)/k everywhere; directed exactly when -1 is not a k-th power.
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 2}, {2, 4}, {7, 2}, {3, 3}}) {
    const auto f = build_field(p, m);
    const std::uint32_t group = f.order() - 1;
    for (std::uint64_t k = 1; k <= group; ++k) {
      if (group % k != 0) continue;
      const auto g = gp_graph(f, k);
      const auto params = gp_params(f, k);
      CHECK(params.u == group / k);
      for (std::size_t v = 0; v < g.order(); ++v) CHECK(g.out_degree(v) == group / k);
      const bool minus_one = kth_power_residues(f, k).contains(f.neg(f.one()));
      CHECK(params.undirected == minus_one);
    }
  }
}

TEST_CASE("primitive divisors") {
  CHECK(is_primitive_divisor(4, 3, 2));
  CHECK_FALSE(is_primitive_divisor(1, 3, 2));
  CHECK(is_primitive_divisor(3, 2, 2));
  CHECK_FALSE(is_primitive_divisor(5, 3, 2));
  CHECK(is_primitive_divisor(9, 2, 6));
  CHECK_FALSE(is_primitive_divisor(7, 2, 6));  // 7 | 2^3 - 1

  // Connectivity of the GP-graph matches the primitive-divisor predicate.
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {3, 2}, {2, 6}, {5, 2}}) {
    const auto f = build_field(p, m);
    const std::uint32_t group = f.order() - 1;
    for (std::uint64_t k = 1; k <= group; ++k) {
      if (group % k != 0) continue;
      const auto g = gp_graph(f, k);
      std::vector<bool> seen(g.order(), false);
      std::vector<std::size_t> stack{0};
      seen[0] = true;
      while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < g.order(); ++w)
          if (g.adjacent(v, w) && !seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
      }
      const bool connected = std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
      CAPTURE(p);
      CAPTURE(m);
      CAPTURE(k);
      CHECK(gp_params(f, k).connected == connected);
    }
  }
}

TEST_CASE("Hamming parameter detection") {
  CHECK(hamming_parameters(3, 2, 2) == std::vector<HammingDecomposition>{{1, 2}});
  CHECK(hamming_parameters(2, 6, 7) == std::vector<HammingDecomposition>{{2, 3}});
  CHECK(hamming_parameters(2, 2, 1).empty());
  CHECK(hamming_parameters(5, 2, 3) == std::vector<HammingDecomposition>{{1, 2}});
  CHECK(hamming_parameters(3, 4, 5) == std::vector<HammingDecomposition>{{2, 2}});
  CHECK(hamming_parameters(3, 2, 1).empty());

  // Scan: every detection is undirected when p is odd, and at most one pair appears.
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (std::uint32_t m = 2; m <= 6; ++m) {
      std::uint64_t q = 1;
      for (std::uint32_t i = 0; i < m; ++i) q *= p;
      if (q > 20000) continue;
      for (std::uint64_t k = 1; k < q; ++k) {
        if ((q - 1) % k != 0) continue;
        const auto found = hamming_parameters(p, m, k);
        CHECK(found.size() <= 1);
        for (const auto& d : found)
          if (p != 2) CHECK(((q - 1) / k) % 2 == 0);
      }
    }
}

TEST_CASE("Hamming view coordinates") {
  const auto f64 = build_field(2, 6);
  const auto view = build_hamming_view(f64, 7, 2, 3);
  CHECK(view.alphabet() == 4);
  const auto c1 = view.coordinates(f64.one());
  CHECK(c1[0] == f64.one());
  CHECK(c1[1].is_zero());
  const auto c2 = view.coordinates(f64.omega_pow(14));
  CHECK(c2[0].is_zero());
  CHECK(c2[1].is_zero());
  CHECK(c2[2] == f64.one());
  for (std::uint32_t x = 0; x < 64; x += 5)
    for (std::uint32_t y = 0; y < 64; y += 3) {
      const auto sum = view.coordinates(f64.add(f64.element(x), f64.element(y)));
      const auto cx = view.coordinates(f64.element(x));
      const auto cy = view.coordinates(f64.element(y));
      for (std::size_t i = 0; i < 3; ++i) CHECK(sum[i] == f64.add(cx[i], cy[i]));
    }
  try {
    build_hamming_view(f64, 7, 3, 2);
    FAIL("expected BadDecomposition");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadDecomposition);
  }
}

TEST_CASE("isomorphism with Hamming graphs") {
  const auto f9 = build_field(3, 2);
  CHECK(verify_isomorphism(build_hamming_view(f9, 2, 1, 2)));
  const auto f25 = build_field(5, 2);
  CHECK(verify_isomorphism(build_hamming_view(f25, 3, 1, 2)));

  // Negative control: swap the images of two elements.
  const auto view = build_hamming_view(f25, 3, 1, 2);
  const CoordinateMap corrupted = [&](const FieldElement& x) {
    if (x == f25.one()) return view.coordinates(f25.element(2));
    if (x == f25.element(2)) return view.coordinates(f25.one());
    return view.coordinates(x);
  };
  CHECK_FALSE(verify_isomorphism(f25, 3, corrupted));
  // A non-injective map is rejected too.
  const CoordinateMap collapsed = [&](const FieldElement& x) {
    return x == f25.one() ? view.coordinates(f25.zero()) : view.coordinates(x);
  };
  CHECK_FALSE(verify_isomorphism(f25, 3, collapsed));

  // Above the exhaustive threshold the sampled path runs: F_{3^8}, u = 2(3^4 - 1).
  const auto big = build_field(3, 8);
  const std::uint64_t k = (big.order() - 1) / (2 * 80);
  CHECK(k == 41);
  CHECK(hamming_parameters(3, 8, k) == std::vector<HammingDecomposition>{{4, 2}});
  const auto big_view = build_hamming_view(big, k, 4, 2);
  CHECK(verify_isomorphism(big_view));
  const CoordinateMap shifted = [&](const FieldElement& x) {
    auto c = big_view.coordinates(x);
    if (c[0] == big.one()) c[0] = big.zero();
    return c;
  };
  CHECK_FALSE(verify_isomorphism(big, k, shifted));
}

TEST_CASE("walk counts on Cayley graphs depend only on the difference") {
  const auto f25 = build_field(5, 2);
  const auto g = gp_graph(f25, 3);
  std::map<std::uint32_t, BigInt> by_difference;
  for (std::uint32_t x = 0; x < 25; ++x) {
    const auto row = walk_rows(g, 3, x)[3];
    for (std::uint32_t y = 0; y < 25; ++y) {
      const auto d = f25.add_index(y, f25.neg_index(x));
      auto [it, inserted] = by_difference.emplace(d, row[y]);
      if (!inserted) CHECK(it->second == row[y]);
    }
  }
  // Directed case too.
  const auto f9 = build_field(3, 2);
  const auto directed = gp_graph(f9, 8);
  std::map<std::uint32_t, BigInt> seen;
  for (std::uint32_t x = 0; x < 9; ++x) {
    const auto row = walk_rows(directed, 4, x)[4];
    for (std::uint32_t y = 0; y < 9; ++y) {
      auto [it, inserted] = seen.emplace(f9.add_index(y, f9.neg_index(x)), row[y]);
      if (!inserted) CHECK(it->second == row[y]);
    }
  }
}
