#include <algorithm>
#include <map>

#include "doctest.h"

#include "diagwalk/diagonal.hpp"

using namespace diagwalk;

// Frozen values below come from a standalone brute-force enumeration over
// explicit polynomial arithmetic, written independently of this library.

TEST_CASE("spot values over F_9, k = 2") {
  const DiagonalSystem sys(3, 1, 2);
  CHECK(sys.k() == 2);
  CHECK(sys.q() == 9);
  const auto& f = sys.field();
  CHECK(sys.count_nonzero_formula(f.one(), 1) == 2);
  CHECK(sys.count_nonzero_formula(f.one(), 2) == 4);
  CHECK(sys.count_nonzero_formula(f.zero(), 2) == 16);
  CHECK(sys.count_nonzero_formula(f.zero(), 3) == 32);
  CHECK(sys.count_nonzero_formula(f.one(), 3) == 72);
  // omega is not a square.
  CHECK(sys.count_nonzero_formula(f.omega(), 1) == 0);
  CHECK(sys.count_all_formula(f.zero(), 2) == 17);
  CHECK(sys.count_all_formula(f.zero(), 1) == 1);
  CHECK(sys.count_all_formula(f.zero(), 0) == 1);
  CHECK(sys.count_all_formula(f.one(), 0) == 0);
}

TEST_CASE("frozen values on the rest of the roster") {
  struct Row {
    std::uint32_t p, a, b;
    std::uint64_t k;
    unsigned r;
    long n_zero, n_one;
  };
  const std::vector<Row> rows{
      {5, 1, 2, 3, 2, 72, 27},     {5, 1, 2, 3, 3, 648, 675},    {7, 1, 2, 4, 2, 192, 80},
      {7, 1, 2, 4, 3, 3840, 3136}, {2, 2, 3, 7, 2, 441, 98},     {2, 2, 3, 7, 3, 6174, 8575},
      {3, 2, 2, 5, 2, 400, 175},   {3, 2, 2, 5, 3, 14000, 10125},
  };
  for (const auto& row : rows) {
    const DiagonalSystem sys(row.p, row.a, row.b);
    CAPTURE(row.p);
    CAPTURE(row.r);
    CHECK(sys.k() == row.k);
    CHECK(sys.count_nonzero_formula(sys.field().zero(), row.r) == row.n_zero);
    CHECK(sys.count_nonzero_formula(sys.field().one(), row.r) == row.n_one);
  }
  const DiagonalSystem f64(2, 2, 3);
  CHECK(brute_force_count(f64.field(), 7, f64.field().one(), 3, true) == 8575);
  CHECK(convolution_count(f64.field(), 7, f64.field().one(), 3, true) == 8575);
}

TEST_CASE("k must be an integer") {
  try {
    DiagonalSystem(2, 1, 2);
    FAIL("expected KNotInteger");
  } catch (const KNotIntegerError& e) {
    CHECK(e.code() == Errc::KNotInteger);
    CHECK_FALSE(e.report().k_integer);
    CHECK(e.report().cases.empty());
  }
  CHECK_THROWS_AS(DiagonalSystem(3, 1, 1), Error);
  CHECK(diagonal_exponent(2, 2, 3) == 7);
}

TEST_CASE("oracles") {
  const auto f9 = build_field(3, 2);
  CHECK(brute_force_count(f9, 2, f9.zero(), 0, true) == 1);
  CHECK(brute_force_count(f9, 2, f9.one(), 0, true) == 0);
  CHECK(brute_force_count(f9, 2, f9.one(), 2, true) == 4);
  CHECK(brute_force_count(f9, 2, f9.zero(), 2, true) == 16);
  CHECK(brute_force_count(f9, 2, f9.zero(), 2, false) == 17);
  CHECK(convolution_count(f9, 2, f9.zero(), 2, true) == 16);

  const auto squares = kth_power_residues(f9, 2);
  for (std::uint32_t x = 0; x < 9; ++x) {
    const BigInt expected = squares.contains_index(x) ? 2 : 0;
    CHECK(convolution_count(f9, 2, f9.element(x), 1, true) == expected);
    CHECK(convolution_count(f9, 2, f9.element(x), 1, false) == expected + (x == 0 ? 1 : 0));
  }

  try {
    brute_force_count(f9, 2, f9.zero(), 9, true);
    FAIL("expected EnumerationTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EnumerationTooLarge);
  }
  CHECK_NOTHROW(brute_force_count(f9, 2, f9.zero(), 3, true, 512));
  CHECK_THROWS_AS(brute_force_count(f9, 2, f9.zero(), 3, true, 511), Error);

  // Oracles accept any k | q - 1 and agree with each other there.
  const auto f16 = build_field(2, 4);
  for (std::uint64_t k : {1u, 3u, 5u, 15u})
    for (unsigned r = 0; r <= 3; ++r)
      for (bool nonzero : {true, false}) {
        const auto brute = brute_force_histogram(f16, k, r, nonzero);
        const auto conv = convolution_counts(f16, k, r, nonzero);
        CHECK(brute == conv);
        BigInt total = 0;
        for (const auto& v : conv) total += v;
        CHECK(total == ipow(BigInt(nonzero ? 15 : 16), r));
      }
}

TEST_CASE("walk solution counts") {
  const auto f9 = build_field(3, 2);
  CHECK(walk_solution_count(f9, 2, f9.one(), f9.one(), 0) == 1);
  CHECK(walk_solution_count(f9, 2, f9.zero(), f9.one(), 2) == 4);
  const auto squares = kth_power_residues(f9, 2);
  for (std::uint32_t y = 0; y < 9; ++y)
    CHECK(walk_solution_count(f9, 2, f9.zero(), f9.element(y), 1) == (squares.contains_index(y) ? 2 : 0));
  // Directed GP-graph: x + x_1^8 + x_2^8 = y has 8^2 * w solutions.
  const auto gp = gp_graph(f9, 8);
  CHECK(walk_solution_count(gp, f9, 8, f9.zero(), f9.element(2), 2) == 64);
  CHECK(brute_force_count(f9, 8, f9.element(2), 2, true) == 64);
}

TEST_CASE("formula properties on the roster") {
  for (auto [p, a, b] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
           {3, 1, 2}, {5, 1, 2}, {7, 1, 2}, {2, 2, 3}, {3, 2, 2}}) {
    const DiagonalSystem sys(p, a, b);
    const auto& f = sys.field();
    const std::uint32_t q = f.order();
    const auto residues = kth_power_residues(f, sys.k());
    const auto gp = gp_graph(f, sys.k());
    std::vector<std::vector<BigInt>> n(5, std::vector<BigInt>(q));
    for (unsigned r = 0; r <= 4; ++r)
      for (std::uint32_t x = 0; x < q; ++x) n[r][x] = sys.count_nonzero_formula(f.element(x), r);

    for (unsigned r = 0; r <= 3; ++r) {
      CAPTURE(p);
      CAPTURE(r);
      CHECK(n[r] == convolution_counts(f, sys.k(), r, true));
      CHECK(n[r] == walk_solution_counts(gp, sys.k(), f.zero(), r));
      if (q <= 49) CHECK(n[r] == brute_force_histogram(f, sys.k(), r, true));
    }
    for (unsigned r = 0; r <= 4; ++r) {
      const BigInt kr = ipow(BigInt(sys.k()), r);
      BigInt total = 0;
      std::map<std::size_t, BigInt> by_zeros;
      for (std::uint32_t x = 0; x < q; ++x) {
        CHECK(n[r][x] % kr == 0);
        total += n[r][x];
        const auto zeros = zero_pattern(sys.view().coordinates(f.element(x)));
        const auto count = static_cast<std::size_t>(std::count(zeros.begin(), zeros.end(), true));
        auto [it, inserted] = by_zeros.emplace(count, n[r][x]);
        if (!inserted) CHECK(it->second == n[r][x]);
      }
      CHECK(total == ipow(BigInt(q - 1), r));
    }
    // N_{r+1}(alpha) = sum over beta in R_k of k N_r(alpha - beta).
    for (unsigned r = 0; r < 4; ++r)
      for (std::uint32_t x = 0; x < q; ++x) {
        BigInt sum = 0;
        for (auto beta : residues.members()) sum += sys.k() * n[r][f.add_index(x, f.neg_index(beta))];
        CHECK(n[r + 1][x] == sum);
      }
    for (unsigned s = 0; s <= 4; ++s) {
      BigInt total = 0;
      for (std::uint32_t x = 0; x < q; ++x) total += sys.count_all_formula(f.element(x), s);
      CHECK(total == ipow(BigInt(q), s));
    }
    for (unsigned s = 0; s <= 2; ++s)
      CHECK(brute_force_histogram(f, sys.k(), s, false)[1] == sys.count_all_formula(f.one(), s));
  }
}

TEST_CASE("counts do not depend on the choice of primitive element") {
  for (auto [p, a, b] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
           {3, 1, 2}, {2, 2, 3}, {3, 2, 2}}) {
    const DiagonalSystem first(p, a, b);
    FieldOptions second_omega;
    second_omega.primitive_rank = 1;
    const DiagonalSystem second(p, a, b, second_omega);
    CHECK(first.field().omega().index() != second.field().omega().index());
    for (std::uint32_t x = 0; x < first.q(); ++x)
      for (unsigned r = 1; r <= 3; ++r)
        CHECK(first.count_nonzero_formula(first.field().element(x), r) ==
              second.count_nonzero_formula(second.field().element(x), r));
  }
}

TEST_CASE("method dispatch") {
  const DiagonalSystem sys(3, 1, 2);
  const auto alpha = sys.field().one();
  for (auto method : {CountMethod::Formula, CountMethod::Brute, CountMethod::Convolution, CountMethod::Walk}) {
    CHECK(sys.count(alpha, 2, CountMode::Nonzero, method) == 4);
    CHECK(sys.count(sys.field().zero(), 2, CountMode::All, method) == 17);
  }
  CHECK(parse_method("convolution") == CountMethod::Convolution);
  CHECK_FALSE(parse_method("fast").has_value());
}
