#include <algorithm>
#include <set>

#include "doctest.h"

#include "diagwalk/finite_field.hpp"
#include "diagwalk/literals.hpp"

using namespace diagwalk;

TEST_CASE("prime fields pick the smallest primitive root") {
  const auto f3 = build_field(3, 1);
  CHECK(f3.order() == 3);
  CHECK(f3.omega().index() == 2);
  const auto f2 = build_field(2, 1);
  CHECK(f2.omega().index() == 1);
  CHECK(build_field(7, 1).omega().index() == 3);
  CHECK(build_field(13, 1).omega().index() == 2);
}

TEST_CASE("deterministic modulus selection") {
  CHECK(smallest_irreducible(3, 2) == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(smallest_irreducible(5, 2) == std::vector<std::uint32_t>{2, 0, 1});
  CHECK(smallest_irreducible(2, 6) == std::vector<std::uint32_t>{1, 1, 0, 0, 0, 0, 1});
  CHECK(smallest_irreducible(2, 3) == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(smallest_irreducible(2, 1) == std::vector<std::uint32_t>{0, 1});

  const auto f9 = build_field(3, 2);
  CHECK(format_coefficients(f9.params().modulus) == "1,0,1");
  // x has order 4 modulo x^2 + 1, so 1 + x (index 4) is the first primitive element.
  CHECK(f9.omega().index() == 4);
  CHECK(f9.pow(f9.omega(), 8) == f9.one());
}

TEST_CASE("irreducibility agrees with root counting for small degrees") {
  // Degree 2 and 3 polynomials are irreducible iff they have no root.
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::uint32_t m : {2u, 3u}) {
      std::uint32_t count = 1;
      for (std::uint32_t i = 0; i < m; ++i) count *= p;
      for (std::uint32_t n = 0; n < count; ++n) {
        std::vector<std::uint32_t> f;
        std::uint32_t v = n;
        for (std::uint32_t i = 0; i < m; ++i, v /= p) f.push_back(v % p);
        f.push_back(1);
        bool has_root = false;
        for (std::uint32_t x = 0; x < p; ++x) {
          std::uint64_t acc = 0;
          for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
          has_root = has_root || acc == 0;
        }
        CHECK(is_irreducible(p, f) == !has_root);
      }
    }
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(build_field(4, 1), Error);
  try {
    build_field(9, 1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPrime);
  }
  try {
    FieldOptions opts;
    opts.modulus = std::vector<std::uint32_t>{2, 0, 1};  // x^2 + 2 = (x+1)(x+2) over F_3
    build_field(3, 2, opts);
    FAIL("expected ReducibleModulus");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ReducibleModulus);
  }
  try {
    build_field(2, 21);
    FAIL("expected FieldTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FieldTooLarge);
  }
  FieldOptions big;
  big.max_order = std::uint64_t{1} << 21;
  CHECK(build_field(2, 21, big).order() == (1u << 21));
}

TEST_CASE("table consistency and field axioms") {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}, {2, 6}, {5, 2}, {3, 4}, {2, 1}}) {
    const auto f = build_field(p, m);
    const std::uint32_t q = f.order();
    std::set<std::uint32_t> exps;
    for (std::uint32_t e = 0; e + 1 < q; ++e) exps.insert(f.omega_pow(e).index());
    CHECK(exps.size() == q - 1);
    for (std::uint32_t x = 1; x < q; ++x) {
      const auto e = f.element(x);
      CHECK(f.omega_pow(f.log(e)) == e);
      CHECK(f.pow(e, q - 1) == f.one());
      CHECK(f.mul(e, f.inv(e)) == f.one());
      CHECK(f.add(e, f.neg(e)) == f.zero());
      CHECK(f.mul(e, f.one()) == e);
    }
    // Distributivity on a grid of elements.
    for (std::uint32_t x = 0; x < q; x += 1 + q / 9)
      for (std::uint32_t y = 0; y < q; y += 1 + q / 7)
        for (std::uint32_t z = 0; z < q; z += 1 + q / 5) {
          const auto ex = f.element(x), ey = f.element(y), ez = f.element(z);
          CHECK(f.mul(ex, f.add(ey, ez)) == f.add(f.mul(ex, ey), f.mul(ex, ez)));
        }
  }
}

TEST_CASE("exp table multiplication invariant") {
  const auto f = build_field(2, 6);
  for (std::uint32_t i = 0; i < 63; i += 5)
    for (std::uint32_t j = 0; j < 63; j += 3)
      CHECK(f.mul(f.omega_pow(i), f.omega_pow(j)) == f.omega_pow((i + j) % 63));
}

TEST_CASE("mixed fields are rejected") {
  const auto f9 = build_field(3, 2);
  const auto f9b = build_field(3, 2);
  CHECK_THROWS_AS(f9.add(f9.one(), f9b.one()), Error);
  try {
    f9.mul(f9.one(), f9b.one());
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MixedFields);
  }
  // Copies share tables and therefore elements.
  const auto copy = f9;
  CHECK(copy.add(f9.one(), copy.one()) == f9.element(2));
}

TEST_CASE("frobenius fixes exactly the subfield") {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 6}, {3, 4}, {2, 12}}) {
    const auto f = build_field(p, m);
    for (std::uint32_t a = 1; a <= m; ++a) {
      if (m % a != 0) continue;
      std::uint32_t fixed = 0;
      for (std::uint32_t x = 0; x < f.order(); ++x)
        if (f.frobenius(f.element(x), a) == f.element(x)) ++fixed;
      std::uint32_t expected = 1;
      for (std::uint32_t i = 0; i < a; ++i) expected *= p;
      CHECK(fixed == expected);
    }
  }
}

TEST_CASE("k-th power residues") {
  const auto f9 = build_field(3, 2);
  const auto squares = kth_power_residues(f9, 2);
  CHECK(squares.size() == 4);
  std::set<std::uint32_t> brute;
  for (std::uint32_t x = 1; x < 9; ++x) brute.insert(f9.mul(f9.element(x), f9.element(x)).index());
  CHECK(std::set<std::uint32_t>(squares.members().begin(), squares.members().end()) == brute);

  CHECK(kth_power_residues(f9, 1).size() == 8);
  const auto ones = kth_power_residues(f9, 8);
  CHECK(ones.members() == std::vector<std::uint32_t>{1});

  try {
    kth_power_residues(f9, 3);
    FAIL("expected KDoesNotDivide");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::KDoesNotDivide);
  }

  // Second construction through the exp table; closure under multiplication.
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 2}, {2, 6}, {3, 4}}) {
    const auto f = build_field(p, m);
    const std::uint32_t group = f.order() - 1;
    for (std::uint32_t k = 1; k <= group; ++k) {
      if (group % k != 0) continue;
      const auto res = kth_power_residues(f, k);
      std::set<std::uint32_t> via_exp;
      for (std::uint32_t j = 0; j < group / k; ++j) via_exp.insert(f.omega_pow(std::int64_t{j} * k).index());
      CHECK(std::set<std::uint32_t>(res.members().begin(), res.members().end()) == via_exp);
      for (auto x : res.members())
        for (auto y : res.members()) CHECK(res.contains_index(f.mul_index(x, y)));
    }
  }
}

TEST_CASE("subfield coordinates") {
  const auto f64 = build_field(2, 6);
  const std::uint64_t k = 7;
  const SubfieldCoordinates sc(f64, 2, 3, k);
  const auto one = sc.coordinates(f64.one());
  CHECK(one[0] == f64.one());
  CHECK(one[1].is_zero());
  CHECK(one[2].is_zero());
  const auto wk = sc.coordinates(f64.omega_pow(7));
  CHECK(wk[0].is_zero());
  CHECK(wk[1] == f64.one());
  CHECK(wk[2].is_zero());
  for (const auto& c : sc.coordinates(f64.zero())) CHECK(c.is_zero());

  // Bijection and exact reconstruction over the whole field.
  for (auto [p, a, b, kk] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint64_t>>{
           {3, 1, 2, 2}, {5, 1, 2, 3}, {2, 2, 3, 7}, {3, 2, 2, 5}, {7, 1, 2, 4}}) {
    const auto f = build_field(p, a * b);
    const SubfieldCoordinates map(f, a, b, kk);
    std::set<std::vector<std::uint32_t>> images;
    for (std::uint32_t x = 0; x < f.order(); ++x) {
      const auto c = map.coordinates(f.element(x));
      std::vector<std::uint32_t> key;
      for (const auto& e : c) {
        CHECK(map.in_subfield(e));
        key.push_back(e.index());
      }
      images.insert(key);
      CHECK(map.reconstruct(c) == f.element(x));
    }
    CHECK(images.size() == f.order());
  }

  CHECK(subfield_coordinates(f64, 2, 3, k, f64.omega_pow(14))[2] == f64.one());

  try {
    SubfieldCoordinates(f64, 4, 2, 7);
    FAIL("expected BadDecomposition");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadDecomposition);
  }
  // k = 21 puts w^k in F_4 itself, so the basis collapses.
  try {
    SubfieldCoordinates(f64, 2, 3, 21);
    FAIL("expected DependentBasis");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DependentBasis);
  }
}

TEST_CASE("zero pattern") {
  const auto f9 = build_field(3, 2);
  const std::vector<FieldElement> a{f9.one(), f9.zero()};
  CHECK(zero_pattern(a) == std::vector<bool>{false, true});
  const std::vector<FieldElement> z{f9.zero(), f9.zero()};
  CHECK(zero_pattern(z) == std::vector<bool>{true, true});
  const std::vector<FieldElement> nz{f9.one(), f9.element(2)};
  CHECK(zero_pattern(nz) == std::vector<bool>{false, false});
}

TEST_CASE("element literals") {
  const auto f9 = build_field(3, 2);
  CHECK(parse_element(f9, "0") == f9.zero());
  CHECK(parse_element(f9, "pow:0") == f9.one());
  CHECK(parse_element(f9, "pow:9") == f9.omega());
  CHECK(parse_element(f9, "1,1") == f9.omega());
  CHECK(parse_element(f9, "0,1").index() == 3);
  CHECK(f9.to_string(f9.omega()) == "1,1");
  CHECK_THROWS_AS(parse_element(f9, "1"), Error);
  CHECK_THROWS_AS(parse_element(f9, "3,0"), Error);
  CHECK_THROWS_AS(parse_element(f9, "pow:"), Error);
  CHECK_THROWS_AS(parse_element(f9, "1,,0"), Error);
  const auto f3 = build_field(3, 1);
  CHECK(parse_element(f3, "2") == f3.element(2));
}
