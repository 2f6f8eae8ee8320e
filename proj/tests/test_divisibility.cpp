#include "doctest.h"

#include "diagwalk/divisibility.hpp"

using namespace diagwalk;

TEST_CASE("integrality of k") {
  CHECK(k_is_integer(3, 1, 2));
  CHECK_FALSE(k_is_integer(2, 1, 2));
  CHECK(k_is_integer(2, 2, 3));
  CHECK(k_is_integer(5, 1, 1));
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u})
    for (std::uint32_t a = 1; a <= 3; ++a)
      for (std::uint32_t b = 1; b <= 12; ++b) CHECK(k_is_integer(p, a, b) == k_is_integer_by_quotient(p, a, b));
}

TEST_CASE("published sufficient conditions") {
  CHECK(remark_cases(3, 1, 2).cases.count('a') == 1);
  CHECK(remark_cases(2, 2, 3).cases.count('a') == 1);
  const auto none = remark_cases(2, 1, 2);
  CHECK(none.cases.empty());
  CHECK_FALSE(none.k_integer);

  // b = 6 = 2 * 3 with x = 5 = -1 mod 3: case (b).
  CHECK(remark_cases(5, 1, 6).cases.count('b') == 1);
  // b = 15 = 3 * 5, 3 does not divide 4, x = 16 = 1 mod 15: case (c).
  CHECK(remark_cases(2, 4, 15).cases.count('c') == 1);
  // b = 4 = 2^2, x = 3 has order 2 mod 4: case (e).
  CHECK(remark_cases(3, 1, 4).cases.count('e') == 1);
  CHECK(remark_cases(3, 1, 4).k_integer);
  // b = 9, x = 4 has order 3 mod 9: cases (e) and (f).
  const auto nine = remark_cases(2, 2, 9);
  CHECK(nine.cases.count('e') == 1);
  CHECK(nine.cases.count('f') == 1);
  CHECK(format_cases(nine.cases) == "e,f");
}

TEST_CASE("soundness sweep") {
  std::size_t fired = 0;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u})
    for (std::uint32_t a = 1; a <= 3; ++a)
      for (std::uint32_t b = 1; b <= 12; ++b) {
        const auto report = remark_cases(p, a, b);
        if (!report.cases.empty()) {
          ++fired;
          CAPTURE(p);
          CAPTURE(a);
          CAPTURE(b);
          CHECK(report.k_integer);
        }
      }
  CHECK(fired > 0);
}
