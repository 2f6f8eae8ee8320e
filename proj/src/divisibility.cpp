#include "diagwalk/divisibility.hpp"

#include <algorithm>

#include "diagwalk/arith.hpp"
#include "diagwalk/error.hpp"

namespace diagwalk {

namespace {

void check_inputs(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (a < 1 || b < 1) throw Error(Errc::BadParameters, "a and b must be positive");
}

}  // namespace

bool k_is_integer(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
  check_inputs(p, a, b);
  const BigInt x = ipow(BigInt(p), a);
  BigInt sum = 0;
  BigInt term = 1;
  for (std::uint32_t j = 0; j < b; ++j) {
    sum += term;
    term *= x;
  }
  return sum % b == 0;
}

bool k_is_integer_by_quotient(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
  check_inputs(p, a, b);
  const BigInt x = ipow(BigInt(p), a);
  const BigInt numerator = ipow(x, b) - 1;
  if (numerator % (x - 1) != 0) throw Error(Errc::BadParameters, "internal: p^a - 1 does not divide p^ab - 1");
  return (numerator / (x - 1)) % b == 0;
}

DivisibilityReport remark_cases(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
  DivisibilityReport report;
  report.p = p;
  report.a = a;
  report.b = b;
  report.k_integer = k_is_integer(p, a, b);
  report.notes = "case (b) read as x = +-1 (mod r) with r = b/2";
  if (b < 2) return report;

  const auto factors = factorize(b);
  // x = p^a reduced modulo b (and hence modulo every divisor of b).
  const std::uint64_t x = pow_mod(p, a, b);
  const bool squarefree = std::all_of(factors.begin(), factors.end(), [](auto f) { return f.second == 1; });
  const bool avoids_p = std::all_of(factors.begin(), factors.end(), [p](auto f) { return f.first != p; });

  // (a) b = r prime, r != p, x = 1 mod r
  if (is_prime(b) && b != p && x % b == 1 % b) report.cases.insert('a');

  // (b) b = 2r, r odd prime, gcd(x, b) = 1, x = +-1 mod r
  if (b % 2 == 0 && b / 2 > 2 && is_prime(b / 2)) {
    const std::uint64_t r = b / 2;
    if (gcd(x, b) == 1 && (x % r == 1 || x % r == r - 1)) report.cases.insert('b');
  }

  // (c) b = r r', r < r' odd primes, r does not divide r' - 1, x = 1 mod r r'
  if (factors.size() == 2 && squarefree && factors[0].first > 2) {
    const std::uint64_t r = factors[0].first;
    const std::uint64_t r2 = factors[1].first;
    if ((r2 - 1) % r != 0 && x % b == 1) report.cases.insert('c');
  }

  // (d) b = r_1 < ... < r_l distinct primes != p, x = 1 mod r_1,
  //     x^{b/r_i} = 1 mod r_i for i >= 2
  if (squarefree && avoids_p) {
    bool holds = x % factors[0].first == 1 % factors[0].first;
    for (std::size_t i = 1; i < factors.size() && holds; ++i) {
      const std::uint64_t r = factors[i].first;
      holds = pow_mod(x, b / r, r) == 1;
    }
    if (holds) report.cases.insert('d');
  }

  // (e) b = r^t, ord_b(x) = r^h with 0 <= h < t
  if (factors.size() == 1) {
    const auto [r, t] = factors[0];
    const std::uint64_t ord = multiplicative_order(x, b);
    std::uint64_t power = 1;
    for (unsigned h = 0; h < t && ord != 0; ++h) {
      if (ord == power) {
        report.cases.insert('e');
        break;
      }
      power *= r;
    }
  }

  // (f) b = prod r_i^{t_i}, r_i != p, ord_{r_i^{t_i}}(x) = r_i^{h_i}, 0 <= h_i < t_i
  if (avoids_p) {
    bool holds = true;
    for (auto [r, t] : factors) {
      std::uint64_t modulus = 1;
      for (unsigned i = 0; i < t; ++i) modulus *= r;
      const std::uint64_t ord = multiplicative_order(x % modulus, modulus);
      bool matched = false;
      std::uint64_t power = 1;
      for (unsigned h = 0; h < t && ord != 0; ++h) {
        if (ord == power) matched = true;
        power *= r;
      }
      if (!matched) {
        holds = false;
        break;
      }
    }
    if (holds) report.cases.insert('f');
  }
  return report;
}

std::string format_cases(const std::set<char>& cases) {
  std::string out;
  for (char c : cases) {
    if (!out.empty()) out += ',';
    out += c;
  }
  return out;
}

}  // namespace diagwalk
