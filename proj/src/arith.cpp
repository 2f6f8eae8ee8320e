#include "diagwalk/arith.hpp"

#include <algorithm>

namespace diagwalk {

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt ipow(const BigInt& base, unsigned exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1u);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::uint64_t result = 1;
  base %= mod;
  while (exponent > 0) {
    if (exponent & 1u) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exponent >>= 1;
  }
  return result;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (auto [prime, e] : factorize(n)) {
    (void)e;
    phi = phi / prime * (prime - 1);
  }
  return phi;
}

std::uint64_t multiplicative_order(std::uint64_t x, std::uint64_t n) {
  if (n == 1) return 1;
  if (gcd(x % n, n) != 1) return 0;
  std::uint64_t order = euler_phi(n);
  for (auto [prime, e] : factorize(order)) {
    for (unsigned i = 0; i < e; ++i) {
      if (pow_mod(x, order / prime, n) != 1) break;
      order /= prime;
    }
  }
  return order;
}

bool checked_pow(std::uint64_t base, unsigned exponent, std::uint64_t limit, std::uint64_t& out) {
  std::uint64_t value = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && value > limit / base) return false;
    value *= base;
  }
  if (value > limit) return false;
  out = value;
  return true;
}

}  // namespace diagwalk
