#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace diagwalk {

// Arbitrary-precision integer used for every count the library returns.
using BigInt = boost::multiprecision::cpp_int;

std::string to_decimal(const BigInt& value);

BigInt ipow(const BigInt& base, unsigned exponent);

bool is_prime(std::uint64_t n);

// Prime factorization by trial division, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t mod);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

std::uint64_t euler_phi(std::uint64_t n);

// Order of x in (Z/nZ)^*; 0 when gcd(x, n) != 1. Factors phi(n) by trial division.
std::uint64_t multiplicative_order(std::uint64_t x, std::uint64_t n);

// Stores base^exponent in out; false if the power exceeds limit.
bool checked_pow(std::uint64_t base, unsigned exponent, std::uint64_t limit, std::uint64_t& out);

}  // namespace diagwalk
