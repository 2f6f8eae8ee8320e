#pragma once

#include <functional>
#include <span>

#include "diagwalk/arith.hpp"

namespace diagwalk {

BigInt binomial(unsigned n, unsigned k);

// total! / (parts[0]! * ... * parts[n-1]!) as a product of binomials.
BigInt multinomial(std::span<const unsigned> parts);

// Visits every (r_1, ..., r_parts) with r_i >= 0 and sum == total in
// colexicographic order: the last coordinate varies slowest.
void for_each_weak_composition(unsigned parts, unsigned total,
                               const std::function<void(std::span<const unsigned>)>& visit);

}  // namespace diagwalk
