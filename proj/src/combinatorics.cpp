#include "diagwalk/combinatorics.hpp"

#include <algorithm>
#include <vector>

namespace diagwalk {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  // result = C(n - k + i, i) after step i; each division is exact.
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt multinomial(std::span<const unsigned> parts) {
  BigInt result = 1;
  unsigned running = 0;
  for (unsigned part : parts) {
    running += part;
    result *= binomial(running, part);
  }
  return result;
}

namespace {

void fill_from(std::vector<unsigned>& current, std::size_t pos, unsigned remaining,
               const std::function<void(std::span<const unsigned>)>& visit) {
  if (pos == 0) {
    current[0] = remaining;
    visit(current);
    return;
  }
  for (unsigned v = 0; v <= remaining; ++v) {
    current[pos] = v;
    fill_from(current, pos - 1, remaining - v, visit);
  }
}

}  // namespace

void for_each_weak_composition(unsigned parts, unsigned total,
                               const std::function<void(std::span<const unsigned>)>& visit) {
  if (parts == 0) {
    if (total == 0) visit({});
    return;
  }
  std::vector<unsigned> current(parts, 0);
  fill_from(current, parts - 1, total, visit);
}

}  // namespace diagwalk
