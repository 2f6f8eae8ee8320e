#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "diagwalk/finite_field.hpp"
#include "diagwalk/graph.hpp"
#include "diagwalk/neps.hpp"

namespace diagwalk {

struct GpGraphParams {
  std::uint64_t k = 1;
  std::uint64_t u = 1;  // (q-1)/k, the out-degree
  bool connected = false;
  bool undirected = false;
};

GpGraphParams gp_params(const FiniteField& field, std::uint64_t k);

// Cayley graph on (F_q, +) with connection set R_k; vertex i is the element of index i.
DenseGraph gp_graph(const FiniteField& field, std::uint64_t k);

// u | p^m - 1 and u does not divide p^h - 1 for any 1 <= h < m.
bool is_primitive_divisor(std::uint64_t u, std::uint32_t p, std::uint32_t m);

struct HammingDecomposition {
  std::uint32_t a = 1;
  std::uint32_t b = 1;

  friend bool operator==(const HammingDecomposition&, const HammingDecomposition&) = default;
};

// Every (a, b) with m = ab, b > 1 and (p^m - 1)/k = b(p^a - 1).
std::vector<HammingDecomposition> hamming_parameters(std::uint32_t p, std::uint32_t m, std::uint64_t k);

// Coordinates [x] in (F_{p^a})^b identifying the GP-graph with H(b, p^a).
class HammingView {
public:
  HammingView(const FiniteField& field, std::uint64_t k, HammingDecomposition decomposition);

  const FiniteField& field() const noexcept { return coords_.field(); }
  std::uint64_t k() const noexcept { return coords_.k(); }
  std::uint32_t a() const noexcept { return coords_.a(); }
  std::uint32_t b() const noexcept { return coords_.b(); }
  std::uint64_t alphabet() const noexcept { return alphabet_; }
  const std::vector<FieldElement>& basis() const noexcept { return coords_.basis(); }

  std::vector<FieldElement> coordinates(const FieldElement& x) const { return coords_.coordinates(x); }
  FieldElement reconstruct(std::span<const FieldElement> c) const { return coords_.reconstruct(c); }
  AgreementPattern agreement(const FieldElement& x, const FieldElement& y) const;
  std::size_t hamming_distance(const FieldElement& x, const FieldElement& y) const;

private:
  SubfieldCoordinates coords_;
  std::uint64_t alphabet_;
};

HammingView build_hamming_view(const FiniteField& field, std::uint64_t k, std::uint32_t a, std::uint32_t b);

using CoordinateMap = std::function<std::vector<FieldElement>(const FieldElement&)>;

inline constexpr std::uint32_t kExhaustiveIsomorphismOrder = 1u << 12;
inline constexpr std::uint64_t kIsomorphismSamples = 1'000'000;

// y - x in R_k  <=>  [x], [y] at Hamming distance 1, for every pair when
// q <= 2^12 (plus injectivity of the map) and for random pairs above that.
bool verify_isomorphism(const FiniteField& field, std::uint64_t k, const CoordinateMap& coords,
                        std::uint64_t seed = 0x5eed);
bool verify_isomorphism(const HammingView& view);

}  // namespace diagwalk
