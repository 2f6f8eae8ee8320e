#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diagwalk/error.hpp"

namespace diagwalk {

inline constexpr std::uint64_t kDefaultMaxFieldOrder = std::uint64_t{1} << 20;

// Coefficients are ascending by degree; the modulus is monic of degree m.
struct FieldParams {
  std::uint32_t p = 2;
  std::uint32_t m = 1;
  std::vector<std::uint32_t> modulus;

  std::uint64_t order() const;
};

namespace detail {
struct FieldData;
}

// An element of one particular FiniteField. The canonical index is
// sum(c_i * p^i) over the polynomial coefficients c_i; index 0 is zero.
class FieldElement {
public:
  FieldElement() = default;

  std::uint32_t index() const noexcept { return index_; }
  bool is_zero() const noexcept { return index_ == 0; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.index_ == b.index_ && a.owner_ == b.owner_;
  }

private:
  friend class FiniteField;
  FieldElement(std::uint32_t index, const detail::FieldData* owner) : index_(index), owner_(owner) {}

  std::uint32_t index_ = 0;
  const detail::FieldData* owner_ = nullptr;
};

struct FieldOptions {
  // Defaults to the lexicographically smallest monic irreducible polynomial.
  std::optional<std::vector<std::uint32_t>> modulus;
  // 0 picks the primitive element with smallest index, 1 the next one, ...
  std::uint32_t primitive_rank = 0;
  std::uint64_t max_order = kDefaultMaxFieldOrder;
};

// GF(p^m) backed by exp/log tables. Copies share the same immutable tables.
class FiniteField {
public:
  const FieldParams& params() const;
  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint32_t order() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement omega() const;
  // omega^e, e taken mod q-1.
  FieldElement omega_pow(std::int64_t e) const;

  FieldElement element(std::uint32_t index) const;
  FieldElement from_coefficients(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coefficients(const FieldElement& x) const;
  bool contains(const FieldElement& x) const noexcept;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, std::int64_t e) const;
  // x -> x^(p^times)
  FieldElement frobenius(const FieldElement& x, unsigned times = 1) const;
  // Discrete log base omega; x must be nonzero.
  std::uint32_t log(const FieldElement& x) const;

  // Index-level arithmetic for inner loops; no ownership checks.
  std::uint32_t add_index(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_index(std::uint32_t a) const;
  std::uint32_t mul_index(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow_index(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t exp_index(std::uint64_t e) const;

  // Coefficients rendered as "c0,c1,...,c_{m-1}".
  std::string to_string(const FieldElement& x) const;

private:
  friend FiniteField build_field(std::uint32_t, std::uint32_t, const FieldOptions&);
  explicit FiniteField(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

  void check(const FieldElement& x) const;

  std::shared_ptr<const detail::FieldData> data_;
};

FiniteField build_field(std::uint32_t p, std::uint32_t m, const FieldOptions& options = {});

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);

// Smallest monic irreducible of degree m, coefficients compared high degree first.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t m);

// Comma-separated coefficients ascending by degree, e.g. "1,0,1" for 1 + x^2.
std::string format_coefficients(std::span<const std::uint32_t> coeffs);
std::vector<std::uint32_t> parse_coefficients(const std::string& text);

// The multiplicative subgroup {x^k : x != 0}.
class ResidueSet {
public:
  ResidueSet(std::uint64_t k, std::vector<std::uint32_t> members, std::uint32_t order);

  std::uint64_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return members_.size(); }
  // Sorted canonical indices.
  const std::vector<std::uint32_t>& members() const noexcept { return members_; }
  bool contains_index(std::uint32_t index) const { return flags_[index]; }
  bool contains(const FieldElement& x) const { return flags_[x.index()]; }

private:
  std::uint64_t k_;
  std::vector<std::uint32_t> members_;
  std::vector<bool> flags_;
};

ResidueSet kth_power_residues(const FiniteField& field, std::uint64_t k);

// F_{p^a} inside F_{p^{ab}} with the F_{p^a}-basis {1, w^k, ..., w^{(b-1)k}}.
// Setup inverts one (ab)x(ab) matrix over F_p; each query is a mat-vec product.
class SubfieldCoordinates {
public:
  SubfieldCoordinates(FiniteField field, std::uint32_t a, std::uint32_t b, std::uint64_t k);

  const FiniteField& field() const noexcept { return field_; }
  std::uint32_t a() const noexcept { return a_; }
  std::uint32_t b() const noexcept { return b_; }
  std::uint64_t k() const noexcept { return k_; }
  const std::vector<FieldElement>& basis() const noexcept { return basis_; }

  std::vector<FieldElement> coordinates(const FieldElement& x) const;
  FieldElement reconstruct(std::span<const FieldElement> coords) const;
  bool in_subfield(const FieldElement& x) const;

private:
  FiniteField field_;
  std::uint32_t a_;
  std::uint32_t b_;
  std::uint64_t k_;
  std::vector<FieldElement> basis_;
  // F_p-basis {g^0, ..., g^{a-1}} of the subfield, g a generator of it.
  std::vector<FieldElement> subfield_basis_;
  // Row-major (ab)x(ab) inverse mapping F_p-coordinates of x to the digits
  // d_{i,j} with x = sum_i (sum_j d_{i,j} g^j) w^{ik}; row index i*a + j.
  std::vector<std::uint32_t> inverse_;
};

std::vector<FieldElement> subfield_coordinates(const FiniteField& field, std::uint32_t a,
                                               std::uint32_t b, std::uint64_t k,
                                               const FieldElement& x);

// Entry i is true iff coords[i] is zero.
std::vector<bool> zero_pattern(std::span<const FieldElement> coords);

}  // namespace diagwalk
