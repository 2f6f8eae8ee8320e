#include "diagwalk/finite_field.hpp"

#include <algorithm>
#include <sstream>

#include "diagwalk/arith.hpp"

namespace diagwalk {

namespace detail {

struct FieldData {
  FieldParams params;
  std::uint32_t q = 0;
  std::uint32_t omega = 0;
  std::vector<std::uint32_t> exp;  // exp[i] = omega^i, i < q-1
  std::vector<std::uint32_t> log;  // log[exp[i]] = i; log[0] unused
  std::vector<std::uint32_t> neg;
  std::vector<std::uint32_t> add;  // full table when q is small, else empty
  std::vector<std::uint32_t> place;  // p^i
};

}  // namespace detail

namespace {

constexpr std::uint32_t kAddTableMaxOrder = 1024;

using Poly = std::vector<std::uint32_t>;

// Remainder of num modulo a monic divisor, coefficients ascending.
Poly poly_rem(Poly num, const Poly& monic, std::uint32_t p) {
  const std::size_t d = monic.size() - 1;
  for (std::size_t top = num.size(); top-- > d;) {
    const std::uint64_t c = num[top];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= d; ++i) {
      const std::size_t pos = top - d + i;
      num[pos] = static_cast<std::uint32_t>((num[pos] + (p - c) * std::uint64_t{monic[i]} % p) % p);
    }
  }
  num.resize(std::min(num.size(), d));
  num.resize(d, 0);
  return num;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p) {
  Poly prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  }
  return poly_rem(std::move(prod), modulus, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& modulus, std::uint32_t p) {
  const std::size_t m = modulus.size() - 1;
  Poly result(m, 0);
  result[0] = 1;
  while (e > 0) {
    if (e & 1u) result = poly_mulmod(result, base, modulus, p);
    e >>= 1;
    if (e > 0) base = poly_mulmod(base, base, modulus, p);
  }
  return result;
}

Poly digits_of(std::uint64_t index, std::uint32_t p, std::uint32_t m) {
  Poly out(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    out[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return out;
}

std::uint32_t index_of(const Poly& coeffs, std::uint32_t p) {
  std::uint64_t index = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) index = index * p + coeffs[i];
  return static_cast<std::uint32_t>(index);
}

bool is_one(const Poly& x) {
  if (x.empty() || x[0] != 1) return false;
  return std::all_of(x.begin() + 1, x.end(), [](std::uint32_t c) { return c == 0; });
}

}  // namespace

std::uint64_t FieldParams::order() const {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) q *= p;
  return q;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
  const std::size_t m = monic.size() - 1;
  const Poly f(monic.begin(), monic.end());
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      Poly g = digits_of(n, p, static_cast<std::uint32_t>(d));
      g.push_back(1);
      const Poly r = poly_rem(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t m) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  // Digit i of n is c_i, so increasing n compares c_{m-1} first.
  for (std::uint64_t n = 0; n < count; ++n) {
    Poly f = digits_of(n, p, m);
    f.push_back(1);
    if (is_irreducible(p, f)) return f;
  }
  throw Error(Errc::ReducibleModulus, "no irreducible polynomial found");
}

std::string format_coefficients(std::span<const std::uint32_t> coeffs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) out << ',';
    out << coeffs[i];
  }
  return out.str();
}

std::vector<std::uint32_t> parse_coefficients(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw Error(Errc::ParseError, "bad coefficient '" + item + "' in '" + text + "'");
    try {
      out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    } catch (const std::out_of_range&) {
      throw Error(Errc::ParseError, "coefficient out of range in '" + text + "'");
    }
  }
  if (out.empty() || text.back() == ',') throw Error(Errc::ParseError, "empty coefficient list '" + text + "'");
  return out;
}

FiniteField build_field(std::uint32_t p, std::uint32_t m, const FieldOptions& options) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(Errc::BadParameters, "field degree must be at least 1");
  std::uint64_t q = 0;
  const std::uint64_t cap = std::min<std::uint64_t>(options.max_order, 0xffffffffu);
  if (!checked_pow(p, m, cap, q))
    throw Error(Errc::FieldTooLarge, std::to_string(p) + "^" + std::to_string(m) + " exceeds the table cap " +
                                         std::to_string(cap));

  auto data = std::make_shared<detail::FieldData>();
  data->params.p = p;
  data->params.m = m;
  data->q = static_cast<std::uint32_t>(q);

  if (options.modulus) {
    const Poly& f = *options.modulus;
    if (f.size() != m + 1 || f.back() != 1)
      throw Error(Errc::ReducibleModulus, "modulus must be monic of degree " + std::to_string(m));
    if (std::any_of(f.begin(), f.end(), [p](std::uint32_t c) { return c >= p; }))
      throw Error(Errc::ReducibleModulus, "modulus coefficients must lie in [0, p)");
    if (!is_irreducible(p, f))
      throw Error(Errc::ReducibleModulus, format_coefficients(f) + " is reducible over F_" + std::to_string(p));
    data->params.modulus = f;
  } else {
    data->params.modulus = smallest_irreducible(p, m);
  }
  const Poly& modulus = data->params.modulus;

  // Primitive element: the order test against every prime factor of q-1.
  const std::uint64_t group = q - 1;
  const auto factors = factorize(group);
  std::uint32_t seen = 0;
  std::uint32_t omega = 0;
  for (std::uint64_t g = 1; g < q && omega == 0; ++g) {
    const Poly x = digits_of(g, p, m);
    bool primitive = true;
    for (auto [prime, e] : factors) {
      (void)e;
      if (is_one(poly_powmod(x, group / prime, modulus, p))) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;
    if (seen++ == options.primitive_rank) omega = static_cast<std::uint32_t>(g);
  }
  if (omega == 0) throw Error(Errc::BadParameters, "primitive_rank exceeds the number of primitive elements");
  data->omega = omega;

  data->place.resize(m);
  for (std::uint32_t i = 0; i < m; ++i) data->place[i] = i == 0 ? 1 : data->place[i - 1] * p;

  data->exp.resize(group);
  data->log.assign(q, 0);
  const Poly w = digits_of(omega, p, m);
  Poly current(m, 0);
  current[0] = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    const std::uint32_t idx = index_of(current, p);
    if (idx == 0 || (i > 0 && idx == 1)) throw Error(Errc::BadParameters, "internal: omega is not primitive");
    data->exp[i] = idx;
    data->log[idx] = static_cast<std::uint32_t>(i);
    current = poly_mulmod(current, w, modulus, p);
  }

  data->neg.resize(q);
  for (std::uint32_t x = 0; x < q; ++x) {
    Poly c = digits_of(x, p, m);
    for (auto& v : c) v = (p - v) % p;
    data->neg[x] = index_of(c, p);
  }
  if (q <= kAddTableMaxOrder) {
    data->add.resize(std::size_t{q} * q);
    for (std::uint32_t x = 0; x < q; ++x) {
      const Poly cx = digits_of(x, p, m);
      for (std::uint32_t y = 0; y < q; ++y) {
        Poly cy = digits_of(y, p, m);
        for (std::uint32_t i = 0; i < m; ++i) cy[i] = (cy[i] + cx[i]) % p;
        data->add[std::size_t{x} * q + y] = index_of(cy, p);
      }
    }
  }
  return FiniteField(std::move(data));
}

const FieldParams& FiniteField::params() const { return data_->params; }
std::uint32_t FiniteField::characteristic() const { return data_->params.p; }
std::uint32_t FiniteField::degree() const { return data_->params.m; }
std::uint32_t FiniteField::order() const { return data_->q; }

FieldElement FiniteField::zero() const { return FieldElement(0, data_.get()); }
FieldElement FiniteField::one() const { return FieldElement(1, data_.get()); }
FieldElement FiniteField::omega() const { return FieldElement(data_->omega, data_.get()); }

FieldElement FiniteField::omega_pow(std::int64_t e) const {
  const std::int64_t group = data_->q - 1;
  std::int64_t r = e % group;
  if (r < 0) r += group;
  return FieldElement(data_->exp[static_cast<std::size_t>(r)], data_.get());
}

FieldElement FiniteField::element(std::uint32_t index) const {
  if (index >= data_->q)
    throw Error(Errc::BadParameters, "element index " + std::to_string(index) + " outside field of order " +
                                         std::to_string(data_->q));
  return FieldElement(index, data_.get());
}

FieldElement FiniteField::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  const auto& prm = data_->params;
  if (coeffs.size() != prm.m)
    throw Error(Errc::BadParameters, "expected " + std::to_string(prm.m) + " coefficients, got " +
                                         std::to_string(coeffs.size()));
  for (std::uint32_t c : coeffs)
    if (c >= prm.p) throw Error(Errc::BadParameters, "coefficient " + std::to_string(c) + " not in [0, p)");
  return FieldElement(index_of(Poly(coeffs.begin(), coeffs.end()), prm.p), data_.get());
}

std::vector<std::uint32_t> FiniteField::coefficients(const FieldElement& x) const {
  check(x);
  return digits_of(x.index(), data_->params.p, data_->params.m);
}

bool FiniteField::contains(const FieldElement& x) const noexcept { return x.owner_ == data_.get(); }

void FiniteField::check(const FieldElement& x) const {
  if (!contains(x)) throw Error(Errc::MixedFields, "element does not belong to this field");
}

std::uint32_t FiniteField::add_index(std::uint32_t a, std::uint32_t b) const {
  const auto& d = *data_;
  if (!d.add.empty()) return d.add[std::size_t{a} * d.q + b];
  const std::uint32_t p = d.params.p;
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < d.params.m; ++i) {
    out += ((a % p + b % p) % p) * d.place[i];
    a /= p;
    b /= p;
  }
  return out;
}

std::uint32_t FiniteField::neg_index(std::uint32_t a) const { return data_->neg[a]; }

std::uint32_t FiniteField::mul_index(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  const auto& d = *data_;
  return d.exp[(std::uint64_t{d.log[a]} + d.log[b]) % (d.q - 1)];
}

std::uint32_t FiniteField::pow_index(std::uint32_t a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const auto& d = *data_;
  return d.exp[mul_mod(d.log[a], e % (d.q - 1), d.q - 1)];
}

std::uint32_t FiniteField::exp_index(std::uint64_t e) const { return data_->exp[e % (data_->q - 1)]; }

FieldElement FiniteField::add(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  return FieldElement(add_index(a.index(), b.index()), data_.get());
}

FieldElement FiniteField::sub(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  return FieldElement(add_index(a.index(), neg_index(b.index())), data_.get());
}

FieldElement FiniteField::neg(const FieldElement& a) const {
  check(a);
  return FieldElement(neg_index(a.index()), data_.get());
}

FieldElement FiniteField::mul(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  return FieldElement(mul_index(a.index(), b.index()), data_.get());
}

FieldElement FiniteField::inv(const FieldElement& a) const {
  check(a);
  if (a.is_zero()) throw Error(Errc::BadParameters, "zero has no inverse");
  const auto& d = *data_;
  return FieldElement(d.exp[(d.q - 1 - d.log[a.index()]) % (d.q - 1)], data_.get());
}

FieldElement FiniteField::pow(const FieldElement& a, std::int64_t e) const {
  check(a);
  if (e < 0) return pow(inv(a), -e);
  return FieldElement(pow_index(a.index(), static_cast<std::uint64_t>(e)), data_.get());
}

FieldElement FiniteField::frobenius(const FieldElement& x, unsigned times) const {
  check(x);
  if (x.is_zero()) return x;
  const std::uint64_t e = pow_mod(data_->params.p, times, data_->q - 1);
  return FieldElement(data_->exp[mul_mod(data_->log[x.index()], e, data_->q - 1)], data_.get());
}

std::uint32_t FiniteField::log(const FieldElement& x) const {
  check(x);
  if (x.is_zero()) throw Error(Errc::BadParameters, "log of zero");
  return data_->log[x.index()];
}

std::string FiniteField::to_string(const FieldElement& x) const { return format_coefficients(coefficients(x)); }

ResidueSet::ResidueSet(std::uint64_t k, std::vector<std::uint32_t> members, std::uint32_t order)
    : k_(k), members_(std::move(members)), flags_(order, false) {
  std::sort(members_.begin(), members_.end());
  for (std::uint32_t m : members_) flags_[m] = true;
}

ResidueSet kth_power_residues(const FiniteField& field, std::uint64_t k) {
  const std::uint32_t q = field.order();
  if (k == 0 || (q - 1) % k != 0)
    throw Error(Errc::KDoesNotDivide, "k=" + std::to_string(k) + " does not divide q-1=" + std::to_string(q - 1));
  std::vector<bool> hit(q, false);
  std::vector<std::uint32_t> members;
  members.reserve((q - 1) / k);
  for (std::uint32_t x = 1; x < q; ++x) {
    const std::uint32_t y = field.pow_index(x, k);
    if (!hit[y]) {
      hit[y] = true;
      members.push_back(y);
    }
  }
  return ResidueSet(k, std::move(members), q);
}

SubfieldCoordinates::SubfieldCoordinates(FiniteField field, std::uint32_t a, std::uint32_t b, std::uint64_t k)
    : field_(std::move(field)), a_(a), b_(b), k_(k) {
  const std::uint32_t p = field_.characteristic();
  const std::uint32_t m = field_.degree();
  if (a == 0 || b == 0 || std::uint64_t{a} * b != m)
    throw Error(Errc::BadDecomposition, "m=" + std::to_string(m) + " != a*b=" + std::to_string(a) + "*" +
                                            std::to_string(b));
  if (k == 0) throw Error(Errc::BadParameters, "k must be positive");

  const std::uint64_t q = field_.order();
  std::uint64_t sub_order = 1;
  for (std::uint32_t i = 0; i < a; ++i) sub_order *= p;
  const FieldElement g = field_.omega_pow(static_cast<std::int64_t>((q - 1) / (sub_order - 1)));

  for (std::uint32_t j = 0; j < a; ++j) subfield_basis_.push_back(field_.pow(g, j));
  for (std::uint32_t i = 0; i < b; ++i)
    basis_.push_back(field_.omega_pow(static_cast<std::int64_t>(mul_mod(i, k, q - 1))));

  // Column i*a + j holds the F_p-coordinates of g^j * w^{ik}.
  const std::size_t n = m;
  std::vector<std::uint64_t> mat(n * 2 * n, 0);
  for (std::uint32_t i = 0; i < b; ++i) {
    for (std::uint32_t j = 0; j < a; ++j) {
      const auto col = field_.coefficients(field_.mul(subfield_basis_[j], basis_[i]));
      for (std::size_t row = 0; row < n; ++row) mat[row * 2 * n + i * a + j] = col[row];
    }
  }
  for (std::size_t row = 0; row < n; ++row) mat[row * 2 * n + n + row] = 1;

  // Gauss-Jordan over F_p on [M | I].
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && mat[pivot * 2 * n + col] == 0) ++pivot;
    if (pivot == n)
      throw Error(Errc::DependentBasis, "{1, w^k, ..., w^{(b-1)k}} is not an F_{p^a}-basis for k=" +
                                            std::to_string(k));
    if (pivot != col)
      for (std::size_t c = 0; c < 2 * n; ++c) std::swap(mat[pivot * 2 * n + c], mat[col * 2 * n + c]);
    const std::uint64_t inv = pow_mod(mat[col * 2 * n + col], p - 2, p);
    for (std::size_t c = 0; c < 2 * n; ++c) mat[col * 2 * n + c] = mat[col * 2 * n + c] * inv % p;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col) continue;
      const std::uint64_t factor = mat[row * 2 * n + col];
      if (factor == 0) continue;
      for (std::size_t c = 0; c < 2 * n; ++c)
        mat[row * 2 * n + c] = (mat[row * 2 * n + c] + (p - factor) * mat[col * 2 * n + c]) % p;
    }
  }
  inverse_.resize(n * n);
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t c = 0; c < n; ++c) inverse_[row * n + c] = static_cast<std::uint32_t>(mat[row * 2 * n + n + c]);
}

std::vector<FieldElement> SubfieldCoordinates::coordinates(const FieldElement& x) const {
  const std::uint32_t p = field_.characteristic();
  const std::size_t n = field_.degree();
  const auto v = field_.coefficients(x);
  std::vector<FieldElement> out;
  out.reserve(b_);
  for (std::uint32_t i = 0; i < b_; ++i) {
    FieldElement c = field_.zero();
    for (std::uint32_t j = 0; j < a_; ++j) {
      std::uint64_t digit = 0;
      const std::size_t row = std::size_t{i} * a_ + j;
      for (std::size_t col = 0; col < n; ++col) digit = (digit + std::uint64_t{inverse_[row * n + col]} * v[col]) % p;
      if (digit != 0)
        c = field_.add(c, field_.mul(field_.element(static_cast<std::uint32_t>(digit)), subfield_basis_[j]));
    }
    out.push_back(c);
  }
  return out;
}

FieldElement SubfieldCoordinates::reconstruct(std::span<const FieldElement> coords) const {
  if (coords.size() != b_)
    throw Error(Errc::BadParameters, "expected " + std::to_string(b_) + " coordinates");
  FieldElement x = field_.zero();
  for (std::uint32_t i = 0; i < b_; ++i) {
    if (!in_subfield(coords[i])) throw Error(Errc::BadParameters, "coordinate outside the subfield");
    x = field_.add(x, field_.mul(coords[i], basis_[i]));
  }
  return x;
}

bool SubfieldCoordinates::in_subfield(const FieldElement& x) const { return field_.frobenius(x, a_) == x; }

std::vector<FieldElement> subfield_coordinates(const FiniteField& field, std::uint32_t a, std::uint32_t b,
                                               std::uint64_t k, const FieldElement& x) {
  return SubfieldCoordinates(field, a, b, k).coordinates(x);
}

std::vector<bool> zero_pattern(std::span<const FieldElement> coords) {
  std::vector<bool> out;
  out.reserve(coords.size());
  for (const auto& c : coords) out.push_back(c.is_zero());
  return out;
}

}  // namespace diagwalk
