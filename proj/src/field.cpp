#include "frobdet/field.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <tuple>
#include <utility>

namespace frobdet {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::VarMismatch: return "VarMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::ZeroModP: return "ZeroModP";
    case ErrorCode::NotACurve: return "NotACurve";
    case ErrorCode::GenusZero: return "GenusZero";
    case ErrorCode::NonInjectivePower: return "NonInjectivePower";
    case ErrorCode::NoStabilization: return "NoStabilization";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::FreenessCheckFailed: return "FreenessCheckFailed";
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::NotSkew: return "NotSkew";
    case ErrorCode::OddSize: return "OddSize";
    case ErrorCode::DegenerateSamples: return "DegenerateSamples";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::DegreeIncompatible: return "DegreeIncompatible";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= kMaxCharacteristic || !is_prime(p))
    throw Error(ErrorCode::InvalidArgument, "characteristic must be a prime below 2^16, got " + std::to_string(p));
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  a %= p_;
  if (a == 0) throw Error(ErrorCode::ZeroInverse, "inverse of zero in F_" + std::to_string(p_));
  // extended Euclid on (a, p)
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  return reduce(s0);
}

// ---------------------------------------------------------------------------
// Univariate helpers over F_p

namespace {

void trim(UniPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

UniPoly uni_mod(UniPoly a, const UniPoly& m, const PrimeField& F) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = F.inv(m.back());
  while (a.size() > dm && !a.empty()) {
    const std::uint32_t factor = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(factor, m[i]));
    trim(a);
  }
  return a;
}

UniPoly uni_mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& m, const PrimeField& F) {
  if (a.empty() || b.empty()) return {};
  UniPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
  }
  return uni_mod(std::move(prod), m, F);
}

UniPoly uni_powmod(UniPoly base, std::uint64_t e, const UniPoly& m, const PrimeField& F) {
  UniPoly result{1};
  base = uni_mod(std::move(base), m, F);
  while (e > 0) {
    if (e & 1u) result = uni_mulmod(result, base, m, F);
    base = uni_mulmod(base, base, m, F);
    e >>= 1u;
  }
  return result;
}

UniPoly uni_gcd(UniPoly a, UniPoly b, const PrimeField& F) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UniPoly r = uni_mod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_irreducible(const UniPoly& f_in, std::uint32_t p) {
  const PrimeField F(p);
  UniPoly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const int k = static_cast<int>(f.size()) - 1;
  if (k == 1) return true;
  // Ben-Or: f has no factor of degree i iff gcd(t^{p^i} - t, f) = 1.
  UniPoly t_pow{0, 1};
  for (int i = 1; i <= k / 2; ++i) {
    t_pow = uni_powmod(t_pow, p, f, F);
    UniPoly diff = t_pow;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = F.sub(diff[1], 1);
    const UniPoly g = uni_gcd(f, diff, F);
    if (g.size() != 1) return false;
  }
  return true;
}

UniPoly find_irreducible(std::uint32_t p, int k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "find_irreducible requires k >= 2");
  const PrimeField F(p);  // validates p
  UniPoly f(static_cast<std::size_t>(k) + 1, 0);
  f[k] = 1;
  // Enumerate the lower coefficients as a base-p counter with t^{k-1} most significant.
  while (true) {
    if (f[0] != 0 && is_irreducible(f, p)) return f;
    int i = 0;
    while (i < k) {
      if (++f[i] < p) break;
      f[i] = 0;
      ++i;
    }
    if (i == k) break;
  }
  throw Error(ErrorCode::Internal, "no irreducible polynomial found");
}

// ---------------------------------------------------------------------------

std::shared_ptr<const FieldSpec> FieldSpec::prime(std::uint32_t p) {
  return std::shared_ptr<const FieldSpec>(new FieldSpec(PrimeField(p), 1, {}));
}

std::shared_ptr<const FieldSpec> FieldSpec::extension(std::uint32_t p, int k) {
  if (k == 1) return prime(p);
  if (k < 1 || k > kMaxDegree) throw Error(ErrorCode::InvalidArgument, "extension degree out of range");
  return std::shared_ptr<const FieldSpec>(new FieldSpec(PrimeField(p), k, find_irreducible(p, k)));
}

std::shared_ptr<const FieldSpec> FieldSpec::with_modulus(std::uint32_t p, UniPoly modulus) {
  const PrimeField F(p);
  trim(modulus);
  const int k = static_cast<int>(modulus.size()) - 1;
  if (k < 2 || k > kMaxDegree) throw Error(ErrorCode::InvalidArgument, "modulus degree out of range");
  if (modulus.back() != 1) throw Error(ErrorCode::InvalidArgument, "modulus must be monic");
  if (!is_irreducible(modulus, p)) throw Error(ErrorCode::InvalidArgument, "modulus is reducible");
  return std::shared_ptr<const FieldSpec>(new FieldSpec(F, k, std::move(modulus)));
}

std::uint64_t FieldSpec::order() const noexcept {
  std::uint64_t q = 1;
  for (int i = 0; i < k_; ++i) {
    if (q > std::numeric_limits<std::uint64_t>::max() / characteristic()) return std::numeric_limits<std::uint64_t>::max();
    q *= characteristic();
  }
  return q;
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(const FieldSpec& spec, std::uint32_t base_value) : spec_(&spec) {
  c_[0] = base_value % spec.characteristic();
}

FieldElement::FieldElement(const FieldSpec& spec, const Coeffs& coeffs) : spec_(&spec) {
  for (int i = 0; i < spec.degree(); ++i) c_[i] = coeffs[i] % spec.characteristic();
}

FieldElement FieldElement::from_index(const FieldSpec& spec, std::uint64_t index) {
  Coeffs c{};
  for (int i = 0; i < spec.degree(); ++i) {
    c[i] = static_cast<std::uint32_t>(index % spec.characteristic());
    index /= spec.characteristic();
  }
  return {spec, c};
}

bool FieldElement::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FieldElement::is_one() const noexcept {
  return c_[0] == 1 && std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FieldElement::in_base_field() const noexcept {
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  const PrimeField& F = spec_->base();
  for (int i = 0; i < spec_->degree(); ++i) c_[i] = F.add(c_[i], o.c_[i]);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  const PrimeField& F = spec_->base();
  for (int i = 0; i < spec_->degree(); ++i) c_[i] = F.sub(c_[i], o.c_[i]);
  return *this;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  const PrimeField& F = spec_->base();
  for (int i = 0; i < spec_->degree(); ++i) r.c_[i] = F.neg(r.c_[i]);
  return r;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  const PrimeField& F = spec_->base();
  const int k = spec_->degree();
  if (k == 1) {
    c_[0] = F.mul(c_[0], o.c_[0]);
    return *this;
  }
  std::array<std::uint64_t, 2 * FieldSpec::kMaxDegree> prod{};
  for (int i = 0; i < k; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < k; ++j) prod[i + j] += static_cast<std::uint64_t>(c_[i]) * o.c_[j];
  }
  std::array<std::uint32_t, 2 * FieldSpec::kMaxDegree> red{};
  for (int i = 0; i < 2 * k - 1; ++i) red[i] = static_cast<std::uint32_t>(prod[i] % F.characteristic());
  const UniPoly& m = spec_->modulus();  // monic
  for (int top = 2 * k - 2; top >= k; --top) {
    const std::uint32_t factor = red[top];
    if (factor == 0) continue;
    red[top] = 0;
    for (int i = 0; i < k; ++i) red[top - k + i] = F.sub(red[top - k + i], F.mul(factor, m[i]));
  }
  for (int i = 0; i < k; ++i) c_[i] = red[i];
  return *this;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement result = one(*spec_);
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroInverse, "inverse of zero field element");
  if (spec_->degree() == 1) return {*spec_, spec_->base().inv(c_[0])};
  // a^{q-2} in the multiplicative group of order q - 1.
  return pow(spec_->order() - 2);
}

std::string FieldElement::to_string() const {
  if (spec_ == nullptr || spec_->degree() == 1) return std::to_string(c_[0]);
  std::ostringstream out;
  bool first = true;
  for (int i = spec_->degree() - 1; i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0) {
      out << c_[i];
      continue;
    }
    if (c_[i] != 1) out << c_[i] << '*';
    out << 't';
    if (i > 1) out << '^' << i;
  }
  if (first) out << '0';
  return out.str();
}

}  // namespace frobdet
