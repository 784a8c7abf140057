#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "frobdet/error.hpp"

namespace frobdet {

bool is_prime(std::uint64_t n);

/// Arithmetic on canonical representatives in [0, p) of the prime field F_p.
/// Cheap to copy; this is the scalar context used by all hot loops.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxCharacteristic = 1u << 16;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  std::uint32_t reduce(std::int64_t a) const noexcept {
    const std::int64_t r = a % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  /// Throws Error(ZeroInverse) on a == 0.
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// Dense univariate polynomial over F_p, coefficients low degree first.
using UniPoly = std::vector<std::uint32_t>;

/// Smallest monic irreducible of degree k over F_p, ordering candidates by
/// their coefficient vectors read from t^{k-1} down to t^0.
UniPoly find_irreducible(std::uint32_t p, int k);

bool is_irreducible(const UniPoly& f, std::uint32_t p);

/// F_{p^k} = F_p[t]/(modulus). For k = 1 the modulus is absent.
class FieldSpec {
 public:
  static constexpr int kMaxDegree = 16;

  static std::shared_ptr<const FieldSpec> prime(std::uint32_t p);
  static std::shared_ptr<const FieldSpec> extension(std::uint32_t p, int k);
  /// Validates primality of p and irreducibility of the monic modulus.
  static std::shared_ptr<const FieldSpec> with_modulus(std::uint32_t p, UniPoly modulus);

  std::uint32_t characteristic() const noexcept { return base_.characteristic(); }
  int degree() const noexcept { return k_; }
  const PrimeField& base() const noexcept { return base_; }
  /// Empty when degree() == 1.
  const UniPoly& modulus() const noexcept { return modulus_; }
  /// p^k, saturating at UINT64_MAX.
  std::uint64_t order() const noexcept;

 private:
  FieldSpec(PrimeField base, int k, UniPoly modulus) : base_(base), k_(k), modulus_(std::move(modulus)) {}

  PrimeField base_;
  int k_;
  UniPoly modulus_;
};

/// Element of a FieldSpec. The spec must outlive every element that refers to it.
class FieldElement {
 public:
  using Coeffs = std::array<std::uint32_t, FieldSpec::kMaxDegree>;

  FieldElement() = default;
  FieldElement(const FieldSpec& spec, std::uint32_t base_value);
  FieldElement(const FieldSpec& spec, const Coeffs& coeffs);

  static FieldElement zero(const FieldSpec& spec) { return {spec, 0u}; }
  static FieldElement one(const FieldSpec& spec) { return {spec, 1u}; }
  /// The element whose base-p digits are the coefficients: index 0 .. p^k - 1.
  static FieldElement from_index(const FieldSpec& spec, std::uint64_t index);

  const FieldSpec& spec() const { return *spec_; }
  const Coeffs& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True when the element lies in the prime subfield.
  bool in_base_field() const noexcept;

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement operator-() const;
  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.c_ == b.c_; }

  /// "3" in F_p; "t^3+1" style otherwise.
  std::string to_string() const;

 private:
  const FieldSpec* spec_ = nullptr;
  Coeffs c_{};
};

/// Convenience for tests and callers that only hold the prime field.
inline std::uint32_t field_inv(const PrimeField& f, std::uint32_t a) { return f.inv(a); }
inline FieldElement field_inv(const FieldElement& a) { return a.inverse(); }

}  // namespace frobdet
