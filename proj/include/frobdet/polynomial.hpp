#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "frobdet/field.hpp"

namespace frobdet {

inline constexpr int kMaxVars = 8;

/// Exponent vector in n+1 variables. Compared in graded lexicographic order
/// with x0 > x1 > ... > xn.
class Monomial {
 public:
  using Exponents = std::array<std::uint32_t, kMaxVars>;

  Monomial() = default;
  explicit Monomial(int nvars);
  Monomial(int nvars, std::span<const std::uint32_t> exps);
  Monomial(std::initializer_list<std::uint32_t> exps);

  static Monomial variable(int nvars, int i);

  int nvars() const noexcept { return nvars_; }
  std::uint32_t operator[](int i) const noexcept { return e_[i]; }
  std::uint32_t& operator[](int i) noexcept { return e_[i]; }
  std::uint64_t degree() const noexcept;
  const Exponents& exponents() const noexcept { return e_; }

  bool divides(const Monomial& other) const noexcept;
  /// `divisor` must divide *this.
  Monomial quotient(const Monomial& divisor) const;
  Monomial pow(std::uint64_t e) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.e_ == b.e_;
  }

  std::string to_string() const;

 private:
  Exponents e_{};
  std::uint8_t nvars_ = 0;
};

/// Strict graded-lex "a < b".
bool grlex_less(const Monomial& a, const Monomial& b) noexcept;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// All monomials of the given degree, sorted in descending grlex order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);
/// C(degree + nvars - 1, nvars - 1); 0 for negative degree.
std::size_t count_monomials(int nvars, int degree);

/// Sparse homogeneous polynomial over F_p. Homogeneity is enforced on every
/// insertion; the zero polynomial carries an explicit degree tag, which may be
/// negative (a zero entry in a matrix slot of negative degree).
class HomogPoly {
 public:
  using Terms = std::unordered_map<Monomial, std::uint32_t, MonomialHash>;

  HomogPoly(PrimeField field, int nvars, int degree);

  static HomogPoly constant(PrimeField field, int nvars, std::uint32_t c);
  static HomogPoly monomial(PrimeField field, const Monomial& m, std::uint32_t c = 1);
  static HomogPoly variable(PrimeField field, int nvars, int i);

  const PrimeField& field() const noexcept { return field_; }
  int nvars() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }

  /// Terms in descending grlex order (deterministic iteration).
  std::vector<std::pair<Monomial, std::uint32_t>> sorted_terms() const;
  /// Largest monomial in grlex order; requires !is_zero().
  std::pair<Monomial, std::uint32_t> leading_term() const;

  /// Adds c * m; throws NotHomogeneous when deg m != degree().
  void add_term(const Monomial& m, std::uint32_t c);
  std::uint32_t coeff(const Monomial& m) const;

  /// Re-tag the degree of a zero polynomial; no-op check for nonzero ones.
  HomogPoly with_degree(int degree) const;

  HomogPoly& operator+=(const HomogPoly& o);
  HomogPoly& operator-=(const HomogPoly& o);
  HomogPoly operator-() const;
  HomogPoly scaled(std::uint32_t c) const;

  friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
  friend HomogPoly operator-(HomogPoly a, const HomogPoly& b) { return a -= b; }
  friend bool operator==(const HomogPoly& a, const HomogPoly& b);

  std::uint32_t evaluate(std::span<const std::uint32_t> point) const;
  FieldElement evaluate(std::span<const FieldElement> point) const;

 private:
  void check_compatible(const HomogPoly& o) const;

  PrimeField field_;
  int nvars_;
  int degree_;
  Terms terms_;
};

HomogPoly poly_mul(const HomogPoly& f, const HomogPoly& g);
inline HomogPoly operator*(const HomogPoly& f, const HomogPoly& g) { return poly_mul(f, g); }

/// f^{p^t}: raises every monomial to the p^t-th power (coefficients are fixed by Frobenius on F_p).
HomogPoly frobenius_power(const HomogPoly& f, int t = 1);

/// Exact power: base-p digits of e combined with frobenius_power.
HomogPoly poly_pow(const HomogPoly& f, std::uint64_t e);

std::uint32_t coeff_of(const HomogPoly& f, const Monomial& m);
/// Formal exponent vector; any negative entry yields 0.
std::uint32_t coeff_of(const HomogPoly& f, std::span<const std::int64_t> exponents);

/// Normal form of f modulo the principal ideal (G): single-divisor division in
/// grlex order, so no monomial of the result is divisible by lead(G).
HomogPoly reduce_mod_G(const HomogPoly& f, const HomogPoly& G);

/// f / g when g divides f exactly; throws Error(Mismatch) otherwise.
HomogPoly divide_exact(const HomogPoly& f, const HomogPoly& g);

HomogPoly partial_derivative(const HomogPoly& f, int var);

// ---------------------------------------------------------------------------
// Text form: poly := term (('+'|'-') term)*, term := coeff ('*'? monfactor)* | monfactor ('*'? monfactor)*,
// monfactor := var ('^' uint)?, var := 'x' uint | one of x, y, z, w (aliases of x0..x3).

struct ParsedPoly {
  HomogPoly poly;
  int max_var_index;  // largest variable index referenced, -1 for constants
};

/// nvars <= 0 infers max(3, max index + 1) variables. A polynomial that vanishes
/// mod p raises ZeroModP unless allow_zero is set.
ParsedPoly parse_poly(std::string_view text, PrimeField field, int nvars = 0, bool allow_zero = false);

/// Indexed names x0..xn for nvars > 4, x,y,z,w aliases otherwise.
std::string to_string(const HomogPoly& f);

}  // namespace frobdet
