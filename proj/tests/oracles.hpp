// Independent reference computations used by the tests. Nothing here calls the
// library's reduction, power, rank or module code; inputs and outputs are plain
// exponent maps and integer matrices.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace oracle {

using Exps = std::vector<int>;
using Poly = std::map<Exps, std::int64_t>;  // exponent vector -> coefficient in [0, p)

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline std::int64_t inv(std::int64_t a, std::int64_t p) {
  // Fermat: a^(p-2).
  std::int64_t r = 1, b = mod(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline Poly mul(const Poly& f, const Poly& g, std::int64_t p) {
  Poly out;
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g) {
      Exps e(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
      out[e] = mod(out[e] + ca * cb, p);
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// Naive repeated multiplication.
inline Poly power(const Poly& f, int e, std::int64_t p, int nvars) {
  Poly r{{Exps(static_cast<std::size_t>(nvars), 0), 1}};
  for (int i = 0; i < e; ++i) r = mul(r, f, p);
  return r;
}

inline std::int64_t coeff(const Poly& f, const Exps& e) {
  auto it = f.find(e);
  return it == f.end() ? 0 : it->second;
}

/// Rank of an integer matrix mod p by plain Gaussian elimination.
inline int rank(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  int r = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (mod(a[i][c], p) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    const std::int64_t iv = inv(a[r][c], p);
    for (auto& v : a[r]) v = mod(v * iv, p);
    for (int i = 0; i < rows; ++i) {
      if (i == r || mod(a[i][c], p) == 0) continue;
      const std::int64_t f = a[i][c];
      for (int k = 0; k < cols; ++k) a[i][k] = mod(a[i][k] - f * a[r][k], p);
    }
    ++r;
  }
  return r;
}

/// Null space basis (columns) of an integer matrix mod p.
inline std::vector<std::vector<std::int64_t>> kernel(std::vector<std::vector<std::int64_t>> a, int cols, std::int64_t p) {
  const int rows = static_cast<int>(a.size());
  std::vector<int> pivcol;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (mod(a[i][c], p) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    const std::int64_t iv = inv(a[r][c], p);
    for (auto& v : a[r]) v = mod(v * iv, p);
    for (int i = 0; i < rows; ++i) {
      if (i == r || mod(a[i][c], p) == 0) continue;
      const std::int64_t f = a[i][c];
      for (int k = 0; k < cols; ++k) a[i][k] = mod(a[i][k] - f * a[r][k], p);
    }
    pivcol.push_back(c);
    ++r;
  }
  std::vector<std::vector<std::int64_t>> basis;
  for (int free = 0; free < cols; ++free) {
    if (std::find(pivcol.begin(), pivcol.end(), free) != pivcol.end()) continue;
    std::vector<std::int64_t> v(static_cast<std::size_t>(cols), 0);
    v[static_cast<std::size_t>(free)] = 1;
    for (int i = 0; i < static_cast<int>(pivcol.size()); ++i) v[static_cast<std::size_t>(pivcol[static_cast<std::size_t>(i)])] = mod(-a[i][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::int64_t binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// dim of degree-j forms in nvars variables modulo a degree-d form.
inline std::int64_t quotient_dim(int nvars, int d, int j) {
  if (j < 0) return 0;
  return binom(j + nvars - 1, nvars - 1) - binom(j - d + nvars - 1, nvars - 1);
}

// ---------------------------------------------------------------------------
// Univariate polynomials over F_p for the irreducibility sieve; low degree first.

using Uni = std::vector<std::int64_t>;

inline Uni uni_rem(Uni a, const Uni& b, std::int64_t p) {
  const std::int64_t lead_inv = inv(b.back(), p);
  while (a.size() >= b.size()) {
    const std::int64_t f = mod(a.back() * lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = mod(a[shift + i] - f * b[i], p);
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

/// Trial division by every monic polynomial of degree 1..k/2.
inline bool irreducible_by_sieve(const Uni& f, std::int64_t p) {
  const int k = static_cast<int>(f.size()) - 1;
  for (int dd = 1; dd <= k / 2; ++dd) {
    std::int64_t count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      Uni g(static_cast<std::size_t>(dd + 1), 0);
      g[static_cast<std::size_t>(dd)] = 1;
      std::int64_t rem = idx;
      for (int i = 0; i < dd; ++i) {
        g[static_cast<std::size_t>(i)] = rem % p;
        rem /= p;
      }
      if (uni_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

/// Smallest monic irreducible, comparing coefficients from t^{k-1} down to t^0.
inline Uni smallest_irreducible(std::int64_t p, int k) {
  std::int64_t count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (std::int64_t idx = 0; idx < count; ++idx) {
    Uni f(static_cast<std::size_t>(k + 1), 0);
    f[static_cast<std::size_t>(k)] = 1;
    std::int64_t rem = idx;
    for (int i = 0; i < k; ++i) {
      f[static_cast<std::size_t>(i)] = rem % p;  // t^0 varies fastest
      rem /= p;
    }
    if (irreducible_by_sieve(f, p)) return f;
  }
  return {};
}

/// Product in F_p[t]/(m) by schoolbook multiplication and reduction.
inline Uni ext_mul(const Uni& a, const Uni& b, const Uni& m, std::int64_t p) {
  Uni prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = mod(prod[i + j] + a[i] * b[j], p);
  while (!prod.empty() && prod.back() == 0) prod.pop_back();
  return uni_rem(prod, m, p);
}

/// Inverse in F_p[t]/(m) by exhaustive search.
inline std::optional<Uni> ext_inverse_search(const Uni& a, const Uni& m, std::int64_t p) {
  const int k = static_cast<int>(m.size()) - 1;
  std::int64_t count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (std::int64_t idx = 1; idx < count; ++idx) {
    Uni b(static_cast<std::size_t>(k), 0);
    std::int64_t rem = idx;
    for (int i = 0; i < k; ++i) {
      b[static_cast<std::size_t>(i)] = rem % p;
      rem /= p;
    }
    while (!b.empty() && b.back() == 0) b.pop_back();
    if (ext_mul(a, b, m, p) == Uni{1}) return b;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Local cohomology model of H^1(O_X(m)) for a plane curve X = V(G) and the
// Frobenius on it. H^2(O_P2(k)) has basis x^-a y^-b z^-c, a, b, c >= 1,
// a + b + c = -k; multiplication by a monomial kills terms with an exponent >= 0.

inline std::vector<Exps> inverse_monomials(int k) {
  std::vector<Exps> out;
  const int total = -k;
  for (int a = 1; a <= total - 2; ++a)
    for (int b = 1; a + b <= total - 1; ++b) out.push_back({-a, -b, -(total - a - b)});
  return out;
}

/// Matrix of eta -> f * eta from H^2 degree k to degree k + deg f (rows: target basis).
inline std::vector<std::vector<std::int64_t>> inverse_mult(const Poly& f, int deg_f, int k, std::int64_t p) {
  const auto src = inverse_monomials(k);
  const auto dst = inverse_monomials(k + deg_f);
  std::map<Exps, int> index;
  for (int i = 0; i < static_cast<int>(dst.size()); ++i) index[dst[static_cast<std::size_t>(i)]] = i;
  std::vector<std::vector<std::int64_t>> m(dst.size(), std::vector<std::int64_t>(src.size(), 0));
  for (int c = 0; c < static_cast<int>(src.size()); ++c)
    for (const auto& [e, coef] : f) {
      Exps t(3);
      bool alive = true;
      for (int v = 0; v < 3; ++v) {
        t[static_cast<std::size_t>(v)] = src[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] + e[static_cast<std::size_t>(v)];
        if (t[static_cast<std::size_t>(v)] >= 0) alive = false;
      }
      if (!alive) continue;
      auto& cell = m[static_cast<std::size_t>(index.at(t))][static_cast<std::size_t>(c)];
      cell = mod(cell + coef, p);
    }
  return m;
}

/// dim ker(Frobenius: H^1(O_X(m)) -> H^1(O_X(pm))).
inline int frobenius_kernel_h1(const Poly& G, int d, int m, std::int64_t p) {
  const int k = m - d;
  const auto src = inverse_monomials(k);
  if (src.empty()) return 0;
  const auto mult = inverse_mult(G, d, k, p);
  const auto K = kernel(mult, static_cast<int>(src.size()), p);
  if (K.empty()) return 0;
  const Poly Gp1 = power(G, static_cast<int>(p - 1), p, 3);
  // eta^p lives in degree p k; G^{p-1} eta^p in degree p k + (p - 1) d = p m - d.
  const auto frob = inverse_mult(Gp1, static_cast<int>((p - 1) * d), static_cast<int>(p) * k, p);
  const auto big = inverse_monomials(static_cast<int>(p) * k);
  std::map<Exps, int> big_index;
  for (int i = 0; i < static_cast<int>(big.size()); ++i) big_index[big[static_cast<std::size_t>(i)]] = i;
  std::vector<std::vector<std::int64_t>> image(frob.size(), std::vector<std::int64_t>(K.size(), 0));
  for (int j = 0; j < static_cast<int>(K.size()); ++j) {
    std::vector<std::int64_t> powered(big.size(), 0);
    for (int c = 0; c < static_cast<int>(src.size()); ++c) {
      const std::int64_t coef = K[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
      if (coef == 0) continue;
      Exps e = src[static_cast<std::size_t>(c)];
      for (int& x : e) x *= static_cast<int>(p);
      powered[static_cast<std::size_t>(big_index.at(e))] = coef;  // c^p = c in F_p
    }
    for (std::size_t r = 0; r < frob.size(); ++r) {
      std::int64_t acc = 0;
      for (std::size_t c = 0; c < big.size(); ++c) acc += frob[r][c] * powered[c];
      image[r][static_cast<std::size_t>(j)] = mod(acc, p);
    }
  }
  return static_cast<int>(K.size()) - rank(image, p);
}

/// dim H^0(B^1_X(m)) = (dim A_{pm} - dim A_m) + dim ker(F on H^1(O_X(m))).
inline std::int64_t b1_sections(const Poly& G, int d, int m, std::int64_t p) {
  return quotient_dim(3, d, static_cast<int>(p) * m) - quotient_dim(3, d, m) + frobenius_kernel_h1(G, d, m, p);
}

}  // namespace oracle
