#include "frobdet/splitting.hpp"

#include <algorithm>
#include <unordered_map>

namespace frobdet {

bool fedder_split_test(const HypersurfaceSpec& h) {
  const std::uint32_t p = h.characteristic();
  const HomogPoly power = poly_pow(h.equation(), p - 1);
  for (const auto& [m, c] : power.terms()) {
    bool small = true;
    for (int i = 0; i < m.nvars(); ++i) {
      if (m[i] > p - 1) {
        small = false;
        break;
      }
    }
    if (small) return true;
  }
  return false;
}

bool degree_bound_check(const HypersurfaceSpec& h) { return h.degree() <= h.ambient_dim() + 1; }

int genus(const HypersurfaceSpec& h) {
  if (!h.is_plane_curve()) throw Error(ErrorCode::NotACurve, "genus is only defined here for plane curves");
  const int d = h.degree();
  return (d - 1) * (d - 2) / 2;
}

HasseWittMatrix hasse_witt(const HypersurfaceSpec& h) {
  if (!h.is_plane_curve()) throw Error(ErrorCode::NotACurve, "Hasse-Witt matrix requires a plane curve");
  const int g = genus(h);
  if (g == 0) throw Error(ErrorCode::GenusZero, "genus-zero curve has an empty Hasse-Witt matrix");
  const int d = h.degree();
  const std::int64_t p = h.characteristic();
  HasseWittMatrix hw;
  for (const Monomial& m : monomials_of_degree(3, d))
    if (m[0] >= 1 && m[1] >= 1 && m[2] >= 1) hw.basis.push_back(m);
  const HomogPoly power = poly_pow(h.equation(), static_cast<std::uint64_t>(p - 1));
  const Index size = static_cast<Index>(hw.basis.size());
  hw.entries = MatrixFp::Zero(size, size);
  for (Index i = 0; i < size; ++i) {
    const Monomial& bi = hw.basis[static_cast<std::size_t>(i)];
    for (Index j = 0; j < size; ++j) {
      const Monomial& bj = hw.basis[static_cast<std::size_t>(j)];
      std::int64_t exps[3];
      for (int v = 0; v < 3; ++v) exps[v] = p * bj[v] - static_cast<std::int64_t>(bi[v]);
      hw.entries(i, j) = coeff_of(power, std::span<const std::int64_t>(exps, 3));
    }
  }
  return hw;
}

bool is_ordinary(const HypersurfaceSpec& h) {
  if (!h.is_plane_curve()) throw Error(ErrorCode::NotACurve, "ordinarity test requires a plane curve");
  if (genus(h) == 0) return true;
  const HasseWittMatrix hw = hasse_witt(h);
  return rank_mod(hw.entries, h.field()) == hw.entries.rows();
}

int smoothness_test_degree(const HypersurfaceSpec& h) {
  const int d = h.degree();
  return (d - 1) + (h.ambient_dim() + 1) * (d - 2) + 1;
}

bool is_smooth(const HypersurfaceSpec& h) {
  if (h.degree() == 1) return true;
  const int E = smoothness_test_degree(h);
  const int nv = h.nvars();
  std::vector<HomogPoly> gens{h.equation()};
  for (int i = 0; i < nv; ++i) {
    HomogPoly dG = partial_derivative(h.equation(), i);
    if (!dG.is_zero()) gens.push_back(std::move(dG));
  }
  const std::vector<Monomial> target = monomials_of_degree(nv, E);
  std::unordered_map<Monomial, Index, MonomialHash> col;
  col.reserve(target.size());
  for (Index k = 0; k < static_cast<Index>(target.size()); ++k) col.emplace(target[static_cast<std::size_t>(k)], k);

  Index rows = 0;
  for (const auto& g : gens) rows += static_cast<Index>(count_monomials(nv, E - g.degree()));
  MatrixFp J = MatrixFp::Zero(rows, static_cast<Index>(target.size()));
  Index r = 0;
  for (const auto& g : gens) {
    const auto terms = g.sorted_terms();
    for (const Monomial& mu : monomials_of_degree(nv, E - g.degree())) {
      for (const auto& [m, c] : terms) J(r, col.at(m * mu)) = c;
      ++r;
    }
  }
  return rank_mod(J, h.field()) == static_cast<Index>(target.size());
}

}  // namespace frobdet
