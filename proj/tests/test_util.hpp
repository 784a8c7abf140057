#pragma once

#include <random>
#include <string>

#include "frobdet/polynomial.hpp"
#include "oracles.hpp"

namespace testutil {

inline oracle::Poly to_oracle(const frobdet::HomogPoly& f) {
  oracle::Poly out;
  for (const auto& [m, c] : f.terms()) {
    oracle::Exps e(static_cast<std::size_t>(f.nvars()));
    for (int i = 0; i < f.nvars(); ++i) e[static_cast<std::size_t>(i)] = static_cast<int>(m[i]);
    out[e] = c;
  }
  return out;
}

inline bool same(const frobdet::HomogPoly& f, const oracle::Poly& g) { return to_oracle(f) == g; }

inline frobdet::HomogPoly poly(const std::string& text, std::uint32_t p, int nvars = 0) {
  return frobdet::parse_poly(text, frobdet::PrimeField(p), nvars).poly;
}

inline frobdet::HomogPoly random_poly(const frobdet::PrimeField& F, int nvars, int d, std::mt19937_64& rng) {
  frobdet::HomogPoly f(F, nvars, d);
  for (const auto& m : frobdet::monomials_of_degree(nvars, d)) {
    const auto c = static_cast<std::uint32_t>(rng() % F.characteristic());
    if (c) f.add_term(m, c);
  }
  return f;
}

/// Projective common zero of G and all partials over F_{p^k}, by enumeration.
inline bool has_singular_point(const frobdet::HomogPoly& G, int k) {
  using namespace frobdet;
  const auto spec = k == 1 ? FieldSpec::prime(G.field().characteristic())
                           : FieldSpec::extension(G.field().characteristic(), k);
  std::vector<HomogPoly> eqs{G};
  for (int i = 0; i < G.nvars(); ++i) eqs.push_back(partial_derivative(G, i));
  const std::uint64_t q = spec->order();
  const int nv = G.nvars();
  // Normalized points: first nonzero coordinate is 1.
  for (int lead = 0; lead < nv; ++lead) {
    const int free = nv - lead - 1;
    std::uint64_t count = 1;
    for (int i = 0; i < free; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<FieldElement> pt(static_cast<std::size_t>(nv), FieldElement::zero(*spec));
      pt[static_cast<std::size_t>(lead)] = FieldElement::one(*spec);
      std::uint64_t rem = idx;
      for (int i = lead + 1; i < nv; ++i) {
        pt[static_cast<std::size_t>(i)] = FieldElement::from_index(*spec, rem % q);
        rem /= q;
      }
      bool all_zero = true;
      for (const auto& e : eqs)
        if (!e.is_zero() && !e.evaluate(pt).is_zero()) {
          all_zero = false;
          break;
        }
      if (all_zero) return true;
    }
  }
  return false;
}

}  // namespace testutil
