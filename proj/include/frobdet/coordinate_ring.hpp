#pragma once

#include <unordered_map>
#include <vector>

#include "frobdet/linalg.hpp"
#include "frobdet/polynomial.hpp"

namespace frobdet {

/// Graded pieces A_j of A = S/(G) for 0 <= j <= max_degree. The basis of A_j is
/// the set of degree-j monomials not divisible by lead(G), in descending grlex
/// order; normal forms of every degree-j monomial are tabulated up front.
class CoordinateRing {
 public:
  CoordinateRing(const HomogPoly& G, int max_degree);

  const HomogPoly& equation() const noexcept { return G_; }
  const PrimeField& field() const noexcept { return G_.field(); }
  int nvars() const noexcept { return G_.nvars(); }
  int max_degree() const noexcept { return max_degree_; }

  /// dim A_j; zero for negative j.
  Index dim(int j) const;
  const std::vector<Monomial>& basis(int j) const;
  const std::vector<Monomial>& monomials(int j) const;
  Index monomial_index(const Monomial& m) const;

  /// dim A_j × (number of degree-j monomials); column k is the normal form of monomials(j)[k].
  const MatrixFp& normal_forms(int j) const;
  VectorFp normal_form(const Monomial& m) const;
  VectorFp normal_form(const HomogPoly& f) const;
  HomogPoly to_poly(int j, const VectorFp& coords) const;

  /// Matrix of multiplication by `mono` from A_j to A_{j + deg mono}.
  MatrixFp multiplication_map(int j, const Monomial& mono) const;

 private:
  struct Piece {
    std::vector<Monomial> monomials;
    std::unordered_map<Monomial, Index, MonomialHash> index;
    std::vector<Monomial> basis;
    MatrixFp nf;
  };

  const Piece& piece(int j) const;

  HomogPoly G_;
  int max_degree_;
  std::vector<Piece> pieces_;
};

/// dim A_j = C(j+n, n) - C(j-d+n, n), the closed form used as an independent check.
std::size_t hypersurface_hilbert(int nvars, int d, int j);

}  // namespace frobdet
