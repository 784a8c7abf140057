#pragma once

#include <map>
#include <vector>

#include "frobdet/graded_module.hpp"
#include "frobdet/hypersurface.hpp"
#include "frobdet/polynomial.hpp"

namespace frobdet {

/// Dense matrix of homogeneous polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix(PrimeField field, int nvars, int rows, int cols);

  const PrimeField& field() const noexcept { return field_; }
  int nvars() const noexcept { return nvars_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  HomogPoly& operator()(int r, int c) { return entries_[static_cast<std::size_t>(r * cols_ + c)]; }
  const HomogPoly& operator()(int r, int c) const { return entries_[static_cast<std::size_t>(r * cols_ + c)]; }

  PolyMatrix transpose() const;
  /// Entry-wise evaluation at a point of F_{p^k}^{n+1}.
  std::vector<FieldElement> evaluate(std::span<const FieldElement> point) const;

 private:
  PrimeField field_;
  int nvars_;
  int rows_;
  int cols_;
  std::vector<HomogPoly> entries_;
};

/// F_1 = ⊕ S(-b_i) --M--> F_0 = ⊕ S(-a_j). Entry (j, i) has degree b_i - a_j;
/// slots of negative degree hold zero polynomials tagged with that degree.
struct PresentationMatrix {
  std::vector<int> gen_degrees;
  std::vector<int> rel_degrees;
  PolyMatrix entries;

  int size() const noexcept { return static_cast<int>(gen_degrees.size()); }
};

struct BettiData {
  std::vector<int> gen_degrees;
  std::vector<int> rel_degrees;
  int regularity = 0;
  /// (sum b - sum a) / deg G, the rank of the sheaf on X.
  int rank = 0;
  std::map<int, Index> hilbert;
};

/// Minimal presentation of M from its minimal generators and the minimal
/// generators of their relation module in degrees <= e_max. The kernel in
/// degrees e_max < e <= e_max + 2 must match the free module on the relations
/// found (FreenessCheckFailed); generator and relation counts must agree
/// (NotSquare). M must be materialized through e_max + 2.
PresentationMatrix presentation(const GradedModule& M, int e_max);

/// max(b_i) - 1.
int regularity_from_betti(const PresentationMatrix& P);

BettiData betti_data(const PresentationMatrix& P, const GradedModule& M, int equation_degree);

/// Linear presentation with generators in degree 0 and size d(p - 1).
bool ulrich_check(const PresentationMatrix& P, const HypersurfaceSpec& h);

}  // namespace frobdet
