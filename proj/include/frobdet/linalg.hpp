#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "frobdet/field.hpp"

namespace frobdet {

/// Dense matrices over F_p hold canonical representatives in [0, p) as int64,
/// so an Eigen product of two such matrices cannot overflow before the final
/// reduction for any realistic inner dimension (< 2^31).
using MatrixFp = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using VectorFp = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

template <typename Derived>
MatrixFp reduce_mod(const Eigen::MatrixBase<Derived>& m, const PrimeField& F) {
  const std::int64_t p = F.characteristic();
  return m.unaryExpr([p](std::int64_t v) { return ((v % p) + p) % p; });
}

template <typename A, typename B>
MatrixFp mul_mod(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b, const PrimeField& F) {
  return reduce_mod(a * b, F);
}

template <typename Derived>
bool is_zero_mod(const Eigen::MatrixBase<Derived>& m, const PrimeField& F) {
  const std::int64_t p = F.characteristic();
  return (m.unaryExpr([p](std::int64_t v) { return v % p; }).array() == 0).all();
}

/// Reduced row echelon form: `rows` holds rank() rows with a leading 1 at each
/// pivot column and zeros in every other row's pivot columns.
struct Echelon {
  MatrixFp rows;
  std::vector<Index> pivots;

  Index rank() const noexcept { return static_cast<Index>(pivots.size()); }
};

Echelon row_echelon(MatrixFp m, const PrimeField& F);

Index rank_mod(const MatrixFp& m, const PrimeField& F);

/// Columns form a basis of the right null space {v : m v = 0}.
MatrixFp kernel_basis(const MatrixFp& m, const PrimeField& F);

/// The unique X with a X = b; throws Error(InvalidArgument) when b is not in
/// the column span of a or when a has dependent columns.
MatrixFp solve_exact(const MatrixFp& a, const MatrixFp& b, const PrimeField& F);

/// Incrementally maintained reduced echelon basis of a subspace of F_p^n.
/// Reducing a vector against it yields canonical coordinates of the class in
/// F_p^n / span, read off the non-pivot positions.
class SpanBuilder {
 public:
  SpanBuilder(Index ambient_dim, PrimeField field);

  Index ambient_dim() const noexcept { return n_; }
  Index dim() const noexcept { return static_cast<Index>(pivots_.size()); }
  const std::vector<Index>& pivots() const noexcept { return pivots_; }

  /// Adds v to the span; returns false when v was already in it.
  bool insert(const VectorFp& v);
  /// Inserts every column of m; returns the number of new dimensions.
  Index insert_columns(const MatrixFp& m);
  bool contains(const VectorFp& v) const;
  /// v minus its component along the span, normalized to zero at every pivot.
  VectorFp reduce(VectorFp v) const;
  /// Indices not occupied by a pivot, in increasing order.
  std::vector<Index> free_positions() const;

 private:
  Index n_;
  PrimeField F_;
  std::vector<VectorFp> rows_;
  std::vector<Index> pivots_;
};

/// Echelon structure of a subspace W ⊆ F_p^n together with the quotient
/// coordinates F_p^n → F_p^n / W given by the non-pivot positions.
class QuotientMap {
 public:
  QuotientMap(const MatrixFp& spanning_columns, const PrimeField& F);

  Index ambient_dim() const noexcept { return span_.ambient_dim(); }
  Index sub_dim() const noexcept { return span_.dim(); }
  Index quotient_dim() const noexcept { return static_cast<Index>(free_.size()); }

  /// Quotient coordinates of each column of m.
  MatrixFp project(const MatrixFp& m) const;
  /// Representative lifts: unit vectors at the non-pivot positions (ambient × quotient).
  MatrixFp lifts() const;

 private:
  SpanBuilder span_;
  std::vector<Index> free_;
};

}  // namespace frobdet
