#include "frobdet/linalg.hpp"

#include <utility>

namespace frobdet {

Echelon row_echelon(MatrixFp m, const PrimeField& F) {
  const std::int64_t p = F.characteristic();
  const Index rows = m.rows(), cols = m.cols();
  std::vector<Index> pivots;
  Index rank = 0;
  for (Index col = 0; col < cols && rank < rows; ++col) {
    Index piv = -1;
    for (Index r = rank; r < rows; ++r) {
      if (m(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != rank) m.row(piv).swap(m.row(rank));
    std::int64_t* prow = m.row(rank).data();
    const std::int64_t inv = F.inv(static_cast<std::uint32_t>(prow[col]));
    for (Index j = col; j < cols; ++j) prow[j] = (prow[j] * inv) % p;
    for (Index r = 0; r < rows; ++r) {
      if (r == rank) continue;
      std::int64_t* row = m.row(r).data();
      const std::int64_t f = row[col];
      if (f == 0) continue;
      const std::int64_t nf = p - f;
      for (Index j = col; j < cols; ++j)
        if (prow[j] != 0) row[j] = (row[j] + nf * prow[j]) % p;
    }
    pivots.push_back(col);
    ++rank;
  }
  Echelon e;
  e.rows = m.topRows(rank);
  e.pivots = std::move(pivots);
  return e;
}

Index rank_mod(const MatrixFp& m, const PrimeField& F) { return row_echelon(m, F).rank(); }

MatrixFp kernel_basis(const MatrixFp& m, const PrimeField& F) {
  const Echelon e = row_echelon(m, F);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Index> free_cols;
  for (Index c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  const std::int64_t p = F.characteristic();
  MatrixFp k = MatrixFp::Zero(cols, static_cast<Index>(free_cols.size()));
  for (Index j = 0; j < static_cast<Index>(free_cols.size()); ++j) {
    const Index f = free_cols[static_cast<std::size_t>(j)];
    k(f, j) = 1;
    for (Index i = 0; i < e.rank(); ++i) {
      const std::int64_t v = e.rows(i, f);
      if (v != 0) k(e.pivots[static_cast<std::size_t>(i)], j) = p - v;
    }
  }
  return k;
}

MatrixFp solve_exact(const MatrixFp& a, const MatrixFp& b, const PrimeField& F) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::InvalidArgument, "solve_exact: row counts differ");
  MatrixFp aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  const Echelon e = row_echelon(std::move(aug), F);
  MatrixFp x = MatrixFp::Zero(a.cols(), b.cols());
  Index a_pivots = 0;
  for (Index i = 0; i < e.rank(); ++i) {
    const Index c = e.pivots[static_cast<std::size_t>(i)];
    if (c >= a.cols()) throw Error(ErrorCode::InvalidArgument, "solve_exact: right-hand side not in the column span");
    x.row(c) = e.rows.row(i).tail(b.cols());
    ++a_pivots;
  }
  if (a_pivots != a.cols()) throw Error(ErrorCode::InvalidArgument, "solve_exact: coefficient matrix has dependent columns");
  return x;
}

// ---------------------------------------------------------------------------

SpanBuilder::SpanBuilder(Index ambient_dim, PrimeField field) : n_(ambient_dim), F_(field) {}

VectorFp SpanBuilder::reduce(VectorFp v) const {
  const std::int64_t p = F_.characteristic();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::int64_t f = v(pivots_[i]);
    if (f == 0) continue;
    const VectorFp& row = rows_[i];
    const std::int64_t nf = p - f;
    for (Index j = pivots_[i]; j < n_; ++j)
      if (row(j) != 0) v(j) = (v(j) + nf * row(j)) % p;
  }
  return v;
}

bool SpanBuilder::contains(const VectorFp& v) const { return reduce(v).isZero(); }

bool SpanBuilder::insert(const VectorFp& v_in) {
  if (v_in.size() != n_) throw Error(ErrorCode::InvalidArgument, "SpanBuilder: vector size");
  VectorFp v = reduce(reduce_mod(v_in, F_));
  Index lead = -1;
  for (Index j = 0; j < n_; ++j) {
    if (v(j) != 0) {
      lead = j;
      break;
    }
  }
  if (lead < 0) return false;
  const std::int64_t p = F_.characteristic();
  const std::int64_t inv = F_.inv(static_cast<std::uint32_t>(v(lead)));
  for (Index j = lead; j < n_; ++j) v(j) = (v(j) * inv) % p;
  // keep existing rows reduced at the new pivot
  for (auto& row : rows_) {
    const std::int64_t f = row(lead);
    if (f == 0) continue;
    const std::int64_t nf = p - f;
    for (Index j = lead; j < n_; ++j)
      if (v(j) != 0) row(j) = (row(j) + nf * v(j)) % p;
  }
  // insert keeping pivots sorted
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
  return true;
}

Index SpanBuilder::insert_columns(const MatrixFp& m) {
  Index added = 0;
  for (Index c = 0; c < m.cols(); ++c)
    if (insert(m.col(c))) ++added;
  return added;
}

std::vector<Index> SpanBuilder::free_positions() const {
  std::vector<Index> out;
  std::size_t k = 0;
  for (Index j = 0; j < n_; ++j) {
    if (k < pivots_.size() && pivots_[k] == j) {
      ++k;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

// ---------------------------------------------------------------------------

QuotientMap::QuotientMap(const MatrixFp& spanning_columns, const PrimeField& F)
    : span_(spanning_columns.rows(), F) {
  span_.insert_columns(spanning_columns);
  free_ = span_.free_positions();
}

MatrixFp QuotientMap::project(const MatrixFp& m) const {
  MatrixFp out(quotient_dim(), m.cols());
  for (Index c = 0; c < m.cols(); ++c) {
    const VectorFp r = span_.reduce(m.col(c));
    for (Index i = 0; i < quotient_dim(); ++i) out(i, c) = r(free_[static_cast<std::size_t>(i)]);
  }
  return out;
}

MatrixFp QuotientMap::lifts() const {
  MatrixFp out = MatrixFp::Zero(ambient_dim(), quotient_dim());
  for (Index i = 0; i < quotient_dim(); ++i) out(free_[static_cast<std::size_t>(i)], i) = 1;
  return out;
}

}  // namespace frobdet
