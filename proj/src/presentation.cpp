#include "frobdet/presentation.hpp"

#include <algorithm>
#include <unordered_map>

namespace frobdet {

PolyMatrix::PolyMatrix(PrimeField field, int nvars, int rows, int cols)
    : field_(field), nvars_(nvars), rows_(rows), cols_(cols) {
  entries_.reserve(static_cast<std::size_t>(rows * cols));
  for (int k = 0; k < rows * cols; ++k) entries_.emplace_back(field, nvars, 0);
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(field_, nvars_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<FieldElement> PolyMatrix::evaluate(std::span<const FieldElement> point) const {
  std::vector<FieldElement> out;
  out.reserve(entries_.size());
  for (const HomogPoly& e : entries_) out.push_back(e.evaluate(point));
  return out;
}

namespace {

// Coordinates of ⊕_j S_{e - a_j}: one block per generator, monomials in descending grlex order.
struct FreeDegree {
  std::vector<Index> offset;  // per generator, -1 when e < a_j
  std::vector<std::vector<Monomial>> monomials;
  std::vector<std::unordered_map<Monomial, Index, MonomialHash>> index;
  Index dim = 0;
};

FreeDegree free_degree(int nvars, const std::vector<int>& gen_degrees, int e) {
  FreeDegree fd;
  for (int a : gen_degrees) {
    std::vector<Monomial> mons = e >= a ? monomials_of_degree(nvars, e - a) : std::vector<Monomial>{};
    std::unordered_map<Monomial, Index, MonomialHash> idx;
    for (Index k = 0; k < static_cast<Index>(mons.size()); ++k) idx.emplace(mons[static_cast<std::size_t>(k)], k);
    fd.offset.push_back(e >= a ? fd.dim : -1);
    fd.dim += static_cast<Index>(mons.size());
    fd.monomials.push_back(std::move(mons));
    fd.index.push_back(std::move(idx));
  }
  return fd;
}

int first_variable(const Monomial& m) {
  for (int v = 0; v < m.nvars(); ++v)
    if (m[v] > 0) return v;
  return -1;
}

}  // namespace

PresentationMatrix presentation(const GradedModule& M, int e_max) {
  const PrimeField& F = M.field();
  const int nv = M.nvars();
  const int top = e_max + 2;
  if (top > M.hi())
    throw Error(ErrorCode::InvalidArgument, "module must be materialized through degree " + std::to_string(top));

  std::vector<Generator> gens;
  for (Generator& g : minimal_generators(M))
    if (g.degree <= top) gens.push_back(std::move(g));
  std::vector<int> a;
  for (const Generator& g : gens) a.push_back(g.degree);
  const int lo = M.lo();
  const int ngen = static_cast<int>(gens.size());

  // images[j] maps the monomial block of generator j in degree e to M_e.
  std::vector<MatrixFp> prev_images(static_cast<std::size_t>(ngen));
  FreeDegree prev_fd = free_degree(nv, a, lo - 1);
  MatrixFp prev_kernel(prev_fd.dim, 0);

  std::vector<int> b;
  std::vector<VectorFp> relations;
  std::vector<FreeDegree> rel_frames;

  for (int e = lo; e <= top; ++e) {
    FreeDegree fd = free_degree(nv, a, e);
    const Index target = M.dim(e);
    MatrixFp phi = MatrixFp::Zero(target, fd.dim);
    std::vector<MatrixFp> images(static_cast<std::size_t>(ngen));
    for (int j = 0; j < ngen; ++j) {
      if (fd.offset[static_cast<std::size_t>(j)] < 0) continue;
      const auto& mons = fd.monomials[static_cast<std::size_t>(j)];
      MatrixFp img(target, static_cast<Index>(mons.size()));
      if (e == a[static_cast<std::size_t>(j)]) {
        img.col(0) = gens[static_cast<std::size_t>(j)].coords;
      } else {
        for (Index k = 0; k < static_cast<Index>(mons.size()); ++k) {
          const Monomial& mu = mons[static_cast<std::size_t>(k)];
          const int v = first_variable(mu);
          const Monomial rest = mu.quotient(Monomial::variable(nv, v));
          const Index src = prev_fd.index[static_cast<std::size_t>(j)].at(rest);
          img.col(k) = mul_mod(M.action(v, e - 1), prev_images[static_cast<std::size_t>(j)].col(src), F);
        }
      }
      if (target > 0) phi.middleCols(fd.offset[static_cast<std::size_t>(j)], img.cols()) = img;
      images[static_cast<std::size_t>(j)] = std::move(img);
    }

    const MatrixFp kernel = kernel_basis(phi, F);

    // x_i times the previous kernel, expressed in this degree's coordinates.
    SpanBuilder span(fd.dim, F);
    for (Index c = 0; c < prev_kernel.cols(); ++c) {
      for (int i = 0; i < nv; ++i) {
        VectorFp v = VectorFp::Zero(fd.dim);
        for (int j = 0; j < ngen; ++j) {
          const Index off = prev_fd.offset[static_cast<std::size_t>(j)];
          if (off < 0) continue;
          const auto& mons = prev_fd.monomials[static_cast<std::size_t>(j)];
          for (Index k = 0; k < static_cast<Index>(mons.size()); ++k) {
            const std::int64_t x = prev_kernel(off + k, c);
            if (x == 0) continue;
            const Monomial shifted = mons[static_cast<std::size_t>(k)] * Monomial::variable(nv, i);
            v(fd.offset[static_cast<std::size_t>(j)] + fd.index[static_cast<std::size_t>(j)].at(shifted)) = x;
          }
        }
        span.insert(v);
      }
    }

    if (e <= e_max) {
      for (Index c = 0; c < kernel.cols(); ++c) {
        const VectorFp col = kernel.col(c);
        if (span.insert(col)) {
          b.push_back(e);
          relations.push_back(col);
          rel_frames.push_back(fd);
        }
      }
    } else {
      Index predicted = 0;
      for (int bi : b) predicted += static_cast<Index>(count_monomials(nv, e - bi));
      if (kernel.cols() != predicted || span.dim() != kernel.cols())
        throw Error(ErrorCode::FreenessCheckFailed,
                    "relation module in degree " + std::to_string(e) + " has dimension " +
                        std::to_string(kernel.cols()) + ", free prediction " + std::to_string(predicted) +
                        " (x-multiples span " + std::to_string(span.dim()) + ")");
    }

    prev_images = std::move(images);
    prev_fd = std::move(fd);
    prev_kernel = kernel;
  }

  if (b.size() != a.size())
    throw Error(ErrorCode::NotSquare, std::to_string(a.size()) + " generators but " + std::to_string(b.size()) +
                                          " relations through degree " + std::to_string(e_max));

  const int s = static_cast<int>(a.size());
  PresentationMatrix P{a, b, PolyMatrix(F, nv, s, s)};
  for (int i = 0; i < s; ++i) {
    const FreeDegree& fd = rel_frames[static_cast<std::size_t>(i)];
    const VectorFp& rel = relations[static_cast<std::size_t>(i)];
    for (int j = 0; j < s; ++j) {
      const int deg = b[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(j)];
      HomogPoly entry(F, nv, deg);
      const Index off = fd.offset[static_cast<std::size_t>(j)];
      if (off >= 0) {
        const auto& mons = fd.monomials[static_cast<std::size_t>(j)];
        for (Index k = 0; k < static_cast<Index>(mons.size()); ++k)
          if (rel(off + k) != 0) entry.add_term(mons[static_cast<std::size_t>(k)], static_cast<std::uint32_t>(rel(off + k)));
      }
      if (deg == 0 && !entry.is_zero())
        throw Error(ErrorCode::Internal, "non-minimal presentation: constant entry in slot (" + std::to_string(j) +
                                             ", " + std::to_string(i) + ")");
      P.entries(j, i) = std::move(entry);
    }
  }
  return P;
}

int regularity_from_betti(const PresentationMatrix& P) {
  if (P.rel_degrees.empty()) return 0;
  return *std::max_element(P.rel_degrees.begin(), P.rel_degrees.end()) - 1;
}

BettiData betti_data(const PresentationMatrix& P, const GradedModule& M, int equation_degree) {
  BettiData out;
  out.gen_degrees = P.gen_degrees;
  out.rel_degrees = P.rel_degrees;
  out.regularity = regularity_from_betti(P);
  int total = 0;
  for (int bi : P.rel_degrees) total += bi;
  for (int aj : P.gen_degrees) total -= aj;
  out.rank = equation_degree > 0 ? total / equation_degree : 0;
  out.hilbert = hilbert_function(M);
  return out;
}

bool ulrich_check(const PresentationMatrix& P, const HypersurfaceSpec& h) {
  const auto zero = [](int v) { return v == 0; };
  const auto one = [](int v) { return v == 1; };
  const int expected = h.degree() * static_cast<int>(h.characteristic() - 1);
  return std::all_of(P.gen_degrees.begin(), P.gen_degrees.end(), zero) &&
         std::all_of(P.rel_degrees.begin(), P.rel_degrees.end(), one) && P.size() == expected;
}

}  // namespace frobdet
