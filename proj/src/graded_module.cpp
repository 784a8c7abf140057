#include "frobdet/graded_module.hpp"

#include <algorithm>
#include <unordered_map>

namespace frobdet {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Pushforward: return "pushforward";
    case Provenance::B1Cokernel: return "b1-cokernel";
    case Provenance::Saturated: return "saturated";
    case Provenance::Twisted: return "twisted";
  }
  return "unknown";
}

GradedModule::GradedModule(PrimeField field, int nvars, int lo, int hi, Provenance provenance)
    : field_(field), nvars_(nvars), lo_(lo), hi_(hi), provenance_(provenance) {
  if (hi < lo) throw Error(ErrorCode::InvalidArgument, "graded module window is empty");
  const auto n = static_cast<std::size_t>(hi - lo + 1);
  dims_.assign(n, 0);
  descriptions_.assign(n, std::string());
  actions_.assign(static_cast<std::size_t>(nvars), std::vector<MatrixFp>(n));
}

std::size_t GradedModule::slot(int m) const {
  if (m < lo_ || m > hi_)
    throw Error(ErrorCode::InvalidArgument,
                "degree " + std::to_string(m) + " outside [" + std::to_string(lo_) + ", " + std::to_string(hi_) + "]");
  return static_cast<std::size_t>(m - lo_);
}

Index GradedModule::dim(int m) const {
  if (m < lo_ || m > hi_) return 0;
  return dims_[slot(m)];
}

const std::string& GradedModule::description(int m) const { return descriptions_[slot(m)]; }

MatrixFp GradedModule::action(int var, int m) const {
  if (m == lo_ - 1) return MatrixFp::Zero(dim(lo_), 0);
  if (m < lo_ || m >= hi_)
    throw Error(ErrorCode::InvalidArgument, "action out of the materialized range at degree " + std::to_string(m));
  return actions_[static_cast<std::size_t>(var)][slot(m)];
}

void GradedModule::set_piece(int m, Index dim, std::string description) {
  dims_[slot(m)] = dim;
  descriptions_[slot(m)] = std::move(description);
}

void GradedModule::set_action(int var, int m, MatrixFp a) {
  if (m >= hi_) throw Error(ErrorCode::InvalidArgument, "no action out of the top degree");
  if (a.rows() != dim(m + 1) || a.cols() != dim(m))
    throw Error(ErrorCode::InvalidArgument, "action matrix shape does not match the pieces");
  actions_[static_cast<std::size_t>(var)][slot(m)] = std::move(a);
}

bool GradedModule::actions_commute() const {
  for (int m = lo_; m + 2 <= hi_; ++m) {
    for (int i = 0; i < nvars_; ++i) {
      for (int j = i + 1; j < nvars_; ++j) {
        const MatrixFp ij = mul_mod(action(i, m + 1), action(j, m), field_);
        const MatrixFp ji = mul_mod(action(j, m + 1), action(i, m), field_);
        if (ij != ji) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

int coordinate_ring_degree_for(std::uint32_t p, int m_hi) { return std::max(0, static_cast<int>(p) * m_hi); }

namespace {

MatrixFp columns_of(const CoordinateRing& A, int j, const Monomial& mono, const std::vector<Index>& basis_positions) {
  const int target = j + static_cast<int>(mono.degree());
  const auto& basis = A.basis(j);
  MatrixFp out(A.dim(target), static_cast<Index>(basis_positions.size()));
  for (Index c = 0; c < static_cast<Index>(basis_positions.size()); ++c)
    out.col(c) = A.normal_form(basis[static_cast<std::size_t>(basis_positions[static_cast<std::size_t>(c)])] * mono);
  return out;
}

std::vector<Index> iota(Index n) {
  std::vector<Index> v(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

}  // namespace

GradedModule pushforward_module(const CoordinateRing& A, int m_lo, int m_hi) {
  const std::uint32_t p = A.field().characteristic();
  if (coordinate_ring_degree_for(p, m_hi) > A.max_degree())
    throw Error(ErrorCode::InvalidArgument, "coordinate ring not materialized far enough");
  GradedModule M(A.field(), A.nvars(), m_lo, m_hi, Provenance::Pushforward);
  for (int m = m_lo; m <= m_hi; ++m)
    M.set_piece(m, A.dim(static_cast<int>(p) * m), "A_" + std::to_string(static_cast<int>(p) * m) + " standard monomials");
  for (int m = std::max(m_lo, 0); m < m_hi; ++m) {
    const int j = static_cast<int>(p) * m;
    for (int i = 0; i < A.nvars(); ++i)
      M.set_action(i, m, columns_of(A, j, Monomial::variable(A.nvars(), i).pow(p), iota(A.dim(j))));
  }
  for (int m = m_lo; m < std::min(0, m_hi); ++m)
    for (int i = 0; i < A.nvars(); ++i) M.set_action(i, m, MatrixFp::Zero(M.dim(m + 1), 0));
  return M;
}

GradedModule pushforward_module(const HypersurfaceSpec& h, int m_hi) {
  const CoordinateRing A(h.equation(), coordinate_ring_degree_for(h.characteristic(), m_hi));
  return pushforward_module(A, 0, m_hi);
}

GradedModule b1_cokernel_module(const CoordinateRing& A, int m_lo, int m_hi) {
  const std::uint32_t p = A.field().characteristic();
  if (coordinate_ring_degree_for(p, m_hi) > A.max_degree())
    throw Error(ErrorCode::InvalidArgument, "coordinate ring not materialized far enough");
  const PrimeField& F = A.field();
  GradedModule M(F, A.nvars(), m_lo, m_hi, Provenance::B1Cokernel);

  std::vector<QuotientMap> quotients;
  std::vector<std::vector<Index>> free_positions;
  for (int m = m_lo; m <= m_hi; ++m) {
    const int j = static_cast<int>(p) * m;
    MatrixFp image(A.dim(j), A.dim(m));
    if (m >= 0) {
      const auto& basis = A.basis(m);
      for (Index c = 0; c < A.dim(m); ++c) image.col(c) = A.normal_form(basis[static_cast<std::size_t>(c)].pow(p));
    }
    QuotientMap q(image, F);
    if (q.sub_dim() != A.dim(m))
      throw Error(ErrorCode::NonInjectivePower, "the p-th power map A_" + std::to_string(m) + " -> A_" +
                                                    std::to_string(j) + " has a kernel; G is not reduced over F_p");
    std::vector<Index> frees;
    const MatrixFp lifts = q.lifts();
    for (Index c = 0; c < lifts.cols(); ++c)
      for (Index r = 0; r < lifts.rows(); ++r)
        if (lifts(r, c) != 0) frees.push_back(r);
    M.set_piece(m, q.quotient_dim(), "A_" + std::to_string(j) + " modulo p-th powers of A_" + std::to_string(m));
    quotients.push_back(std::move(q));
    free_positions.push_back(std::move(frees));
  }
  for (int m = m_lo; m < m_hi; ++m) {
    const auto s = static_cast<std::size_t>(m - m_lo);
    const int j = static_cast<int>(p) * m;
    for (int i = 0; i < A.nvars(); ++i) {
      if (m < 0 || M.dim(m) == 0) {
        M.set_action(i, m, MatrixFp::Zero(M.dim(m + 1), M.dim(m)));
        continue;
      }
      const MatrixFp pushed = columns_of(A, j, Monomial::variable(A.nvars(), i).pow(p), free_positions[s]);
      M.set_action(i, m, quotients[s + 1].project(pushed));
    }
  }
  return M;
}

GradedModule b1_cokernel_module(const HypersurfaceSpec& h, int m_hi) {
  const CoordinateRing A(h.equation(), coordinate_ring_degree_for(h.characteristic(), m_hi));
  return b1_cokernel_module(A, 0, m_hi);
}

// ---------------------------------------------------------------------------
// Saturation

MatrixFp ideal_power_hom(const GradedModule& M, int m, int N) {
  const PrimeField& F = M.field();
  const int nv = M.nvars();
  const Index block = M.dim(m + N);
  if (N == 0) return MatrixFp::Identity(block, block);
  const std::vector<Monomial> gens = monomials_of_degree(nv, N);
  const Index unknowns = block * static_cast<Index>(gens.size());
  if (block == 0) return MatrixFp::Zero(0, 0);
  if (m + N + 1 > M.hi())
    throw Error(ErrorCode::NoStabilization, "module not materialized through degree " + std::to_string(m + N + 1));

  std::unordered_map<Monomial, Index, MonomialHash> index;
  for (Index k = 0; k < static_cast<Index>(gens.size()); ++k) index.emplace(gens[static_cast<std::size_t>(k)], k);
  std::vector<MatrixFp> act(static_cast<std::size_t>(nv));
  for (int i = 0; i < nv; ++i) act[static_cast<std::size_t>(i)] = M.action(i, m + N);
  const Index next = M.dim(m + N + 1);

  std::vector<std::pair<std::pair<int, Index>, std::pair<int, Index>>> constraints;
  for (const Monomial& nu : monomials_of_degree(nv, N + 1)) {
    int prev_var = -1;
    for (int v = 0; v < nv; ++v) {
      if (nu[v] == 0) continue;
      if (prev_var >= 0) {
        const Index a = index.at(nu.quotient(Monomial::variable(nv, prev_var)));
        const Index b = index.at(nu.quotient(Monomial::variable(nv, v)));
        constraints.push_back({{prev_var, a}, {v, b}});
      }
      prev_var = v;
    }
  }
  const std::int64_t p = F.characteristic();
  MatrixFp sys = MatrixFp::Zero(static_cast<Index>(constraints.size()) * next, unknowns);
  for (Index k = 0; k < static_cast<Index>(constraints.size()); ++k) {
    const auto& [lhs, rhs] = constraints[static_cast<std::size_t>(k)];
    // x_a v_{nu/x_a} - x_b v_{nu/x_b} = 0
    sys.block(k * next, lhs.second * block, next, block) = act[static_cast<std::size_t>(lhs.first)];
    sys.block(k * next, rhs.second * block, next, block) =
        act[static_cast<std::size_t>(rhs.first)].unaryExpr([p](std::int64_t v) { return v == 0 ? 0 : p - v; });
  }
  return kernel_basis(sys, F);
}

Saturation saturate_with_diagnostics(const GradedModule& M, int m_lo, int m_hi, const SaturationOptions& opts) {
  const PrimeField& F = M.field();
  const int nv = M.nvars();
  std::vector<int> exponents;
  std::vector<Index> stable_dims;
  for (int m = m_lo; m <= m_hi; ++m) {
    const int start = opts.saturated_from == INT_MIN ? 0 : std::max(0, opts.saturated_from - m);
    auto hom_dim = [&](int N) {
      if (N > opts.n_cap)
        throw Error(ErrorCode::NoStabilization, "no stabilization in degree " + std::to_string(m) + " up to N_cap = " +
                                                    std::to_string(opts.n_cap));
      return ideal_power_hom(M, m, N).cols();
    };
    Index prev = hom_dim(start);
    int N = start + 1;
    while (true) {
      Index cur = 0;
      try {
        cur = hom_dim(N);
      } catch (const Error& e) {
        throw Error(ErrorCode::NoStabilization, "degree " + std::to_string(m) + ": dimensions " + std::to_string(prev) +
                                                    " at N=" + std::to_string(N - 1) + " not confirmed (" + e.what() + ")");
      }
      if (cur == prev) break;
      prev = cur;
      ++N;
    }
    exponents.push_back(N - 1);
    stable_dims.push_back(prev);
  }
  const int uniform = *std::max_element(exponents.begin(), exponents.end());

  GradedModule out(F, nv, m_lo, m_hi, Provenance::Saturated);
  if (uniform == 0) {
    for (int m = m_lo; m <= m_hi; ++m) out.set_piece(m, M.dim(m), M.description(m));
    for (int m = m_lo; m < m_hi; ++m)
      for (int i = 0; i < nv; ++i) out.set_action(i, m, M.action(i, m));
    return {std::move(out), std::move(exponents), uniform};
  }

  std::vector<MatrixFp> homs;
  for (int m = m_lo; m <= m_hi; ++m) {
    MatrixFp H = ideal_power_hom(M, m, uniform);
    if (H.cols() != stable_dims[static_cast<std::size_t>(m - m_lo)])
      throw Error(ErrorCode::NoStabilization, "degree " + std::to_string(m) + " changes dimension at the uniform exponent " +
                                                  std::to_string(uniform));
    out.set_piece(m, H.cols(), "Hom((x)^" + std::to_string(uniform) + ", M) in degree " + std::to_string(m));
    homs.push_back(std::move(H));
  }
  const Index nblocks = static_cast<Index>(count_monomials(nv, uniform));
  for (int m = m_lo; m < m_hi; ++m) {
    const MatrixFp& H = homs[static_cast<std::size_t>(m - m_lo)];
    const MatrixFp& H1 = homs[static_cast<std::size_t>(m + 1 - m_lo)];
    const Index block = M.dim(m + uniform);
    const Index block1 = M.dim(m + 1 + uniform);
    for (int i = 0; i < nv; ++i) {
      if (H.cols() == 0 || H1.cols() == 0) {
        out.set_action(i, m, MatrixFp::Zero(H1.cols(), H.cols()));
        continue;
      }
      const MatrixFp a = M.action(i, m + uniform);
      MatrixFp image(block1 * nblocks, H.cols());
      for (Index b = 0; b < nblocks; ++b)
        image.middleRows(b * block1, block1) = mul_mod(a, H.middleRows(b * block, block), F);
      out.set_action(i, m, solve_exact(H1, image, F));
    }
  }
  return {std::move(out), std::move(exponents), uniform};
}

GradedModule saturate(const GradedModule& M, int m_lo, int m_hi, const SaturationOptions& opts) {
  return saturate_with_diagnostics(M, m_lo, m_hi, opts).module;
}

GradedModule twist(const GradedModule& M, int t) {
  GradedModule out(M.field(), M.nvars(), M.lo() - t, M.hi() - t, t == 0 ? M.provenance() : Provenance::Twisted);
  for (int m = out.lo(); m <= out.hi(); ++m) out.set_piece(m, M.dim(m + t), M.description(m + t));
  for (int m = out.lo(); m < out.hi(); ++m)
    for (int i = 0; i < M.nvars(); ++i) out.set_action(i, m, M.action(i, m + t));
  return out;
}

std::vector<Generator> minimal_generators(const GradedModule& M) {
  std::vector<Generator> gens;
  for (int m = M.lo(); m <= M.hi(); ++m) {
    const Index d = M.dim(m);
    if (d == 0) continue;
    SpanBuilder span(d, M.field());
    if (m > M.lo())
      for (int i = 0; i < M.nvars(); ++i) span.insert_columns(M.action(i, m - 1));
    for (Index c = 0; c < d && span.dim() < d; ++c) {
      VectorFp e = VectorFp::Zero(d);
      e(c) = 1;
      if (span.insert(e)) gens.push_back({m, std::move(e)});
    }
  }
  return gens;
}

std::map<int, Index> hilbert_function(const GradedModule& M) {
  std::map<int, Index> h;
  for (int m = M.lo(); m <= M.hi(); ++m) h[m] = M.dim(m);
  return h;
}

}  // namespace frobdet
