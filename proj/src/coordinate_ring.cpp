#include "frobdet/coordinate_ring.hpp"

#include "frobdet/hypersurface.hpp"

namespace frobdet {

HypersurfaceSpec::HypersurfaceSpec(HomogPoly G) : G_(std::move(G)) {
  if (G_.is_zero()) throw Error(ErrorCode::ZeroModP, "hypersurface equation is zero");
  if (G_.degree() < 1) throw Error(ErrorCode::InvalidArgument, "hypersurface equation must have degree >= 1");
  if (G_.nvars() < 3) throw Error(ErrorCode::InvalidArgument, "need at least 3 variables (n >= 2)");
}

CoordinateRing::CoordinateRing(const HomogPoly& G, int max_degree) : G_(G), max_degree_(max_degree) {
  if (G.is_zero()) throw Error(ErrorCode::InvalidArgument, "coordinate ring of the zero polynomial");
  const PrimeField& F = G.field();
  const auto [lead, lead_c] = G.leading_term();
  const std::int64_t p = F.characteristic();
  const std::int64_t scale = F.neg(F.inv(lead_c));  // -1/lc
  std::vector<std::pair<Monomial, std::uint32_t>> tail;
  for (const auto& t : G.sorted_terms())
    if (!(t.first == lead)) tail.push_back(t);

  pieces_.resize(static_cast<std::size_t>(max_degree + 1));
  for (int j = 0; j <= max_degree; ++j) {
    Piece& pc = pieces_[static_cast<std::size_t>(j)];
    pc.monomials = monomials_of_degree(G.nvars(), j);
    const Index nmon = static_cast<Index>(pc.monomials.size());
    pc.index.reserve(pc.monomials.size());
    for (Index k = 0; k < nmon; ++k) pc.index.emplace(pc.monomials[static_cast<std::size_t>(k)], k);
    std::vector<Index> std_index(pc.monomials.size(), -1);
    for (Index k = 0; k < nmon; ++k) {
      const Monomial& m = pc.monomials[static_cast<std::size_t>(k)];
      if (!lead.divides(m)) {
        std_index[static_cast<std::size_t>(k)] = static_cast<Index>(pc.basis.size());
        pc.basis.push_back(m);
      }
    }
    const Index dim = static_cast<Index>(pc.basis.size());
    pc.nf = MatrixFp::Zero(dim, nmon);
    // Ascending grlex: every monomial on the right of lead*v -> -(tail*v)/lc is smaller.
    for (Index k = nmon - 1; k >= 0; --k) {
      const Monomial& m = pc.monomials[static_cast<std::size_t>(k)];
      const Index s = std_index[static_cast<std::size_t>(k)];
      if (s >= 0) {
        pc.nf(s, k) = 1;
        continue;
      }
      const Monomial shift = m.quotient(lead);
      for (const auto& [tm, tc] : tail) {
        const Index src = pc.index.at(tm * shift);
        const std::int64_t f = (scale * tc) % p;
        for (Index r = 0; r < dim; ++r) {
          const std::int64_t v = pc.nf(r, src);
          if (v != 0) pc.nf(r, k) = (pc.nf(r, k) + f * v) % p;
        }
      }
    }
  }
}

const CoordinateRing::Piece& CoordinateRing::piece(int j) const {
  if (j < 0 || j > max_degree_)
    throw Error(ErrorCode::InvalidArgument,
                "coordinate ring degree " + std::to_string(j) + " outside [0, " + std::to_string(max_degree_) + "]");
  return pieces_[static_cast<std::size_t>(j)];
}

Index CoordinateRing::dim(int j) const {
  if (j < 0) return 0;
  return static_cast<Index>(piece(j).basis.size());
}

const std::vector<Monomial>& CoordinateRing::basis(int j) const { return piece(j).basis; }
const std::vector<Monomial>& CoordinateRing::monomials(int j) const { return piece(j).monomials; }

Index CoordinateRing::monomial_index(const Monomial& m) const {
  return piece(static_cast<int>(m.degree())).index.at(m);
}

const MatrixFp& CoordinateRing::normal_forms(int j) const { return piece(j).nf; }

VectorFp CoordinateRing::normal_form(const Monomial& m) const {
  const Piece& pc = piece(static_cast<int>(m.degree()));
  return pc.nf.col(pc.index.at(m));
}

VectorFp CoordinateRing::normal_form(const HomogPoly& f) const {
  const int j = f.degree();
  VectorFp acc = VectorFp::Zero(dim(j));
  if (f.is_zero()) return acc;
  const Piece& pc = piece(j);
  const std::int64_t p = field().characteristic();
  for (const auto& [m, c] : f.terms()) acc += static_cast<std::int64_t>(c) * pc.nf.col(pc.index.at(m));
  return acc.unaryExpr([p](std::int64_t v) { return v % p; });
}

HomogPoly CoordinateRing::to_poly(int j, const VectorFp& coords) const {
  HomogPoly f(field(), nvars(), j);
  const auto& b = basis(j);
  for (Index i = 0; i < coords.size(); ++i)
    if (coords(i) != 0) f.add_term(b[static_cast<std::size_t>(i)], static_cast<std::uint32_t>(coords(i)));
  return f;
}

MatrixFp CoordinateRing::multiplication_map(int j, const Monomial& mono) const {
  const int target = j + static_cast<int>(mono.degree());
  MatrixFp out(dim(target), dim(j));
  if (j < 0) return out;
  const auto& b = basis(j);
  const Piece& tp = piece(target);
  for (Index c = 0; c < static_cast<Index>(b.size()); ++c)
    out.col(c) = tp.nf.col(tp.index.at(b[static_cast<std::size_t>(c)] * mono));
  return out;
}

std::size_t hypersurface_hilbert(int nvars, int d, int j) {
  if (j < 0) return 0;
  return count_monomials(nvars, j) - count_monomials(nvars, j - d);
}

}  // namespace frobdet
