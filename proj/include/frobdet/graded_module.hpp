#pragma once

#include <climits>
#include <map>
#include <string>
#include <vector>

#include "frobdet/coordinate_ring.hpp"
#include "frobdet/hypersurface.hpp"
#include "frobdet/linalg.hpp"

namespace frobdet {

enum class Provenance { Pushforward, B1Cokernel, Saturated, Twisted };

std::string_view to_string(Provenance p);

/// A graded S-module known on the degree window [lo, hi]: one finite-dimensional
/// F_p space per degree plus, for every variable x_i and lo <= m < hi, the matrix
/// of multiplication by x_i from degree m to degree m + 1. Degrees outside the
/// window report dimension 0.
class GradedModule {
 public:
  GradedModule(PrimeField field, int nvars, int lo, int hi, Provenance provenance);

  const PrimeField& field() const noexcept { return field_; }
  int nvars() const noexcept { return nvars_; }
  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return hi_; }
  Provenance provenance() const noexcept { return provenance_; }

  Index dim(int m) const;
  const std::string& description(int m) const;
  /// Multiplication by x_var from degree m to m + 1; defined for lo <= m < hi.
  /// For m = lo - 1 this is the zero map into degree lo.
  MatrixFp action(int var, int m) const;

  void set_piece(int m, Index dim, std::string description);
  void set_action(int var, int m, MatrixFp a);
  void set_provenance(Provenance p) noexcept { provenance_ = p; }

  /// x_i x_j = x_j x_i on every degree with two consecutive actions.
  bool actions_commute() const;

 private:
  std::size_t slot(int m) const;

  PrimeField field_;
  int nvars_;
  int lo_;
  int hi_;
  Provenance provenance_;
  std::vector<Index> dims_;
  std::vector<std::string> descriptions_;
  std::vector<std::vector<MatrixFp>> actions_;  // [var][m - lo]
};

/// pieces[m] = A_{pm}, x_i acting as multiplication by x_i^p.
GradedModule pushforward_module(const CoordinateRing& A, int m_lo, int m_hi);
GradedModule pushforward_module(const HypersurfaceSpec& h, int m_hi);

/// pieces[m] = coker(A_m -> A_{pm}, f -> f^p), with induced actions. The
/// p-th power map is checked injective in every degree (NonInjectivePower).
/// Piece bases are the non-pivot monomials of A_{pm}, i.e. explicit lifts.
GradedModule b1_cokernel_module(const CoordinateRing& A, int m_lo, int m_hi);
GradedModule b1_cokernel_module(const HypersurfaceSpec& h, int m_hi);

/// Degree of A needed to materialize the pushforward / B^1 modules through m_hi.
int coordinate_ring_degree_for(std::uint32_t p, int m_hi);

struct SaturationOptions {
  /// Largest ideal power tried before giving up.
  int n_cap = 64;
  /// Degree from which the input is already known to agree with its
  /// saturation. The exponent search in degree m starts at max(0, from - m);
  /// INT_MIN disables the lower bound.
  int saturated_from = INT_MIN;
};

struct Saturation {
  GradedModule module;
  /// Stabilizing ideal power per degree, m_lo .. m_hi.
  std::vector<int> exponents;
  /// The single power used to represent every degree.
  int uniform_exponent = 0;
};

/// Degree-m piece of Hom_S((x_0..x_n)^N, M): tuples (v_mu) in M_{m+N}, one per
/// degree-N monomial mu, with x_b v_mu = x_a v_mu' whenever x_b mu = x_a mu'.
/// Columns of the result span the solution space.
MatrixFp ideal_power_hom(const GradedModule& M, int m, int N);

/// Saturation on [m_lo, m_hi] via ideal-power Hom with stabilization detection.
/// M must be materialized far enough for the exponents tried (NoStabilization otherwise).
Saturation saturate_with_diagnostics(const GradedModule& M, int m_lo, int m_hi, const SaturationOptions& opts = {});
GradedModule saturate(const GradedModule& M, int m_lo, int m_hi, const SaturationOptions& opts = {});

/// pieces'[m] = pieces[m + t].
GradedModule twist(const GradedModule& M, int t);

struct Generator {
  int degree;
  VectorFp coords;
};

/// Lifts of bases of M_m / sum_i x_i M_{m-1}, degree by degree.
std::vector<Generator> minimal_generators(const GradedModule& M);

std::map<int, Index> hilbert_function(const GradedModule& M);

}  // namespace frobdet
