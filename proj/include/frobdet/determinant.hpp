#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "frobdet/presentation.hpp"

namespace frobdet {

inline constexpr int kMaxExactSize = 16;
/// Largest size handled by cofactor expansion inside verify_det_power; bigger
/// matrices go through evaluation and interpolation.
inline constexpr int kMaxCofactorSize = 12;

/// Memoized cofactor expansion over column subsets. SizeCap above kMaxExactSize.
HomogPoly det_exact(const PolyMatrix& M);

/// Fraction-free elimination with exact polynomial division.
HomogPoly bareiss_det(const PolyMatrix& M);

/// Recursive expansion along the first row. The matrix must be alternating:
/// zero diagonal and M^T = -M (NotSkew); odd size raises OddSize.
HomogPoly pfaffian(const PolyMatrix& M);

bool is_alternating(const PolyMatrix& M);

/// Determinant of a dense s × s matrix over F_{p^k}, row-major.
FieldElement numeric_det(std::vector<FieldElement> a, int s);

/// Smallest k with p^k > bound (at least 1).
int sampling_extension_degree(std::uint32_t p, std::uint64_t bound);

/// Compares det M(pt) with lambda * G(pt)^r at seeded random points of
/// F_{p^k}^{n+1}, p^k > 4 deg(det). lambda is fitted at the first point where G
/// does not vanish; DegenerateSamples when G vanishes at every point.
bool schwartz_zippel_check(const PolyMatrix& M, const HomogPoly& G, int r, int trials, std::uint64_t seed);

/// Exact determinant of degree `degree` via evaluation on a grid in the affine
/// chart x_n = 1 over F_{p^k} and tensor-product interpolation.
HomogPoly interpolated_det(const PolyMatrix& M, int degree);

enum class DetMethod { ExactCofactor, ExactBareiss, Interpolated };
std::string_view to_string(DetMethod m);

struct DetCertificate {
  int size = 0;
  int r = 0;
  std::uint32_t lambda = 0;
  DetMethod method = DetMethod::ExactCofactor;
  int sz_trials = 0;
  /// Entry degree -> number of nonzero entries of that degree.
  std::map<int, int> degree_profile;
};

struct VerifyOptions {
  int sz_trials = 16;
  std::uint64_t seed = 0;
};

/// Degree of det M from row/column degree offsets of the nonzero entries.
/// DegreeIncompatible when no consistent offsets exist.
int infer_det_degree(const PolyMatrix& M);

/// det M = lambda G^r with lambda in F_p^*, r = deg det / deg G. Runs the
/// Schwartz-Zippel screen, then an exact determinant. Mismatch carries the residual.
DetCertificate verify_det_power(const PolyMatrix& M, const HomogPoly& G, const VerifyOptions& opts = {});

/// Every nonzero entry has degree in [1, n - 1].
bool degree_profile_check(const PresentationMatrix& P, int n);

struct SkewWitness {
  MatrixFp P;
  MatrixFp Q;
};

/// Seeded search for constant invertible P, Q with P M Q alternating. Solves the
/// linear conditions on Q for P = I and samples the solution space. Odd sizes
/// return nothing.
std::optional<SkewWitness> skew_equivalence_probe(const PolyMatrix& M, std::uint64_t seed, int trials = 200);

/// Constant-matrix products for witness checks.
PolyMatrix constant_product(const MatrixFp& P, const PolyMatrix& M, const MatrixFp& Q);

}  // namespace frobdet
