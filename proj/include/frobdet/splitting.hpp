#pragma once

#include <vector>

#include "frobdet/hypersurface.hpp"
#include "frobdet/linalg.hpp"

namespace frobdet {

/// Fedder's criterion: X is Frobenius split iff G^{p-1} has a monomial with
/// every exponent at most p - 1.
bool fedder_split_test(const HypersurfaceSpec& h);

/// d <= n + 1; split hypersurfaces of larger degree do not exist.
bool degree_bound_check(const HypersurfaceSpec& h);

/// (d-1)(d-2)/2 for plane curves; throws NotACurve otherwise.
int genus(const HypersurfaceSpec& h);

/// Matrix of the p-linear Frobenius on H^1(X, O_X) for a plane curve, in the
/// basis of interior monomials x^a y^b z^c (a, b, c >= 1, a + b + c = d).
struct HasseWittMatrix {
  std::vector<Monomial> basis;
  MatrixFp entries;
};

/// entries(i, j) = coefficient of x^{p a_j - a_i} y^{p b_j - b_i} z^{p c_j - c_i} in G^{p-1}.
/// For cubics this is the classical Hasse invariant (coefficient of (xyz)^{p-1}).
HasseWittMatrix hasse_witt(const HypersurfaceSpec& h);

/// Hasse-Witt matrix invertible. Genus-0 curves count as ordinary.
bool is_ordinary(const HypersurfaceSpec& h);

/// Degree at which the Jacobian ideal (G, dG/dx_0, ..., dG/dx_n) is tested for
/// filling all of S: E = (d-1) + (n+1)(d-2) + 1.
int smoothness_test_degree(const HypersurfaceSpec& h);

/// True iff the Jacobian ideal contains every monomial of degree E, which holds
/// exactly when V(G) has no singular point over the algebraic closure.
bool is_smooth(const HypersurfaceSpec& h);

}  // namespace frobdet
