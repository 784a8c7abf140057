#pragma once

#include <string>

#include "frobdet/polynomial.hpp"

namespace frobdet {

/// X = V(G) ⊂ P^n over F_p. G is nonzero, homogeneous of degree d >= 1, in
/// n + 1 >= 3 variables.
class HypersurfaceSpec {
 public:
  explicit HypersurfaceSpec(HomogPoly G);

  const HomogPoly& equation() const noexcept { return G_; }
  const PrimeField& field() const noexcept { return G_.field(); }
  std::uint32_t characteristic() const noexcept { return G_.field().characteristic(); }
  int degree() const noexcept { return G_.degree(); }
  /// Ambient projective dimension n.
  int ambient_dim() const noexcept { return G_.nvars() - 1; }
  int nvars() const noexcept { return G_.nvars(); }
  int dim() const noexcept { return ambient_dim() - 1; }
  bool is_plane_curve() const noexcept { return ambient_dim() == 2; }

 private:
  HomogPoly G_;
};

}  // namespace frobdet
