#pragma once

#include "mvtensor/algebra.hpp"
#include "mvtensor/morphism.hpp"

namespace mvt {

/// A commuting square f_a∘z_a = f_b∘z_b with injective legs into `e`.
struct Amalgam {
  AlgebraPtr e;
  Hom f_a;
  Hom f_b;
  bool square_commutes = false;
  bool legs_injective = false;
};

/// Amalgam on the fiber product W = {(x,y) : z_a(z)(x) = z_b(z)(y) for all z}
/// with f_a(a) = a∘pr_X and f_b(b) = b∘pr_Y. Throws EmbeddingFailure when
/// z_a or z_b is not an embedding from a common source or a projection of W
/// misses a point.
Amalgam amalgamate_mv(const Hom& z_a, const Hom& z_b, std::size_t cap = kDefaultCap);

/// The same square closed under the common signature of A and B (products,
/// scalars, degree bound), with legs verified against the full signature.
Amalgam amalgamate_pmv(const Hom& z_a, const Hom& z_b, std::size_t cap = kDefaultCap);

}  // namespace mvt
