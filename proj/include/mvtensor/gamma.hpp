#pragma once

#include <cstdint>
#include <vector>

#include "mvtensor/algebra.hpp"
#include "mvtensor/morphism.hpp"
#include "mvtensor/tower.hpp"

namespace mvt {

/// ∏ (1/n_i)ℤ with strong unit (1,…,1). A factor 1 is ℤ.
struct UnitGroup {
  std::vector<std::int64_t> factors;

  bool operator==(const UnitGroup&) const = default;
  std::string str() const;  // "(1/2)Z x Z"
};

using GroupElement = std::vector<Rational>;

/// Γ(G) = [0,u]_G on points x1..xr, enumerated directly.
AlgebraPtr gamma(const UnitGroup& g);

/// A group map given by the images of the generators (1/n_i)e_i.
struct GroupMap {
  UnitGroup source;
  UnitGroup target;
  std::vector<GroupElement> images;

  GroupElement apply(const GroupElement& x) const;
};

/// Γ(h) = h restricted to the unit interval. Throws NotUnitPreserving when
/// h(u) ≠ u, and NotWellDefined when h leaves the target group or is not an
/// ℓ-homomorphism.
Hom gamma_hom(const GroupMap& h);

/// Λ(A) through the spectral decomposition, with the isomorphism Γ(Λ(A)) → A.
struct LambdaResult {
  UnitGroup group;
  Hom iso;
};

LambdaResult lambda(const AlgebraPtr& a);

/// T^n(G,u) := Λ(T^n(Γ(G))) with ε transported to group maps.
struct FuRing {
  UnitGroup base;
  Tower tower;
  std::vector<LambdaResult> levels;                // [n-1]
  std::vector<std::vector<GroupMap>> embeddings;   // [n-1][m-n-1] for n < m
  std::vector<bool> gamma_iso;                     // Γ(T^n(G,u)) ≅ T^n(Γ(G)) by iso_check
};

/// Each transported ε is checked to be a unit-preserving ℓ-embedding whose
/// Γ-image is ε itself.
FuRing tensor_fu_ring(const UnitGroup& g, int max_level, std::size_t cap = kDefaultCap);

}  // namespace mvt
