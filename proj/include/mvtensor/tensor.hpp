#pragma once

#include <cstdint>
#include <map>

#include "mvtensor/algebra.hpp"
#include "mvtensor/morphism.hpp"

namespace mvt {

/// A⊗B on X×Y with its universal bimorphism β(a,b) = a·b.
struct TensorResult {
  AlgebraPtr product;
  Bimorphism beta;
};

/// MV-closure of {a·b} on X×Y. Inputs are used through their MV reducts;
/// table-backed inputs are rejected with SignatureViolation.
TensorResult tensor(const AlgebraPtr& a, const AlgebraPtr& b, std::size_t cap = kDefaultCap);

/// The unique ω: A⊗B → [0, β(1,1)] with ω(a⊗b) = β(a,b), together with the
/// interval it lands in.
struct BimorphismExtension {
  AlgebraPtr interval;
  Hom omega;
};

BimorphismExtension extend_bimorphism(const TensorResult& t, const Bimorphism& beta);

/// f ↦ f∘swap from A⊗B to B⊗A, verified bijective.
Hom commutativity_witness(const AlgebraPtr& a, const AlgebraPtr& b, std::size_t cap = kDefaultCap);

struct AssociativityWitness {
  AlgebraPtr left;    // (A⊗B)⊗C
  AlgebraPtr right;   // A⊗(B⊗C)
  AlgebraPtr triple;  // MV⟨a·b·c⟩
  bool left_equals_right = false;
  bool equals_triple = false;
  std::optional<Hom> regroup;  // identity on functions, when the carriers agree
};

AssociativityWitness associativity_witness(const AlgebraPtr& a, const AlgebraPtr& b, const AlgebraPtr& c,
                                           std::size_t cap = kDefaultCap);

/// Ł_d⊗B with its partial Ł_d scalar action: B sits in degree 0 and the
/// action is defined on it, so the Riesz laws hold wherever both sides exist.
struct ScalarLevel {
  std::int64_t d = 1;
  AlgebraPtr algebra;        // signature riesz(d, 1) on {p}×X
  bool matches_tensor = false;  // carrier equals tensor(Ł_d, B)
};

ScalarLevel scalar_level(const AlgebraPtr& b, std::int64_t d, std::size_t cap = kDefaultCap);

/// The embedding Ł_d⊗B → Ł_{d'}⊗B induced by Ł_d ⊆ Ł_{d'}; requires d | d'.
Hom scalar_embedding(const ScalarLevel& from, const ScalarLevel& to);

struct ScalarTower {
  std::vector<ScalarLevel> levels;                      // one per requested d
  std::map<std::pair<std::int64_t, std::int64_t>, Hom> embeddings;  // every d | d'
};

ScalarTower scalar_tower(const AlgebraPtr& b, const std::vector<std::int64_t>& ds, std::size_t cap = kDefaultCap);

}  // namespace mvt
