#pragma once

#include <vector>

#include "mvtensor/algebra.hpp"
#include "mvtensor/audit.hpp"
#include "mvtensor/morphism.hpp"

namespace mvt {

/// (n, f) with f ∈ T^n(A), a representative of its class in the limit.
struct TowerElement {
  int level = 1;
  PointFunction value;
};

/// T^1(A) = A, T^n(A) = T^{n-1}(A)⊗A on X^n, truncated at max_level, with
/// the embeddings ε_{n,m}(f) = f⊗1⊗…⊗1 tabulated for n ≤ m.
class Tower {
 public:
  Tower(AlgebraPtr base, int max_level, std::vector<AlgebraPtr> levels);

  const AlgebraPtr& base() const noexcept { return base_; }
  int max_level() const noexcept { return max_level_; }
  /// T^n(A) for 1 ≤ n ≤ max_level; throws LevelOverflow.
  const AlgebraPtr& level(int n) const;
  /// Index of ε_{n,m}(T^n element i) in T^m.
  Index eps(int n, int m, Index i) const;
  const std::vector<Index>& eps_table(int n, int m) const;

  TowerElement element(int n, Index i) const;
  Index index_of(const TowerElement& x) const;

 private:
  friend Tower build_tower(const AlgebraPtr&, int, std::size_t);

  AlgebraPtr base_;
  int max_level_;
  std::vector<AlgebraPtr> levels_;
  std::vector<std::vector<std::vector<Index>>> eps_;  // [n-1][m-1]
};

/// Builds and audits the tower: every ε_{n,m} is an injective MV-hom,
/// ε_{n,n} = id and ε_{m,k}∘ε_{n,m} = ε_{n,k}. Throws CapExceeded.
Tower build_tower(const AlgebraPtr& a, int max_level, std::size_t cap = kDefaultCap);

/// f ↦ (q ↦ f(q div |X|^{m-n})) as a function on X^m.
PointFunction eps_function(const Tower& tw, int n, int m, const PointFunction& f);

/// γ_{n,m}(a,b)(x,y) = a(x)·b(y), checked to lie in T^{n+m}(A).
/// Throws LevelOverflow past max_level.
PointFunction gamma_map(const Tower& tw, int n, int m, const PointFunction& a, const PointFunction& b);

/// ε-promotion of both sides to the larger level.
bool equivalent(const Tower& tw, const TowerElement& x, const TowerElement& y);
TowerElement promote(const Tower& tw, const TowerElement& x, int level);
/// The minimum-level representative.
TowerElement canonical(const Tower& tw, const TowerElement& x);

/// (a,n)·(b,m) = (γ_{n,m}(a,b), n+m). Throws LevelOverflow.
TowerElement tensor_pmv_product(const Tower& tw, const TowerElement& x, const TowerElement& y);
/// ⊕ and * at the common level.
TowerElement tower_oplus(const Tower& tw, const TowerElement& x, const TowerElement& y);
TowerElement tower_neg(const Tower& tw, const TowerElement& x);

/// Identities (1)–(5) relating ε and γ over all level-compatible arguments.
/// (3) and (5) compare functions on X^{n+m} after the canonical coordinate
/// regrouping; the number of arguments that also agree positionally is
/// reported in a separate item.
AxiomReport check_eps_gamma_identities(const Tower& tw);

/// Well-definedness on ∼-classes, commutativity, bilinearity, associativity
/// and unit laws of the tower product, compared positionally by ε-promotion.
AxiomReport check_product_laws(const Tower& tw);

/// A level-wise family of homomorphisms out of a tower.
struct TowerMap {
  std::vector<Hom> levels;  // [n-1]: T^n → target

  Index apply(const Tower& tw, const TowerElement& x) const;
};

/// f^♯ with λ_n(a_1⊗…⊗a_n) = f(a_1)·…·f(a_n), built level by level from
/// λ_n(t⊗a) = λ_{n-1}(t)·f(a). `p` must carry a product; throws
/// NotWellDefined when a product leaves it or a level fails to extend.
TowerMap lift_hom(const Tower& tw, const AlgebraPtr& p, const Hom& f);

/// h^♯ with h^♯(a_1⊗…⊗a_n) = h(a_1)⊗…⊗h(a_n).
TowerMap functor_on_hom(const Tower& tw_a, const Tower& tw_b, const Hom& h);

/// λ_m∘ε_{n,m} = λ_n, the lift product law and f^♯∘ε_1 = f.
AxiomReport check_lift(const Tower& tw, const AlgebraPtr& p, const Hom& f, const TowerMap& lift);
/// h^♯∘ε_{1,A} = ε_{1,B}∘h and compatibility with every ε_{n,m}.
AxiomReport check_naturality(const Tower& tw_a, const Tower& tw_b, const Hom& h, const TowerMap& lifted);
/// (g∘h)^♯ = g^♯∘h^♯ level by level.
bool functoriality_holds(const TowerMap& gh, const TowerMap& g, const TowerMap& h);

/// αx = (αa, n) when the base carries α and the result stays in T^n(A).
/// Throws ScalarUnsupported otherwise.
TowerElement riesz_scalar_on_tower(const Tower& tw, Rational01 alpha, const TowerElement& x);

/// The Riesz laws and α(x·y) = (αx)·y = x·(αy) on every tower instance
/// where all terms are defined.
AxiomReport check_tower_scalars(const Tower& tw);

struct FixedPointVerdict {
  bool holds = false;
  bool product_closed = false;
  std::string witness;
  std::vector<std::size_t> level_sizes;  // |T^n(P)|
};

/// P ·-closed, the diagonal of every T^n(P) (n ≤ N) lies in P and
/// diag∘ε_{1,n} = id: the multiplication T(P) → P is a retraction of ε_1.
FixedPointVerdict pmv_fixed_point_check(const AlgebraPtr& p, int max_level, std::size_t cap = kDefaultCap);

struct AdjunctionShadow {
  AlgebraPtr left;   // Ł_{d^N}⊗T^N(A)
  AlgebraPtr right;  // T^N(Ł_d⊗A)
  std::optional<Hom> iso;
};

AdjunctionShadow adjunction_shadow(const AlgebraPtr& a, std::int64_t d, int level, std::size_t cap = kDefaultCap);

}  // namespace mvt
