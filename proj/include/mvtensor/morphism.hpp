#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvtensor/algebra.hpp"

namespace mvt {

/// A map between carriers given by its table on source indices.
struct Hom {
  AlgebraPtr source;
  AlgebraPtr target;
  std::vector<Index> table;

  Index operator()(Index i) const { return table.at(i); }
  bool injective() const;
  bool surjective() const;
};

Hom identity_hom(const AlgebraPtr& algebra);
/// g∘f. Throws DomainMismatch when f's target is not g's source.
Hom compose(const Hom& g, const Hom& f);

/// Description of the first violated operation instance, or nothing.
/// Products are checked when both sides have one, scalars for every
/// source scalar when both sides have scalars.
std::optional<std::string> hom_violation(const Hom& h);
/// Throws NotWellDefined with the violated instance.
void verify_hom(const Hom& h);

/// Extends `seeds` (source index ↦ target index) along closure derivations
/// and verifies the result on every operation instance. Throws
/// NotWellDefined on conflicting derivations, on elements the seeds do not
/// reach, and on failed verification.
Hom extend_hom(const AlgebraPtr& source, const AlgebraPtr& target, const std::vector<std::pair<Index, Index>>& seeds);
/// Seeds aligned with source->generators().
Hom extend_hom(const AlgebraPtr& source, const AlgebraPtr& target, const std::vector<Index>& generator_images);

/// A signature-preserving bijection, when one exists.
std::optional<Hom> iso_check(const AlgebraPtr& a, const AlgebraPtr& b);

struct Bimorphism {
  AlgebraPtr left;
  AlgebraPtr right;
  AlgebraPtr target;
  std::vector<Index> table;  // row-major over left × right

  Index operator()(Index a, Index b) const { return table.at(a * right->size() + b); }
};

struct LinearityVerdict {
  bool linear = true;
  std::optional<std::pair<Index, Index>> counterexample;  // (x, y) with x ≤ y*
};

/// ω(x⊕y) = ω(x)⊕ω(y) for every pair with x ≤ y*.
LinearityVerdict check_linear(const std::vector<Index>& omega, const FiniteAlgebra& a, const FiniteAlgebra& b);

struct BimorphismVerdict {
  bool holds = true;
  std::string property;  // "linearity", "∨" or "∧"
  bool left_section = true;  // section β(a,-) when true, β(-,b) otherwise
  Index fixed = 0;
  Index x = 0;
  Index y = 0;

  std::string describe(const Bimorphism& beta) const;
};

BimorphismVerdict check_bimorphism(const Bimorphism& beta);

}  // namespace mvt
