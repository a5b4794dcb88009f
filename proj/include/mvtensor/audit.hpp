#pragma once

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "mvtensor/algebra.hpp"

namespace mvt {

struct AxiomResult {
  std::string name;
  bool passed = true;
  std::size_t instances = 0;
  std::string witness;
};

struct AxiomReport {
  std::deque<AxiomResult> items;  // stable references while items are appended

  bool all_passed() const;
  const AxiomResult* find(std::string_view name) const;
};

/// Exhaustive check of the signature's equations over the carrier.
///
/// Partial operations (graded carriers, products that leave the carrier)
/// are checked on every instance where all terms are defined; the closure
/// items report which instances must be defined.
AxiomReport check_axioms(const FiniteAlgebra& a);

/// Some x ≠ 0 with nx ≤ x* for every n, if there is one.
std::optional<Index> has_infinitesimal(const FiniteAlgebra& a);

}  // namespace mvt
