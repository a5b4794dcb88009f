#pragma once

#include <cstdint>
#include <vector>

#include "mvtensor/algebra.hpp"
#include "mvtensor/morphism.hpp"

namespace mvt {

/// One simple factor of a finite functional algebra: a class of points with
/// equal restrictions and the evaluation onto the chain Ł_order.
struct SpectralComponent {
  std::int64_t order = 1;
  std::vector<std::size_t> points;  // the class, in point order
  Hom evaluation;                   // A → Ł_order at points.front()
};

/// Components in order of their first point. Needs pointwise operations;
/// throws SignatureViolation on table-backed algebras.
std::vector<SpectralComponent> spectral_decomposition(const AlgebraPtr& a);

/// The sorted chain-order multiset.
std::vector<std::int64_t> chain_orders(const AlgebraPtr& a);

}  // namespace mvt
