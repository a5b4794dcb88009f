#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mvtensor/algebra.hpp"

namespace mvt {

enum class TermKind { Zero, One, Var, Oplus, Neg, Odot, Prod, Scal };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  TermKind kind = TermKind::Zero;
  int var = 0;          // 1-based, for Var
  Rational01 scalar;    // for Scal
  std::vector<TermPtr> args;

  /// Prefix form accepted by parse_term.
  std::string str() const;
};

/// Prefix syntax: 0, 1, x<i>, (var i), (neg t), (oplus t t), (odot t t),
/// (prod t t), (scal p/q t). Variables are 1-based and at most k.
/// Throws ParseError; SignatureViolation for · without a product or scal
/// without scalars.
TermPtr parse_term(std::string_view text, Signature sig, int k);

/// Standard-model value; `assignment[i-1]` is x_i.
Rational01 eval_term(const Term& t, std::span<const Rational01> assignment);

inline constexpr std::size_t kMaxGridPoints = 1'000'000;

/// (Ł_d)^k with labels like "0|1/2", coordinates in increasing order.
PointSetPtr grid_points(int k, std::int64_t d, std::size_t max_points = kMaxGridPoints);
std::vector<Rational01> grid_coordinates(const PointSet& grid, std::int64_t d, std::size_t point);

/// Throws GridTooLarge past `max_points` grid points.
PointFunction term_function_on_grid(const Term& t, int k, std::int64_t d, std::size_t max_points = kMaxGridPoints);

struct GridVerdict {
  bool equal = true;  // on this grid only
  std::optional<std::vector<Rational01>> witness;
  Rational01 left;
  Rational01 right;
};

GridVerdict grid_equal(const Term& t1, const Term& t2, int k, std::int64_t d);

struct CarrierComparison {
  bool equal = false;
  std::size_t left_size = 0;
  std::size_t right_size = 0;
  std::string witness;  // a function in exactly one of the carriers
};

struct FreeEvidence {
  int k = 1;
  std::int64_t d = 1;
  int degree = 2;
  AlgebraPtr projections_mv;     // MV⟨π_1..π_k⟩ on the grid
  AlgebraPtr pmv_closure;        // graded PMV⟨π_1..π_k⟩, degree ≤ N
  AlgebraPtr tower_image;        // MV⟨a_1⋯a_n : a_i ∈ MV⟨π⟩, n ≤ N⟩
  CarrierComparison pmv;
  AlgebraPtr riesz_closure;      // Ł_d-scalar closure of MV⟨π⟩, one scalar step
  AlgebraPtr scalar_tensor;      // Ł_d⊗MV⟨π⟩
  CarrierComparison riesz;
};

/// Grid-scale comparison of the free PMV-algebra with the tensor PMV-algebra
/// of the free MV-algebra, and of the free Riesz MV-algebra with the scalar
/// extension. `omit_products` plants a defect by dropping products from the
/// tower route.
FreeEvidence free_pmv_evidence(int k, std::int64_t d, int degree = 2, std::size_t cap = kDefaultCap,
                               bool omit_products = false);

}  // namespace mvt
