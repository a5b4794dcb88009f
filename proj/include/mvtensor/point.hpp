#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mvtensor/rational.hpp"

namespace mvt {

/// A finite labeled point set, optionally factored as a cartesian product.
///
/// Product points are ordered row-major over the factors and labeled by
/// joining the factor labels with '|', so (X×Y)×Z and X×(Y×Z) are the same
/// PointSet with the same labels.
class PointSet {
 public:
  /// A single unfactored set. Labels must be unique, nonempty and free of '|'.
  explicit PointSet(std::vector<std::string> labels);

  static std::shared_ptr<const PointSet> make(std::vector<std::string> labels);
  static std::shared_ptr<const PointSet> singleton(std::string label = "p");
  static std::shared_ptr<const PointSet> product(const PointSet& left, const PointSet& right);
  static std::shared_ptr<const PointSet> power(const PointSet& base, int exponent);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t index) const { return labels_.at(index); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> find(std::string_view label) const;

  const std::vector<std::vector<std::string>>& factors() const noexcept { return factors_; }
  std::size_t factor_count() const noexcept { return factors_.size(); }

  /// Per-factor coordinates of a point.
  std::vector<std::size_t> coordinates(std::size_t index) const;
  std::size_t index_of(std::span<const std::size_t> coordinates) const;

  bool operator==(const PointSet& other) const noexcept { return factors_ == other.factors_; }

 private:
  PointSet() = default;
  void rebuild_labels();

  std::vector<std::vector<std::string>> factors_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

using PointSetPtr = std::shared_ptr<const PointSet>;

bool same_points(const PointSetPtr& a, const PointSetPtr& b);

/// A total map from a finite point set to [0,1] ∩ Q.
class PointFunction {
 public:
  PointFunction(PointSetPtr domain, std::vector<Rational01> values);

  static PointFunction constant(PointSetPtr domain, Rational01 value);

  const PointSet& domain() const noexcept { return *domain_; }
  const PointSetPtr& domain_ptr() const noexcept { return domain_; }
  std::span<const Rational01> values() const noexcept { return values_; }
  const std::vector<Rational01>& value_vector() const noexcept { return values_; }
  Rational01 at(std::size_t point) const { return values_.at(point); }
  Rational01 at(std::string_view label) const;

  bool operator==(const PointFunction& other) const;

  /// "(1/2, 1)"
  std::string str() const;

 private:
  PointSetPtr domain_;
  std::vector<Rational01> values_;
};

enum class MvOp { Oplus, Neg, Odot, Join, Meet, Prod };

/// The standard-model operation on scalars; `y` is ignored for Neg and
/// required for every binary operation.
Rational01 mv_scalar_op(MvOp op, Rational01 x, std::optional<Rational01> y = std::nullopt);

/// Label-by-label application. Throws DomainMismatch when the point sets differ.
PointFunction pointwise(MvOp op, const PointFunction& f, const PointFunction& g);
PointFunction pointwise_neg(const PointFunction& f);
PointFunction scale(Rational01 alpha, const PointFunction& f);

bool leq(const PointFunction& f, const PointFunction& g);

/// Lexicographic order on value vectors; the canonical serialization order.
bool lex_less(std::span<const Rational01> a, std::span<const Rational01> b);

struct ValuesHash {
  std::size_t operator()(const std::vector<Rational01>& values) const noexcept;
};

}  // namespace mvt
