#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mvtensor/point.hpp"
#include "mvtensor/rational.hpp"

namespace mvt {

inline constexpr std::size_t kDefaultCap = 20000;

enum class SignatureKind { MV, PMV, RieszQ, FMV };

std::string to_string(SignatureKind kind);
SignatureKind parse_signature_kind(std::string_view text);

/// Which operations a carrier is closed under.
///
/// Scalars always come from the finite chain Ł_{scalar_den}. A positive
/// `max_degree` truncates the product/scalar closure by degree: generators
/// and MV operations do not raise the degree, x·y has degree deg x + deg y
/// and αx has degree deg x + 1. Zero means "no truncation".
struct Signature {
  SignatureKind kind = SignatureKind::MV;
  std::int64_t scalar_den = 1;
  int max_degree = 0;

  static Signature mv() { return {}; }
  static Signature pmv(int max_degree = 0) { return {SignatureKind::PMV, 1, max_degree}; }
  static Signature riesz(std::int64_t scalar_den, int max_degree = 0) {
    return {SignatureKind::RieszQ, scalar_den, max_degree};
  }
  static Signature fmv(std::int64_t scalar_den, int max_degree = 0) {
    return {SignatureKind::FMV, scalar_den, max_degree};
  }

  bool has_product() const noexcept { return kind == SignatureKind::PMV || kind == SignatureKind::FMV; }
  bool has_scalars() const noexcept { return kind == SignatureKind::RieszQ || kind == SignatureKind::FMV; }
  bool graded() const noexcept { return max_degree > 0; }
  /// The chain Ł_{scalar_den}, or empty when the signature has no scalars.
  std::vector<Rational01> scalars() const;

  bool operator==(const Signature&) const = default;
};

using Index = std::size_t;

/// A finite carrier of point functions closed under a signature.
///
/// Operations are computed pointwise and looked up in the carrier unless an
/// explicit table overrides them (interval algebras and planted defects).
/// Elements are indexed in insertion order; `sorted_order()` gives the
/// canonical lexicographic order used for serialization.
class FiniteAlgebra {
 public:
  struct Parts {
    PointSetPtr points;
    std::vector<PointFunction> carrier;
    std::vector<Index> generators;
    std::vector<int> degrees;  // empty: all zero
    Signature signature;
    std::optional<Index> zero;  // default: the constant-0 function
    std::optional<Index> top;   // default: the constant-1 function
    std::optional<std::vector<Index>> oplus_table;
    std::optional<std::vector<Index>> neg_table;
    std::optional<std::vector<std::optional<Index>>> product_table;
  };

  explicit FiniteAlgebra(Parts parts);

  const PointSetPtr& points() const noexcept { return points_; }
  const Signature& signature() const noexcept { return signature_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  const PointFunction& element(Index i) const { return carrier_.at(i); }
  const std::vector<PointFunction>& carrier() const noexcept { return carrier_; }
  const std::vector<Index>& generators() const noexcept { return generators_; }
  int degree(Index i) const { return degrees_.empty() ? 0 : degrees_.at(i); }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  Index zero() const noexcept { return zero_; }
  Index top() const noexcept { return top_; }
  bool has_tables() const noexcept { return oplus_table_.has_value() || neg_table_.has_value(); }
  bool has_product_table() const noexcept { return product_table_.has_value(); }

  std::optional<Index> find(const std::vector<Rational01>& values) const;
  std::optional<Index> find(const PointFunction& f) const;
  /// Throws NotInCarrier.
  Index index_of(const PointFunction& f) const;

  std::optional<Index> try_oplus(Index x, Index y) const;
  std::optional<Index> try_neg(Index x) const;
  Index oplus(Index x, Index y) const;
  Index neg(Index x) const;
  Index odot(Index x, Index y) const;
  Index join(Index x, Index y) const;
  Index meet(Index x, Index y) const;
  bool leq(Index x, Index y) const;

  /// Defined only when the signature has a product and the result lies in the carrier.
  std::optional<Index> product(Index x, Index y) const;
  /// Defined only when the signature has scalars and the result lies in the carrier.
  std::optional<Index> scale(Rational01 alpha, Index x) const;

  std::vector<Index> sorted_order() const;

  /// Same carrier, different signature (drops any product table).
  std::shared_ptr<const FiniteAlgebra> with_signature(Signature sig) const;
  /// Same carrier with the product replaced by `table` (size()*size() entries).
  std::shared_ptr<const FiniteAlgebra> with_product_table(std::vector<std::optional<Index>> table) const;

 private:
  PointSetPtr points_;
  std::vector<PointFunction> carrier_;
  std::unordered_map<std::vector<Rational01>, Index, ValuesHash> lookup_;
  std::vector<Index> generators_;
  std::vector<int> degrees_;
  Signature signature_;
  Index zero_ = 0;
  Index top_ = 0;
  std::optional<std::vector<Index>> oplus_table_;
  std::optional<std::vector<Index>> neg_table_;
  std::optional<std::vector<std::optional<Index>>> product_table_;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

/// Least carrier containing `gens`, 0 and 1 closed under the signature.
/// Graded signatures give generators degree 1 when the signature has a
/// product and degree 0 otherwise. Throws CapExceeded past `cap` elements.
AlgebraPtr generate_subalgebra(const PointSetPtr& points, std::span<const PointFunction> gens, Signature sig,
                               std::size_t cap = kDefaultCap);

struct GradedGenerator {
  PointFunction function;
  int degree = 0;
};

/// Degree-truncated closure with explicit generator degrees.
AlgebraPtr generate_graded(const PointSetPtr& points, std::span<const GradedGenerator> gens, Signature sig,
                           std::size_t cap = kDefaultCap);

/// Ł_n = {0, 1/n, ..., 1} on a single point.
AlgebraPtr chain(std::int64_t n);
AlgebraPtr boolean_algebra();
/// Full product Ł_{n_1} × ... × Ł_{n_r} on points x1..xr.
AlgebraPtr chain_product(std::span<const std::int64_t> orders);
/// The diagonal copy {(x,...,x)} of Ł_n on r points.
AlgebraPtr diagonal_chain(std::int64_t n, std::size_t r);

/// The interval algebra [0,a] with x ⊕_a y = (x ⊕ y) ∧ a and x^{*a} = x* ⊙ a,
/// returned with materialized tables. Throws NotInCarrier.
AlgebraPtr interval_algebra(const AlgebraPtr& algebra, Index a);
AlgebraPtr interval_algebra(const AlgebraPtr& algebra, const PointFunction& a);

/// True when both carriers hold the same set of functions on the same points.
bool same_carrier(const FiniteAlgebra& a, const FiniteAlgebra& b);

}  // namespace mvt
