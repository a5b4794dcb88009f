#include "mvtensor/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "mvtensor/error.hpp"

namespace mvt {

std::string to_string(SignatureKind kind) {
  switch (kind) {
    case SignatureKind::MV: return "MV";
    case SignatureKind::PMV: return "PMV";
    case SignatureKind::RieszQ: return "RieszQ";
    case SignatureKind::FMV: return "FMV";
  }
  return "MV";
}

SignatureKind parse_signature_kind(std::string_view text) {
  if (text == "MV") return SignatureKind::MV;
  if (text == "PMV") return SignatureKind::PMV;
  if (text == "RieszQ") return SignatureKind::RieszQ;
  if (text == "FMV") return SignatureKind::FMV;
  throw Error(ErrorKind::ParseError, "unknown signature '" + std::string(text) + "'");
}

std::vector<Rational01> Signature::scalars() const {
  std::vector<Rational01> out;
  if (!has_scalars()) return out;
  for (std::int64_t k = 0; k <= scalar_den; ++k) out.emplace_back(k, scalar_den);
  return out;
}

FiniteAlgebra::FiniteAlgebra(Parts parts)
    : points_(std::move(parts.points)),
      carrier_(std::move(parts.carrier)),
      generators_(std::move(parts.generators)),
      degrees_(std::move(parts.degrees)),
      signature_(parts.signature),
      oplus_table_(std::move(parts.oplus_table)),
      neg_table_(std::move(parts.neg_table)),
      product_table_(std::move(parts.product_table)) {
  if (!points_) throw Error(ErrorKind::DomainMismatch, "algebra without a point set");
  if (carrier_.empty()) throw Error(ErrorKind::DomainMismatch, "empty carrier");
  lookup_.reserve(carrier_.size());
  for (Index i = 0; i < carrier_.size(); ++i) {
    if (!same_points(carrier_[i].domain_ptr(), points_)) {
      throw Error(ErrorKind::DomainMismatch, "carrier element on a foreign point set");
    }
    if (!lookup_.emplace(carrier_[i].value_vector(), i).second) {
      throw Error(ErrorKind::DomainMismatch, "duplicate carrier element " + carrier_[i].str());
    }
  }
  if (!degrees_.empty() && degrees_.size() != carrier_.size()) {
    throw Error(ErrorKind::DomainMismatch, "degree vector does not match the carrier");
  }
  const std::size_t n = carrier_.size();
  if (oplus_table_ && oplus_table_->size() != n * n) throw Error(ErrorKind::DomainMismatch, "bad ⊕ table");
  if (neg_table_ && neg_table_->size() != n) throw Error(ErrorKind::DomainMismatch, "bad * table");
  if (product_table_ && product_table_->size() != n * n) {
    throw Error(ErrorKind::DomainMismatch, "bad product table");
  }
  auto constant_index = [&](Rational01 v, const char* what) {
    auto found = find(PointFunction::constant(points_, v).value_vector());
    if (!found) throw Error(ErrorKind::DomainMismatch, std::string("carrier lacks the constant ") + what);
    return *found;
  };
  zero_ = parts.zero ? *parts.zero : constant_index(Rational01::zero(), "0");
  top_ = parts.top ? *parts.top : constant_index(Rational01::one(), "1");
  for (Index g : generators_) {
    if (g >= n) throw Error(ErrorKind::DomainMismatch, "generator index out of range");
  }
}

std::optional<Index> FiniteAlgebra::find(const std::vector<Rational01>& values) const {
  auto it = lookup_.find(values);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<Index> FiniteAlgebra::find(const PointFunction& f) const {
  if (!same_points(f.domain_ptr(), points_)) return std::nullopt;
  return find(f.value_vector());
}

Index FiniteAlgebra::index_of(const PointFunction& f) const {
  if (!same_points(f.domain_ptr(), points_)) {
    throw Error(ErrorKind::DomainMismatch, "element " + f.str() + " lives on another point set");
  }
  auto found = find(f.value_vector());
  if (!found) throw Error(ErrorKind::NotInCarrier, "element " + f.str() + " is not in the carrier");
  return *found;
}

namespace {

template <class Fn>
std::vector<Rational01> combine(const PointFunction& a, const PointFunction& b, Fn fn) {
  std::vector<Rational01> out(a.values().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = fn(a.at(i), b.at(i));
  return out;
}

}  // namespace

std::optional<Index> FiniteAlgebra::try_oplus(Index x, Index y) const {
  if (oplus_table_) return (*oplus_table_)[x * size() + y];
  return find(combine(carrier_.at(x), carrier_.at(y), [](auto a, auto b) { return mvt::oplus(a, b); }));
}

std::optional<Index> FiniteAlgebra::try_neg(Index x) const {
  if (neg_table_) return (*neg_table_)[x];
  return find(pointwise_neg(carrier_.at(x)).value_vector());
}

Index FiniteAlgebra::oplus(Index x, Index y) const {
  auto r = try_oplus(x, y);
  if (!r) throw Error(ErrorKind::NotInCarrier, "carrier is not closed under ⊕");
  return *r;
}

Index FiniteAlgebra::neg(Index x) const {
  auto r = try_neg(x);
  if (!r) throw Error(ErrorKind::NotInCarrier, "carrier is not closed under *");
  return *r;
}

Index FiniteAlgebra::odot(Index x, Index y) const { return neg(oplus(neg(x), neg(y))); }

Index FiniteAlgebra::join(Index x, Index y) const {
  if (has_tables()) return oplus(odot(x, neg(y)), y);
  auto r = find(combine(carrier_.at(x), carrier_.at(y), [](auto a, auto b) { return mvt::join(a, b); }));
  if (!r) throw Error(ErrorKind::NotInCarrier, "carrier is not closed under ∨");
  return *r;
}

Index FiniteAlgebra::meet(Index x, Index y) const {
  if (has_tables()) return odot(x, oplus(neg(x), y));
  auto r = find(combine(carrier_.at(x), carrier_.at(y), [](auto a, auto b) { return mvt::meet(a, b); }));
  if (!r) throw Error(ErrorKind::NotInCarrier, "carrier is not closed under ∧");
  return *r;
}

bool FiniteAlgebra::leq(Index x, Index y) const { return mvt::leq(carrier_.at(x), carrier_.at(y)); }

std::optional<Index> FiniteAlgebra::product(Index x, Index y) const {
  if (product_table_) return (*product_table_)[x * size() + y];
  if (!signature_.has_product()) return std::nullopt;
  return find(combine(carrier_.at(x), carrier_.at(y), [](auto a, auto b) { return times(a, b); }));
}

std::optional<Index> FiniteAlgebra::scale(Rational01 alpha, Index x) const {
  if (!signature_.has_scalars()) return std::nullopt;
  return find(mvt::scale(alpha, carrier_.at(x)).value_vector());
}

std::vector<Index> FiniteAlgebra::sorted_order() const {
  std::vector<Index> order(size());
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(),
            [&](Index a, Index b) { return lex_less(carrier_[a].values(), carrier_[b].values()); });
  return order;
}

AlgebraPtr FiniteAlgebra::with_signature(Signature sig) const {
  Parts parts{points_, carrier_, generators_, degrees_, sig, zero_, top_, oplus_table_, neg_table_, std::nullopt};
  return std::make_shared<const FiniteAlgebra>(std::move(parts));
}

AlgebraPtr FiniteAlgebra::with_product_table(std::vector<std::optional<Index>> table) const {
  Parts parts{points_, carrier_, generators_, degrees_, signature_, zero_, top_, oplus_table_, neg_table_,
              std::move(table)};
  return std::make_shared<const FiniteAlgebra>(std::move(parts));
}

namespace {

// Deduplicating worklist closure. Each element is combined with every
// element inserted before it (and itself) exactly once, so the result is
// independent of anything but the generator order.
class ClosureEngine {
 public:
  ClosureEngine(PointSetPtr points, Signature sig, std::size_t cap)
      : points_(std::move(points)), sig_(sig), cap_(cap), scalars_(sig.scalars()) {}

  std::optional<Index> add(std::vector<Rational01> values, int degree) {
    auto it = lookup_.find(values);
    if (it != lookup_.end()) return it->second;
    if (values_.size() >= cap_) {
      throw Error(ErrorKind::CapExceeded,
                  "closure exceeds cap " + std::to_string(cap_) + " (" + to_string(sig_.kind) + " closure)");
    }
    Index idx = values_.size();
    lookup_.emplace(values, idx);
    values_.push_back(std::move(values));
    degrees_.push_back(degree);
    return idx;
  }

  void run_ungraded() {
    while (processed_ < values_.size()) process(processed_++, /*layer=*/0, /*graded=*/false);
  }

  void seed_layer(int layer) {
    const Index existing = values_.size();
    if (sig_.has_product()) {
      for (Index i = 0; i < existing; ++i) {
        for (Index j = i; j < existing; ++j) {
          if (degrees_[i] + degrees_[j] == layer) add(product_values(i, j), layer);
        }
      }
    }
    if (!scalars_.empty()) {
      for (Index i = 0; i < existing; ++i) {
        if (degrees_[i] + 1 != layer) continue;
        for (auto alpha : scalars_) add(scaled_values(alpha, i), layer);
      }
    }
  }

  void run_layer(int layer) {
    while (processed_ < values_.size()) process(processed_++, layer, /*graded=*/true);
  }

  std::vector<std::vector<Rational01>>& values() { return values_; }
  std::vector<int>& degrees() { return degrees_; }

 private:
  std::vector<Rational01> product_values(Index a, Index b) const {
    std::vector<Rational01> out(values_[a].size());
    for (std::size_t p = 0; p < out.size(); ++p) out[p] = times(values_[a][p], values_[b][p]);
    return out;
  }

  std::vector<Rational01> scaled_values(Rational01 alpha, Index a) const {
    std::vector<Rational01> out(values_[a].size());
    for (std::size_t p = 0; p < out.size(); ++p) out[p] = times(alpha, values_[a][p]);
    return out;
  }

  void process(Index e, int layer, bool graded) {
    const std::size_t width = values_[e].size();
    const int de = degrees_[e];
    {
      std::vector<Rational01> out(width);
      for (std::size_t p = 0; p < width; ++p) out[p] = neg(values_[e][p]);
      add(std::move(out), de);
    }
    for (Index x = 0; x <= e; ++x) {
      std::vector<Rational01> out(width);
      for (std::size_t p = 0; p < width; ++p) out[p] = oplus(values_[e][p], values_[x][p]);
      add(std::move(out), std::max(de, degrees_[x]));
    }
    if (sig_.has_product()) {
      for (Index x = 0; x <= e; ++x) {
        if (graded && de + degrees_[x] > layer) continue;
        add(product_values(e, x), de + degrees_[x]);
      }
    }
    if (!scalars_.empty() && (!graded || de + 1 <= layer)) {
      for (auto alpha : scalars_) add(scaled_values(alpha, e), de + (graded ? 1 : 0));
    }
  }

  PointSetPtr points_;
  Signature sig_;
  std::size_t cap_;
  std::vector<Rational01> scalars_;
  std::vector<std::vector<Rational01>> values_;
  std::vector<int> degrees_;
  std::unordered_map<std::vector<Rational01>, Index, ValuesHash> lookup_;
  Index processed_ = 0;
};

void check_generator(const PointSetPtr& points, const PointFunction& g) {
  if (!same_points(points, g.domain_ptr())) {
    throw Error(ErrorKind::DomainMismatch, "generator " + g.str() + " lives on another point set");
  }
}

AlgebraPtr finish(const PointSetPtr& points, ClosureEngine& engine, std::vector<Index> gens, Signature sig,
                  bool graded) {
  FiniteAlgebra::Parts parts;
  parts.points = points;
  for (auto& v : engine.values()) parts.carrier.emplace_back(points, std::move(v));
  parts.generators = std::move(gens);
  if (graded) parts.degrees = std::move(engine.degrees());
  parts.signature = sig;
  return std::make_shared<const FiniteAlgebra>(std::move(parts));
}

void push_unique(std::vector<Index>& gens, Index g) {
  if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
}

}  // namespace

AlgebraPtr generate_subalgebra(const PointSetPtr& points, std::span<const PointFunction> gens, Signature sig,
                               std::size_t cap) {
  if (sig.graded()) {
    const int degree = sig.has_product() ? 1 : 0;
    std::vector<GradedGenerator> graded;
    for (const auto& g : gens) graded.push_back({g, degree});
    return generate_graded(points, graded, sig, cap);
  }
  ClosureEngine engine(points, sig, cap);
  engine.add(PointFunction::constant(points, Rational01::zero()).value_vector(), 0);
  engine.add(PointFunction::constant(points, Rational01::one()).value_vector(), 0);
  std::vector<Index> recorded;
  for (const auto& g : gens) {
    check_generator(points, g);
    push_unique(recorded, *engine.add(g.value_vector(), 0));
  }
  engine.run_ungraded();
  return finish(points, engine, std::move(recorded), sig, false);
}

AlgebraPtr generate_graded(const PointSetPtr& points, std::span<const GradedGenerator> gens, Signature sig,
                           std::size_t cap) {
  if (!sig.graded()) throw Error(ErrorKind::SignatureViolation, "graded closure needs a positive degree bound");
  for (const auto& g : gens) {
    check_generator(points, g.function);
    if (g.degree < 0) throw Error(ErrorKind::SignatureViolation, "negative generator degree");
  }
  ClosureEngine engine(points, sig, cap);
  engine.add(PointFunction::constant(points, Rational01::zero()).value_vector(), 0);
  engine.add(PointFunction::constant(points, Rational01::one()).value_vector(), 0);
  std::vector<Index> recorded;
  for (int layer = 0; layer <= sig.max_degree; ++layer) {
    if (layer > 0) engine.seed_layer(layer);
    for (const auto& g : gens) {
      if (g.degree == layer) push_unique(recorded, *engine.add(g.function.value_vector(), layer));
    }
    engine.run_layer(layer);
  }
  // Generators above the degree bound are dropped; record the ones that made it.
  return finish(points, engine, std::move(recorded), sig, true);
}

AlgebraPtr chain(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::DomainMismatch, "chain order must be positive");
  auto points = PointSet::singleton();
  std::vector<PointFunction> gens{PointFunction::constant(points, Rational01(1, n))};
  return generate_subalgebra(points, gens, Signature::mv(), static_cast<std::size_t>(n) + 2);
}

AlgebraPtr boolean_algebra() { return chain(1); }

AlgebraPtr chain_product(std::span<const std::int64_t> orders) {
  if (orders.empty()) throw Error(ErrorKind::DomainMismatch, "empty chain product");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < orders.size(); ++i) labels.push_back("x" + std::to_string(i + 1));
  auto points = PointSet::make(labels);
  std::vector<PointFunction> gens;
  std::size_t expected = 1;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::vector<Rational01> v(orders.size(), Rational01::zero());
    v[i] = Rational01(1, orders[i]);
    gens.emplace_back(points, std::move(v));
    expected *= static_cast<std::size_t>(orders[i] + 1);
  }
  return generate_subalgebra(points, gens, Signature::mv(), expected);
}

AlgebraPtr diagonal_chain(std::int64_t n, std::size_t r) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < r; ++i) labels.push_back("x" + std::to_string(i + 1));
  auto points = PointSet::make(labels);
  std::vector<PointFunction> gens{PointFunction::constant(points, Rational01(1, n))};
  return generate_subalgebra(points, gens, Signature::mv(), static_cast<std::size_t>(n) + 2);
}

AlgebraPtr interval_algebra(const AlgebraPtr& algebra, Index a) {
  if (a >= algebra->size()) throw Error(ErrorKind::NotInCarrier, "interval bound is not in the carrier");
  std::vector<Index> members;
  for (Index i = 0; i < algebra->size(); ++i) {
    if (algebra->leq(i, a)) members.push_back(i);
  }
  std::vector<Index> local(algebra->size(), static_cast<Index>(-1));
  for (Index k = 0; k < members.size(); ++k) local[members[k]] = k;

  const std::size_t n = members.size();
  FiniteAlgebra::Parts parts;
  parts.points = algebra->points();
  for (Index m : members) parts.carrier.push_back(algebra->element(m));
  parts.signature = Signature::mv();
  parts.zero = local[algebra->zero()];
  parts.top = local[a];
  std::vector<Index> oplus_table(n * n);
  std::vector<Index> neg_table(n);
  for (Index i = 0; i < n; ++i) {
    neg_table[i] = local[algebra->odot(algebra->neg(members[i]), a)];
    for (Index j = 0; j < n; ++j) {
      oplus_table[i * n + j] = local[algebra->meet(algebra->oplus(members[i], members[j]), a)];
    }
  }
  parts.oplus_table = std::move(oplus_table);
  parts.neg_table = std::move(neg_table);
  parts.generators.resize(n);
  std::iota(parts.generators.begin(), parts.generators.end(), Index{0});
  return std::make_shared<const FiniteAlgebra>(std::move(parts));
}

AlgebraPtr interval_algebra(const AlgebraPtr& algebra, const PointFunction& a) {
  return interval_algebra(algebra, algebra->index_of(a));
}

bool same_carrier(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!same_points(a.points(), b.points()) || a.size() != b.size()) return false;
  for (const auto& f : a.carrier()) {
    if (!b.find(f.value_vector())) return false;
  }
  return true;
}

}  // namespace mvt
