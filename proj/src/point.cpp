#include "mvtensor/point.hpp"

#include <algorithm>
#include <set>

#include "mvtensor/error.hpp"

namespace mvt {

PointSet::PointSet(std::vector<std::string> labels) {
  if (labels.empty()) throw Error(ErrorKind::DomainMismatch, "a point set needs at least one label");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty() || l.find('|') != std::string::npos) {
      throw Error(ErrorKind::DomainMismatch, "invalid point label '" + l + "'");
    }
    if (!seen.insert(l).second) throw Error(ErrorKind::DomainMismatch, "duplicate point label '" + l + "'");
  }
  factors_.push_back(std::move(labels));
  rebuild_labels();
}

void PointSet::rebuild_labels() {
  std::size_t total = 1;
  for (const auto& f : factors_) total *= f.size();
  labels_.clear();
  labels_.reserve(total);
  lookup_.clear();
  for (std::size_t i = 0; i < total; ++i) {
    std::string label;
    std::size_t rest = i;
    std::vector<std::size_t> coords(factors_.size());
    for (std::size_t k = factors_.size(); k-- > 0;) {
      coords[k] = rest % factors_[k].size();
      rest /= factors_[k].size();
    }
    for (std::size_t k = 0; k < factors_.size(); ++k) {
      if (k) label += '|';
      label += factors_[k][coords[k]];
    }
    lookup_.emplace(label, i);
    labels_.push_back(std::move(label));
  }
}

std::shared_ptr<const PointSet> PointSet::make(std::vector<std::string> labels) {
  return std::make_shared<const PointSet>(std::move(labels));
}

std::shared_ptr<const PointSet> PointSet::singleton(std::string label) {
  return make({std::move(label)});
}

std::shared_ptr<const PointSet> PointSet::product(const PointSet& left, const PointSet& right) {
  auto result = std::shared_ptr<PointSet>(new PointSet());
  result->factors_ = left.factors_;
  result->factors_.insert(result->factors_.end(), right.factors_.begin(), right.factors_.end());
  result->rebuild_labels();
  return result;
}

std::shared_ptr<const PointSet> PointSet::power(const PointSet& base, int exponent) {
  if (exponent < 1) throw Error(ErrorKind::DomainMismatch, "point set power needs exponent >= 1");
  auto result = std::shared_ptr<PointSet>(new PointSet());
  for (int i = 0; i < exponent; ++i) {
    result->factors_.insert(result->factors_.end(), base.factors_.begin(), base.factors_.end());
  }
  result->rebuild_labels();
  return result;
}

std::optional<std::size_t> PointSet::find(std::string_view label) const {
  auto it = lookup_.find(std::string(label));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> PointSet::coordinates(std::size_t index) const {
  std::vector<std::size_t> coords(factors_.size());
  for (std::size_t k = factors_.size(); k-- > 0;) {
    coords[k] = index % factors_[k].size();
    index /= factors_[k].size();
  }
  return coords;
}

std::size_t PointSet::index_of(std::span<const std::size_t> coordinates) const {
  if (coordinates.size() != factors_.size()) {
    throw Error(ErrorKind::DomainMismatch, "coordinate tuple has the wrong arity");
  }
  std::size_t index = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) index = index * factors_[k].size() + coordinates[k];
  return index;
}

bool same_points(const PointSetPtr& a, const PointSetPtr& b) { return a == b || *a == *b; }

PointFunction::PointFunction(PointSetPtr domain, std::vector<Rational01> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (!domain_ || values_.size() != domain_->size()) {
    throw Error(ErrorKind::DomainMismatch, "point function is not total on its domain");
  }
}

PointFunction PointFunction::constant(PointSetPtr domain, Rational01 value) {
  std::vector<Rational01> values(domain->size(), value);
  return PointFunction(std::move(domain), std::move(values));
}

Rational01 PointFunction::at(std::string_view label) const {
  auto index = domain_->find(label);
  if (!index) throw Error(ErrorKind::DomainMismatch, "unknown point label '" + std::string(label) + "'");
  return values_[*index];
}

bool PointFunction::operator==(const PointFunction& other) const {
  return values_ == other.values_ && same_points(domain_, other.domain_);
}

std::string PointFunction::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ", ";
    out += values_[i].str();
  }
  return out + ")";
}

Rational01 mv_scalar_op(MvOp op, Rational01 x, std::optional<Rational01> y) {
  if (op == MvOp::Neg) return neg(x);
  if (!y) throw Error(ErrorKind::DomainMismatch, "binary operation needs two arguments");
  switch (op) {
    case MvOp::Oplus: return oplus(x, *y);
    case MvOp::Odot: return odot(x, *y);
    case MvOp::Join: return join(x, *y);
    case MvOp::Meet: return meet(x, *y);
    case MvOp::Prod: return times(x, *y);
    case MvOp::Neg: break;
  }
  return neg(x);
}

PointFunction pointwise(MvOp op, const PointFunction& f, const PointFunction& g) {
  if (!same_points(f.domain_ptr(), g.domain_ptr())) {
    throw Error(ErrorKind::DomainMismatch, "point functions live on different point sets");
  }
  std::vector<Rational01> out(f.values().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mv_scalar_op(op, f.at(i), g.at(i));
  return PointFunction(f.domain_ptr(), std::move(out));
}

PointFunction pointwise_neg(const PointFunction& f) {
  std::vector<Rational01> out(f.values().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = neg(f.at(i));
  return PointFunction(f.domain_ptr(), std::move(out));
}

PointFunction scale(Rational01 alpha, const PointFunction& f) {
  std::vector<Rational01> out(f.values().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = times(alpha, f.at(i));
  return PointFunction(f.domain_ptr(), std::move(out));
}

bool leq(const PointFunction& f, const PointFunction& g) {
  if (!same_points(f.domain_ptr(), g.domain_ptr())) {
    throw Error(ErrorKind::DomainMismatch, "point functions live on different point sets");
  }
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    if (g.at(i) < f.at(i)) return false;
  }
  return true;
}

bool lex_less(std::span<const Rational01> a, std::span<const Rational01> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t ValuesHash::operator()(const std::vector<Rational01>& values) const noexcept {
  std::size_t h = values.size();
  Rational01Hash rh;
  for (const auto& v : values) h = h * 0x9E3779B97F4A7C15ull + rh(v);
  return h;
}

}  // namespace mvt
