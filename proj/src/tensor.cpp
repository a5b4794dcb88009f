#include "mvtensor/tensor.hpp"

#include <unordered_set>

#include "mvtensor/error.hpp"

namespace mvt {

namespace {

void require_pointwise(const FiniteAlgebra& a) {
  if (a.has_tables()) throw Error(ErrorKind::SignatureViolation, "tensor factors need pointwise operations");
}

std::vector<Rational01> outer(const PointFunction& f, const PointFunction& g) {
  std::vector<Rational01> out;
  out.reserve(f.values().size() * g.values().size());
  for (auto x : f.values()) {
    for (auto y : g.values()) out.push_back(times(x, y));
  }
  return out;
}

// Identity on functions between two carriers on the same points.
Hom carrier_identity(const AlgebraPtr& from, const AlgebraPtr& to) {
  Hom h{from, to, std::vector<Index>(from->size())};
  for (Index i = 0; i < from->size(); ++i) {
    auto found = to->find(from->element(i).value_vector());
    if (!found) throw Error(ErrorKind::NotInCarrier, from->element(i).str() + " is missing from the target");
    h.table[i] = *found;
  }
  return h;
}

}  // namespace

TensorResult tensor(const AlgebraPtr& a, const AlgebraPtr& b, std::size_t cap) {
  require_pointwise(*a);
  require_pointwise(*b);
  auto points = PointSet::product(*a->points(), *b->points());
  std::vector<PointFunction> gens;
  std::unordered_set<std::vector<Rational01>, ValuesHash> seen;
  std::vector<std::vector<Rational01>> pairs;
  pairs.reserve(a->size() * b->size());
  for (Index i = 0; i < a->size(); ++i) {
    for (Index j = 0; j < b->size(); ++j) {
      auto values = outer(a->element(i), b->element(j));
      if (seen.insert(values).second) gens.emplace_back(points, values);
      pairs.push_back(std::move(values));
    }
  }
  auto product = generate_subalgebra(points, gens, Signature::mv(), cap);
  Bimorphism beta{a, b, product, std::vector<Index>(pairs.size())};
  for (std::size_t k = 0; k < pairs.size(); ++k) beta.table[k] = *product->find(pairs[k]);
  return {product, std::move(beta)};
}

BimorphismExtension extend_bimorphism(const TensorResult& t, const Bimorphism& beta) {
  const auto& target = beta.target;
  auto interval = interval_algebra(target, beta(beta.left->top(), beta.right->top()));
  std::vector<std::pair<Index, Index>> seeds;
  for (Index a = 0; a < beta.left->size(); ++a) {
    for (Index b = 0; b < beta.right->size(); ++b) {
      auto image = interval->find(target->element(beta(a, b)));
      if (!image) {
        throw Error(ErrorKind::NotWellDefined,
                    "β(" + beta.left->element(a).str() + ", " + beta.right->element(b).str() + ") exceeds β(1, 1)");
      }
      seeds.emplace_back(t.beta(a, b), *image);
    }
  }
  return {interval, extend_hom(t.product, interval, seeds)};
}

Hom commutativity_witness(const AlgebraPtr& a, const AlgebraPtr& b, std::size_t cap) {
  auto ab = tensor(a, b, cap).product;
  auto ba = tensor(b, a, cap).product;
  const std::size_t nx = a->points()->size();
  const std::size_t ny = b->points()->size();
  Hom h{ab, ba, std::vector<Index>(ab->size())};
  std::vector<Rational01> swapped(nx * ny);
  for (Index i = 0; i < ab->size(); ++i) {
    const auto& f = ab->element(i);
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t y = 0; y < ny; ++y) swapped[y * nx + x] = f.at(x * ny + y);
    }
    auto found = ba->find(swapped);
    if (!found) throw Error(ErrorKind::NotWellDefined, "swap of " + f.str() + " is not in B⊗A");
    h.table[i] = *found;
  }
  verify_hom(h);
  if (!h.injective() || !h.surjective()) throw Error(ErrorKind::NotWellDefined, "swap is not a bijection");
  return h;
}

AssociativityWitness associativity_witness(const AlgebraPtr& a, const AlgebraPtr& b, const AlgebraPtr& c,
                                           std::size_t cap) {
  AssociativityWitness w;
  w.left = tensor(tensor(a, b, cap).product, c, cap).product;
  w.right = tensor(a, tensor(b, c, cap).product, cap).product;
  auto points = w.left->points();
  std::vector<PointFunction> gens;
  std::unordered_set<std::vector<Rational01>, ValuesHash> seen;
  for (const auto& f : a->carrier()) {
    for (const auto& g : b->carrier()) {
      auto fg = outer(f, g);
      for (const auto& h : c->carrier()) {
        std::vector<Rational01> values;
        values.reserve(fg.size() * h.values().size());
        for (auto x : fg) {
          for (auto z : h.values()) values.push_back(times(x, z));
        }
        if (seen.insert(values).second) gens.emplace_back(points, std::move(values));
      }
    }
  }
  w.triple = generate_subalgebra(points, gens, Signature::mv(), cap);
  w.left_equals_right = same_carrier(*w.left, *w.right);
  w.equals_triple = same_carrier(*w.left, *w.triple);
  if (w.left_equals_right) {
    w.regroup = carrier_identity(w.left, w.right);
    verify_hom(*w.regroup);
  }
  return w;
}

ScalarLevel scalar_level(const AlgebraPtr& b, std::int64_t d, std::size_t cap) {
  if (d < 1) throw Error(ErrorKind::DomainMismatch, "scalar denominator must be positive");
  require_pointwise(*b);
  auto base = b->with_signature(Signature::mv());
  auto points = PointSet::product(*PointSet::singleton(), *b->points());
  std::vector<GradedGenerator> gens;
  for (const auto& f : b->carrier()) gens.push_back({PointFunction(points, f.value_vector()), 0});
  ScalarLevel level;
  level.d = d;
  level.algebra = generate_graded(points, gens, Signature::riesz(d, 1), cap);
  level.matches_tensor = same_carrier(*level.algebra, *tensor(chain(d), base, cap).product);
  return level;
}

Hom scalar_embedding(const ScalarLevel& from, const ScalarLevel& to) {
  if (to.d % from.d != 0) {
    throw Error(ErrorKind::ScalarUnsupported,
                "no chain embedding Ł_" + std::to_string(from.d) + " → Ł_" + std::to_string(to.d));
  }
  Hom h = carrier_identity(from.algebra, to.algebra);
  verify_hom(h);
  if (!h.injective()) throw Error(ErrorKind::NotWellDefined, "scalar embedding is not injective");
  return h;
}

ScalarTower scalar_tower(const AlgebraPtr& b, const std::vector<std::int64_t>& ds, std::size_t cap) {
  ScalarTower tower;
  for (auto d : ds) tower.levels.push_back(scalar_level(b, d, cap));
  for (const auto& from : tower.levels) {
    for (const auto& to : tower.levels) {
      if (from.d < to.d && to.d % from.d == 0) tower.embeddings.emplace(std::make_pair(from.d, to.d), scalar_embedding(from, to));
    }
  }
  return tower;
}

}  // namespace mvt
