#include "mvtensor/gamma.hpp"

#include <map>

#include "mvtensor/error.hpp"
#include "mvtensor/spectrum.hpp"

namespace mvt {

std::string UnitGroup::str() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " x ";
    out += factors[i] == 1 ? "Z" : "(1/" + std::to_string(factors[i]) + ")Z";
  }
  return out;
}

AlgebraPtr gamma(const UnitGroup& g) {
  if (g.factors.empty()) throw Error(ErrorKind::DomainMismatch, "a unit group needs at least one factor");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    if (g.factors[i] < 1) throw Error(ErrorKind::DomainMismatch, "group factors must be positive");
    labels.push_back("x" + std::to_string(i + 1));
  }
  auto points = PointSet::make(labels);
  FiniteAlgebra::Parts parts;
  parts.points = points;
  parts.signature = Signature::mv();
  // Odometer over 0 ≤ k_i ≤ n_i, first factor slowest.
  std::vector<std::int64_t> k(g.factors.size(), 0);
  for (;;) {
    std::vector<Rational01> values;
    for (std::size_t i = 0; i < k.size(); ++i) values.emplace_back(k[i], g.factors[i]);
    parts.carrier.emplace_back(points, std::move(values));
    std::size_t i = k.size();
    while (i > 0 && k[i - 1] == g.factors[i - 1]) k[--i] = 0;
    if (i == 0) break;
    ++k[i - 1];
  }
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    std::vector<Rational01> values(g.factors.size(), Rational01::zero());
    values[i] = Rational01(1, g.factors[i]);
    std::size_t index = 0;
    for (std::size_t j = 0; j < parts.carrier.size(); ++j) {
      if (parts.carrier[j].value_vector() == values) index = j;
    }
    parts.generators.push_back(index);
  }
  return std::make_shared<const FiniteAlgebra>(std::move(parts));
}

GroupElement GroupMap::apply(const GroupElement& x) const {
  GroupElement out(target.factors.size(), Rational(0));
  for (std::size_t i = 0; i < source.factors.size(); ++i) {
    const Rational multiple = x.at(i) * Rational(source.factors[i]);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = out[j] + multiple * images.at(i).at(j);
  }
  return out;
}

Hom gamma_hom(const GroupMap& h) {
  const auto& src = h.source.factors;
  const auto& dst = h.target.factors;
  if (h.images.size() != src.size()) throw Error(ErrorKind::DomainMismatch, "group map needs one image per factor");
  std::vector<int> depends(dst.size(), -1);
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (h.images[i].size() != dst.size()) throw Error(ErrorKind::DomainMismatch, "image has the wrong arity");
    for (std::size_t j = 0; j < dst.size(); ++j) {
      const auto& v = h.images[i][j];
      if (dst[j] % v.den() != 0) {
        throw Error(ErrorKind::NotWellDefined, "image coordinate " + v.str() + " is outside (1/" +
                                                   std::to_string(dst[j]) + ")Z");
      }
      if (v < Rational(0)) throw Error(ErrorKind::NotWellDefined, "group map is not order preserving");
      if (v == Rational(0)) continue;
      if (depends[j] != -1 && depends[j] != static_cast<int>(i)) {
        throw Error(ErrorKind::NotWellDefined, "group map does not preserve the lattice order");
      }
      depends[j] = static_cast<int>(i);
    }
  }
  GroupElement unit(src.size(), Rational(1));
  const auto image = h.apply(unit);
  for (const auto& v : image) {
    if (v != Rational(1)) {
      std::string shown;
      for (const auto& c : image) shown += (shown.empty() ? "" : ", ") + c.str();
      throw Error(ErrorKind::NotUnitPreserving, "h(u) = (" + shown + ") is not the unit");
    }
  }
  auto a = gamma(h.source);
  auto b = gamma(h.target);
  Hom out{a, b, std::vector<Index>(a->size())};
  for (Index i = 0; i < a->size(); ++i) {
    GroupElement x;
    for (auto v : a->element(i).values()) x.push_back(v.to_rational());
    std::vector<Rational01> values;
    for (const auto& v : h.apply(x)) values.emplace_back(v);
    out.table[i] = b->index_of(PointFunction(b->points(), std::move(values)));
  }
  verify_hom(out);
  return out;
}

LambdaResult lambda(const AlgebraPtr& a) {
  const auto components = spectral_decomposition(a);
  LambdaResult out;
  for (const auto& c : components) out.group.factors.push_back(c.order);
  auto g = gamma(out.group);
  std::map<std::vector<Index>, Index> by_evaluations;
  for (Index i = 0; i < a->size(); ++i) {
    std::vector<Index> key;
    for (const auto& c : components) key.push_back(c.evaluation(i));
    by_evaluations.emplace(std::move(key), i);
  }
  out.iso = Hom{g, a, std::vector<Index>(g->size())};
  for (Index i = 0; i < g->size(); ++i) {
    std::vector<Index> key;
    for (std::size_t c = 0; c < components.size(); ++c) {
      const auto& chain_n = components[c].evaluation.target;
      key.push_back(chain_n->index_of(PointFunction::constant(chain_n->points(), g->element(i).at(c))));
    }
    auto it = by_evaluations.find(key);
    if (it == by_evaluations.end()) throw Error(ErrorKind::NotWellDefined, "joint evaluation is not onto");
    out.iso.table[i] = it->second;
  }
  verify_hom(out.iso);
  if (!out.iso.injective() || !out.iso.surjective()) {
    throw Error(ErrorKind::NotWellDefined, "Γ(Λ(A)) → A is not a bijection");
  }
  return out;
}

FuRing tensor_fu_ring(const UnitGroup& g, int max_level, std::size_t cap) {
  FuRing ring{g, build_tower(gamma(g), max_level, cap), {}, {}, {}};
  for (int n = 1; n <= max_level; ++n) {
    ring.levels.push_back(lambda(ring.tower.level(n)));
    ring.gamma_iso.push_back(iso_check(gamma(ring.levels.back().group), ring.tower.level(n)).has_value());
  }
  ring.embeddings.resize(max_level);
  for (int n = 1; n < max_level; ++n) {
    const auto& from = ring.levels[n - 1];
    const auto gamma_from = from.iso.source;
    for (int m = n + 1; m <= max_level; ++m) {
      const auto& to = ring.levels[m - 1];
      std::vector<Index> inverse(to.iso.table.size());
      for (Index i = 0; i < to.iso.table.size(); ++i) inverse[to.iso.table[i]] = i;
      auto transport = [&](Index i) { return inverse[ring.tower.eps(n, m, from.iso(i))]; };

      GroupMap map{from.group, to.group, {}};
      for (Index gen : gamma_from->generators()) {
        GroupElement image;
        for (auto v : to.iso.source->element(transport(gen)).values()) image.push_back(v.to_rational());
        map.images.push_back(std::move(image));
      }
      const Hom restricted = gamma_hom(map);
      for (Index i = 0; i < gamma_from->size(); ++i) {
        if (restricted(i) != transport(i)) {
          throw Error(ErrorKind::NotWellDefined, "transported ε disagrees with ε at level " + std::to_string(n));
        }
      }
      if (!restricted.injective()) throw Error(ErrorKind::NotWellDefined, "transported ε is not an embedding");
      ring.embeddings[n - 1].push_back(std::move(map));
    }
  }
  return ring;
}

}  // namespace mvt
