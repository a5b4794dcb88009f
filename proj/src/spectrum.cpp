#include "mvtensor/spectrum.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mvtensor/error.hpp"

namespace mvt {

namespace {

struct PointClass {
  std::int64_t order = 1;
  std::vector<std::size_t> points;
};

// Points with equal restrictions to the carrier, each with the lcm of the
// denominators it sees.
std::vector<PointClass> point_classes(const FiniteAlgebra& a) {
  if (a.has_tables()) {
    throw Error(ErrorKind::SignatureViolation, "spectral decomposition needs pointwise operations");
  }
  const std::size_t width = a.points()->size();
  std::map<std::vector<Rational01>, std::size_t> seen;
  std::vector<PointClass> classes;
  for (std::size_t p = 0; p < width; ++p) {
    std::vector<Rational01> column;
    column.reserve(a.size());
    std::int64_t order = 1;
    for (const auto& f : a.carrier()) {
      column.push_back(f.at(p));
      order = lcm_checked(order, f.at(p).den());
    }
    auto [it, fresh] = seen.emplace(std::move(column), classes.size());
    if (fresh) classes.push_back({order, {}});
    classes[it->second].points.push_back(p);
  }
  return classes;
}

Hom evaluation_at(const AlgebraPtr& a, std::size_t point, std::int64_t order) {
  auto target = chain(order);
  Hom h{a, target, std::vector<Index>(a->size())};
  for (Index i = 0; i < a->size(); ++i) {
    h.table[i] = target->index_of(PointFunction::constant(target->points(), a->element(i).at(point)));
  }
  return h;
}

bool compatible_signatures(const Signature& a, const Signature& b) {
  return a.kind == b.kind && (!a.has_scalars() || a.scalar_den == b.scalar_den);
}

// The bijection a → b sending f to the function whose value on class
// `assign[c]` of b is f's value on class c of a.
std::optional<Hom> class_map(const AlgebraPtr& a, const AlgebraPtr& b, const std::vector<PointClass>& ca,
                             const std::vector<PointClass>& cb, const std::vector<std::size_t>& assign) {
  const std::size_t width = b->points()->size();
  std::vector<std::size_t> source_point(width);
  for (std::size_t c = 0; c < ca.size(); ++c) {
    for (std::size_t q : cb[assign[c]].points) source_point[q] = ca[c].points.front();
  }
  Hom h{a, b, std::vector<Index>(a->size())};
  std::vector<Rational01> values(width);
  for (Index i = 0; i < a->size(); ++i) {
    for (std::size_t q = 0; q < width; ++q) values[q] = a->element(i).at(source_point[q]);
    auto found = b->find(values);
    if (!found) return std::nullopt;
    h.table[i] = *found;
  }
  if (!h.injective() || hom_violation(h)) return std::nullopt;
  return h;
}

std::optional<Hom> spectral_iso(const AlgebraPtr& a, const AlgebraPtr& b) {
  const auto ca = point_classes(*a);
  const auto cb = point_classes(*b);
  if (ca.size() != cb.size()) return std::nullopt;
  std::vector<std::int64_t> oa, ob;
  for (const auto& c : ca) oa.push_back(c.order);
  for (const auto& c : cb) ob.push_back(c.order);
  std::sort(oa.begin(), oa.end());
  std::sort(ob.begin(), ob.end());
  if (oa != ob) return std::nullopt;

  // Backtrack over order-preserving class bijections.
  std::vector<std::size_t> assign(ca.size());
  std::vector<bool> used(cb.size(), false);
  std::optional<Hom> found;
  std::size_t budget = 100000;
  auto search = [&](auto&& self, std::size_t c) -> bool {
    if (c == ca.size()) {
      found = class_map(a, b, ca, cb, assign);
      return found.has_value();
    }
    for (std::size_t d = 0; d < cb.size(); ++d) {
      if (used[d] || cb[d].order != ca[c].order) continue;
      if (budget-- == 0) return false;
      used[d] = true;
      assign[c] = d;
      if (self(self, c + 1)) return true;
      used[d] = false;
    }
    return false;
  };
  search(search, 0);
  return found;
}

// Elements whose closure is the whole carrier, chosen greedily.
std::vector<Index> reduced_generators(const FiniteAlgebra& a) {
  std::vector<Index> gens;
  std::vector<bool> reached(a.size(), false);
  std::vector<Index> members;
  auto add = [&](Index i) {
    if (!reached[i]) {
      reached[i] = true;
      members.push_back(i);
    }
  };
  std::size_t processed = 0;
  auto close = [&] {
    for (; processed < members.size(); ++processed) {
      const Index e = members[processed];
      add(a.neg(e));
      for (std::size_t j = 0; j <= processed; ++j) {
        add(a.oplus(e, members[j]));
        if (auto p = a.product(e, members[j])) add(*p);
      }
      for (auto alpha : a.signature().scalars()) {
        if (auto s = a.scale(alpha, e)) add(*s);
      }
    }
  };
  add(a.zero());
  add(a.top());
  close();
  for (Index i : a.sorted_order()) {
    if (reached[i]) continue;
    gens.push_back(i);
    add(i);
    close();
  }
  return gens;
}

std::pair<std::size_t, std::size_t> order_profile(const FiniteAlgebra& a, Index x) {
  std::size_t below = 0, above = 0;
  for (Index y = 0; y < a.size(); ++y) {
    below += a.leq(y, x);
    above += a.leq(x, y);
  }
  return {below, above};
}

std::optional<Hom> generator_iso(const AlgebraPtr& a, const AlgebraPtr& b) {
  const auto gens = reduced_generators(*a);
  std::vector<std::vector<Index>> candidates(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto profile = order_profile(*a, gens[g]);
    for (Index y : b->sorted_order()) {
      if (order_profile(*b, y) == profile) candidates[g].push_back(y);
    }
  }
  std::vector<std::pair<Index, Index>> seeds;
  std::optional<Hom> found;
  std::size_t budget = 100000;
  auto search = [&](auto&& self, std::size_t g) -> bool {
    if (g == gens.size()) {
      try {
        Hom h = extend_hom(a, b, seeds);
        if (h.injective()) found = std::move(h);
      } catch (const Error&) {
      }
      return found.has_value();
    }
    for (Index y : candidates[g]) {
      if (budget-- == 0) return false;
      seeds.emplace_back(gens[g], y);
      if (self(self, g + 1)) return true;
      seeds.pop_back();
    }
    return false;
  };
  search(search, 0);
  return found;
}

}  // namespace

std::vector<SpectralComponent> spectral_decomposition(const AlgebraPtr& a) {
  std::vector<SpectralComponent> out;
  for (auto& c : point_classes(*a)) {
    Hom ev = evaluation_at(a, c.points.front(), c.order);
    verify_hom(ev);
    if (!ev.surjective()) throw Error(ErrorKind::NotWellDefined, "point evaluation is not onto its chain");
    out.push_back({c.order, std::move(c.points), std::move(ev)});
  }
  // The joint evaluation must separate the carrier.
  std::map<std::vector<Index>, Index> joint;
  for (Index i = 0; i < a->size(); ++i) {
    std::vector<Index> key;
    for (const auto& c : out) key.push_back(c.evaluation(i));
    if (!joint.emplace(std::move(key), i).second) {
      throw Error(ErrorKind::NotWellDefined, "joint evaluation is not injective");
    }
  }
  return out;
}

std::vector<std::int64_t> chain_orders(const AlgebraPtr& a) {
  std::vector<std::int64_t> orders;
  for (const auto& c : point_classes(*a)) orders.push_back(c.order);
  std::sort(orders.begin(), orders.end());
  return orders;
}

std::optional<Hom> iso_check(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->size() != b->size() || !compatible_signatures(a->signature(), b->signature())) return std::nullopt;
  if (!a->has_tables() && !b->has_tables() && !a->has_product_table() && !b->has_product_table()) {
    return spectral_iso(a, b);
  }
  return generator_iso(a, b);
}

}  // namespace mvt
