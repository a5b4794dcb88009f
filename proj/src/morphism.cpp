#include "mvtensor/morphism.hpp"

#include <deque>
#include <set>

#include "mvtensor/error.hpp"

namespace mvt {

namespace {

constexpr Index kUnset = static_cast<Index>(-1);

std::string show(const FiniteAlgebra& a, Index i) { return a.element(i).str(); }

// Scalars of the source that the target also carries.
std::vector<Rational01> shared_scalars(const FiniteAlgebra& s, const FiniteAlgebra& t) {
  std::vector<Rational01> out;
  if (!t.signature().has_scalars()) return out;
  for (auto alpha : s.signature().scalars()) {
    if (t.signature().scalar_den % alpha.den() == 0) out.push_back(alpha);
  }
  return out;
}

bool both_have_product(const FiniteAlgebra& s, const FiniteAlgebra& t) {
  return (s.signature().has_product() || s.has_product_table()) &&
         (t.signature().has_product() || t.has_product_table());
}

}  // namespace

bool Hom::injective() const {
  std::set<Index> seen(table.begin(), table.end());
  return seen.size() == table.size();
}

bool Hom::surjective() const {
  std::set<Index> seen(table.begin(), table.end());
  return seen.size() == target->size();
}

Hom identity_hom(const AlgebraPtr& algebra) {
  Hom h{algebra, algebra, std::vector<Index>(algebra->size())};
  for (Index i = 0; i < algebra->size(); ++i) h.table[i] = i;
  return h;
}

Hom compose(const Hom& g, const Hom& f) {
  if (f.target != g.source && !(same_carrier(*f.target, *g.source) && f.target->size() == g.source->size())) {
    throw Error(ErrorKind::DomainMismatch, "composition of non-adjacent homomorphisms");
  }
  Hom h{f.source, g.target, std::vector<Index>(f.table.size())};
  for (Index i = 0; i < f.table.size(); ++i) {
    Index mid = f.table[i];
    if (f.target != g.source) mid = g.source->index_of(f.target->element(mid));
    h.table[i] = g.table.at(mid);
  }
  return h;
}

std::optional<std::string> hom_violation(const Hom& h) {
  const auto& s = *h.source;
  const auto& t = *h.target;
  if (h.table.size() != s.size()) return "table size " + std::to_string(h.table.size()) + " does not match source";
  if (h(s.zero()) != t.zero()) return "0 maps to " + show(t, h(s.zero()));
  if (h(s.top()) != t.top()) return "1 maps to " + show(t, h(s.top()));
  for (Index x = 0; x < s.size(); ++x) {
    auto img = t.try_neg(h(x));
    if (!img || *img != h(s.neg(x))) return "* at " + show(s, x);
  }
  for (Index x = 0; x < s.size(); ++x) {
    for (Index y = x; y < s.size(); ++y) {
      auto img = t.try_oplus(h(x), h(y));
      if (!img || *img != h(s.oplus(x, y))) return "⊕ at (" + show(s, x) + ", " + show(s, y) + ")";
    }
  }
  if (both_have_product(s, t)) {
    for (Index x = 0; x < s.size(); ++x) {
      for (Index y = 0; y < s.size(); ++y) {
        auto p = s.product(x, y);
        if (!p) continue;
        auto img = t.product(h(x), h(y));
        if (!img || *img != h(*p)) return "· at (" + show(s, x) + ", " + show(s, y) + ")";
      }
    }
  }
  for (auto alpha : shared_scalars(s, t)) {
    for (Index x = 0; x < s.size(); ++x) {
      auto p = s.scale(alpha, x);
      if (!p) continue;
      auto img = t.scale(alpha, h(x));
      if (!img || *img != h(*p)) return "scalar " + alpha.str() + " at " + show(s, x);
    }
  }
  return std::nullopt;
}

void verify_hom(const Hom& h) {
  if (auto v = hom_violation(h)) throw Error(ErrorKind::NotWellDefined, "not a homomorphism: " + *v);
}

Hom extend_hom(const AlgebraPtr& source, const AlgebraPtr& target,
               const std::vector<std::pair<Index, Index>>& seeds) {
  const auto& s = *source;
  const auto& t = *target;
  std::vector<Index> table(s.size(), kUnset);
  std::vector<Index> order;
  order.reserve(s.size());

  auto assign = [&](Index from, std::optional<Index> to, const std::string& origin) {
    if (!to) throw Error(ErrorKind::NotWellDefined, "image of " + origin + " leaves the target carrier");
    if (table[from] == kUnset) {
      table[from] = *to;
      order.push_back(from);
    } else if (table[from] != *to) {
      throw Error(ErrorKind::NotWellDefined, origin + " = " + show(s, from) + " is sent to both " +
                                                 show(t, table[from]) + " and " + show(t, *to));
    }
  };

  assign(s.zero(), t.zero(), "0");
  assign(s.top(), t.top(), "1");
  for (auto [from, to] : seeds) {
    if (from >= s.size() || to >= t.size()) throw Error(ErrorKind::NotInCarrier, "seed index out of range");
    assign(from, to, "seed " + show(s, from));
  }

  const bool products = both_have_product(s, t);
  const auto scalars = shared_scalars(s, t);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Index e = order[k];
    assign(s.neg(e), t.try_neg(table[e]), "(" + show(s, e) + ")*");
    for (std::size_t j = 0; j <= k; ++j) {
      const Index x = order[j];
      assign(s.oplus(e, x), t.try_oplus(table[e], table[x]), show(s, e) + " ⊕ " + show(s, x));
      if (products) {
        if (auto p = s.product(e, x)) assign(*p, t.product(table[e], table[x]), show(s, e) + " · " + show(s, x));
      }
    }
    for (auto alpha : scalars) {
      if (auto p = s.scale(alpha, e)) assign(*p, t.scale(alpha, table[e]), alpha.str() + " " + show(s, e));
    }
  }
  if (order.size() != s.size()) {
    for (Index i = 0; i < s.size(); ++i) {
      if (table[i] == kUnset) {
        throw Error(ErrorKind::NotWellDefined, "seeds do not determine the image of " + show(s, i));
      }
    }
  }
  Hom h{source, target, std::move(table)};
  verify_hom(h);
  return h;
}

Hom extend_hom(const AlgebraPtr& source, const AlgebraPtr& target, const std::vector<Index>& generator_images) {
  const auto& gens = source->generators();
  if (generator_images.size() != gens.size()) {
    throw Error(ErrorKind::DomainMismatch, "generator map is not total on the generators");
  }
  std::vector<std::pair<Index, Index>> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i) seeds.emplace_back(gens[i], generator_images[i]);
  return extend_hom(source, target, seeds);
}

LinearityVerdict check_linear(const std::vector<Index>& omega, const FiniteAlgebra& a, const FiniteAlgebra& b) {
  for (Index x = 0; x < a.size(); ++x) {
    for (Index y = 0; y < a.size(); ++y) {
      if (!a.leq(x, a.neg(y))) continue;
      if (omega.at(a.oplus(x, y)) != b.oplus(omega.at(x), omega.at(y))) return {false, std::make_pair(x, y)};
    }
  }
  return {};
}

std::string BimorphismVerdict::describe(const Bimorphism& beta) const {
  if (holds) return "bimorphism";
  const auto& fixed_side = left_section ? *beta.left : *beta.right;
  const auto& free_side = left_section ? *beta.right : *beta.left;
  std::string section = left_section ? "β(" + show(fixed_side, fixed) + ", -)" : "β(-, " + show(fixed_side, fixed) + ")";
  return section + " fails " + property + " at (" + show(free_side, x) + ", " + show(free_side, y) + ")";
}

BimorphismVerdict check_bimorphism(const Bimorphism& beta) {
  const auto& l = *beta.left;
  const auto& r = *beta.right;
  const auto& c = *beta.target;
  auto scan = [&](bool left_section) -> BimorphismVerdict {
    const auto& fixed_side = left_section ? l : r;
    const auto& free_side = left_section ? r : l;
    for (Index f = 0; f < fixed_side.size(); ++f) {
      auto sec = [&](Index v) { return left_section ? beta(f, v) : beta(v, f); };
      for (Index x = 0; x < free_side.size(); ++x) {
        for (Index y = 0; y < free_side.size(); ++y) {
          if (free_side.leq(x, free_side.neg(y)) && sec(free_side.oplus(x, y)) != c.oplus(sec(x), sec(y))) {
            return {false, "linearity", left_section, f, x, y};
          }
          if (sec(free_side.join(x, y)) != c.join(sec(x), sec(y))) return {false, "∨", left_section, f, x, y};
          if (sec(free_side.meet(x, y)) != c.meet(sec(x), sec(y))) return {false, "∧", left_section, f, x, y};
        }
      }
    }
    return {};
  };
  if (beta.table.size() != l.size() * r.size()) {
    throw Error(ErrorKind::DomainMismatch, "bimorphism table is not total");
  }
  auto v = scan(true);
  if (!v.holds) return v;
  return scan(false);
}

}  // namespace mvt
