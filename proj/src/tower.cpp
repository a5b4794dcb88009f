#include "mvtensor/tower.hpp"

#include <numeric>

#include "mvtensor/error.hpp"
#include "mvtensor/spectrum.hpp"
#include "mvtensor/tensor.hpp"

namespace mvt {

namespace {

std::size_t ipow(std::size_t base, int exponent) {
  std::size_t out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

std::size_t width(const Tower& tw) { return tw.base()->points()->size(); }

// g(w) = f(u) with u[i] = w[src[i]], for functions on X^L.
PointFunction reindex(const PointFunction& f, std::size_t w, const std::vector<std::size_t>& src) {
  const std::size_t len = src.size();
  std::vector<Rational01> values(f.values().size());
  std::vector<std::size_t> digits(len), moved(len);
  for (std::size_t q = 0; q < values.size(); ++q) {
    std::size_t rest = q;
    for (std::size_t k = len; k-- > 0;) {
      digits[k] = rest % w;
      rest /= w;
    }
    std::size_t u = 0;
    for (std::size_t k = 0; k < len; ++k) u = u * w + digits[src[k]];
    values[q] = f.at(u);
  }
  return PointFunction(f.domain_ptr(), std::move(values));
}

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> out(to - from);
  std::iota(out.begin(), out.end(), from);
  return out;
}

std::vector<std::size_t> concat(std::initializer_list<std::vector<std::size_t>> parts) {
  std::vector<std::size_t> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

AxiomResult& item(AxiomReport& report, std::string name) {
  report.items.push_back({std::move(name), true, 0, {}});
  return report.items.back();
}

void fail(AxiomResult& r, const std::string& witness) {
  if (r.passed) {
    r.passed = false;
    r.witness = witness;
  }
}

std::string show(const TowerElement& x) { return "(" + x.value.str() + ", " + std::to_string(x.level) + ")"; }

// The same map with source and target swapped for carrier-equal algebras.
Hom realign(const Hom& h, const AlgebraPtr& source, const AlgebraPtr& target) {
  if (h.source == source && h.target == target) return h;
  Hom out{source, target, std::vector<Index>(source->size())};
  for (Index i = 0; i < source->size(); ++i) {
    const Index j = h.source == source ? i : h.source->index_of(source->element(i));
    out.table[i] = h.target == target ? h(j) : target->index_of(h.target->element(h(j)));
  }
  return out;
}

}  // namespace

Tower::Tower(AlgebraPtr base, int max_level, std::vector<AlgebraPtr> levels)
    : base_(std::move(base)), max_level_(max_level), levels_(std::move(levels)) {
  if (static_cast<int>(levels_.size()) != max_level_) {
    throw Error(ErrorKind::DomainMismatch, "tower level count does not match its maximum level");
  }
  eps_.resize(max_level_);
  for (int n = 1; n <= max_level_; ++n) {
    eps_[n - 1].resize(max_level_);
    const auto& src = *levels_[n - 1];
    for (int m = n; m <= max_level_; ++m) {
      auto& table = eps_[n - 1][m - 1];
      table.resize(src.size());
      for (Index i = 0; i < src.size(); ++i) table[i] = levels_[m - 1]->index_of(eps_function(*this, n, m, src.element(i)));
    }
  }
}

const AlgebraPtr& Tower::level(int n) const {
  if (n < 1 || n > max_level_) {
    throw Error(ErrorKind::LevelOverflow,
                "level " + std::to_string(n) + " is outside the tower (max level " + std::to_string(max_level_) + ")");
  }
  return levels_[n - 1];
}

const std::vector<Index>& Tower::eps_table(int n, int m) const {
  level(n);
  level(m);
  if (n > m) throw Error(ErrorKind::DomainMismatch, "ε_{n,m} needs n ≤ m");
  return eps_[n - 1][m - 1];
}

Index Tower::eps(int n, int m, Index i) const { return eps_table(n, m).at(i); }

TowerElement Tower::element(int n, Index i) const { return {n, level(n)->element(i)}; }

Index Tower::index_of(const TowerElement& x) const { return level(x.level)->index_of(x.value); }

Tower build_tower(const AlgebraPtr& a, int max_level, std::size_t cap) {
  if (max_level < 1) throw Error(ErrorKind::LevelOverflow, "a tower needs at least one level");
  std::vector<AlgebraPtr> levels{a};
  auto reduct = a->with_signature(Signature::mv());
  for (int n = 2; n <= max_level; ++n) levels.push_back(tensor(levels.back(), reduct, cap).product);
  Tower tw(a, max_level, std::move(levels));
  for (int n = 1; n <= max_level; ++n) {
    for (int m = n; m <= max_level; ++m) {
      Hom e{tw.level(n)->with_signature(Signature::mv()), tw.level(m), tw.eps_table(n, m)};
      verify_hom(e);
      if (!e.injective()) throw Error(ErrorKind::NotWellDefined, "ε is not injective");
      if (n == m) {
        for (Index i = 0; i < e.table.size(); ++i) {
          if (e.table[i] != i) throw Error(ErrorKind::NotWellDefined, "ε_{n,n} is not the identity");
        }
      }
      for (int k = m; k <= max_level; ++k) {
        for (Index i = 0; i < e.table.size(); ++i) {
          if (tw.eps(m, k, tw.eps(n, m, i)) != tw.eps(n, k, i)) {
            throw Error(ErrorKind::NotWellDefined, "ε maps do not compose");
          }
        }
      }
    }
  }
  return tw;
}

PointFunction eps_function(const Tower& tw, int n, int m, const PointFunction& f) {
  const auto& target = tw.level(m);
  if (n > m) throw Error(ErrorKind::DomainMismatch, "ε_{n,m} needs n ≤ m");
  const std::size_t block = ipow(width(tw), m - n);
  std::vector<Rational01> values(target->points()->size());
  for (std::size_t q = 0; q < values.size(); ++q) values[q] = f.at(q / block);
  return PointFunction(target->points(), std::move(values));
}

PointFunction gamma_map(const Tower& tw, int n, int m, const PointFunction& a, const PointFunction& b) {
  if (n + m > tw.max_level()) {
    throw Error(ErrorKind::LevelOverflow, "γ_{" + std::to_string(n) + "," + std::to_string(m) +
                                              "} needs level " + std::to_string(n + m) + " > max level " +
                                              std::to_string(tw.max_level()));
  }
  const auto& target = tw.level(n + m);
  const std::size_t block = ipow(width(tw), m);
  std::vector<Rational01> values(target->points()->size());
  for (std::size_t q = 0; q < values.size(); ++q) values[q] = times(a.at(q / block), b.at(q % block));
  PointFunction out(target->points(), std::move(values));
  target->index_of(out);
  return out;
}

TowerElement promote(const Tower& tw, const TowerElement& x, int level) {
  return {level, eps_function(tw, x.level, level, x.value)};
}

bool equivalent(const Tower& tw, const TowerElement& x, const TowerElement& y) {
  const int k = std::max(x.level, y.level);
  return promote(tw, x, k).value == promote(tw, y, k).value;
}

TowerElement canonical(const Tower& tw, const TowerElement& x) {
  for (int n = 1; n < x.level; ++n) {
    // x is in the image of ε_{n,level} iff it is constant on the trailing blocks.
    const std::size_t block = ipow(width(tw), x.level - n);
    std::vector<Rational01> values(tw.level(n)->points()->size());
    bool constant = true;
    for (std::size_t q = 0; q < x.value.values().size() && constant; ++q) {
      if (q % block == 0) values[q / block] = x.value.at(q);
      else constant = x.value.at(q) == values[q / block];
    }
    if (!constant) continue;
    PointFunction f(tw.level(n)->points(), std::move(values));
    if (tw.level(n)->find(f)) return {n, std::move(f)};
  }
  return x;
}

TowerElement tensor_pmv_product(const Tower& tw, const TowerElement& x, const TowerElement& y) {
  return {x.level + y.level, gamma_map(tw, x.level, y.level, x.value, y.value)};
}

TowerElement tower_oplus(const Tower& tw, const TowerElement& x, const TowerElement& y) {
  const int k = std::max(x.level, y.level);
  return {k, pointwise(MvOp::Oplus, promote(tw, x, k).value, promote(tw, y, k).value)};
}

TowerElement tower_neg(const Tower&, const TowerElement& x) { return {x.level, pointwise_neg(x.value)}; }

AxiomReport check_eps_gamma_identities(const Tower& tw) {
  AxiomReport report;
  const int top = tw.max_level();
  const std::size_t w = width(tw);
  auto elements = [&](int n) -> const std::vector<PointFunction>& { return tw.level(n)->carrier(); };

  auto& one = item(report, "(1) γ_{n,m}(a, 1_m) = ε_{n,n+m}(a)");
  for (int n = 1; n <= top; ++n) {
    for (int m = 1; n + m <= top; ++m) {
      const auto& unit = tw.level(m)->element(tw.level(m)->top());
      for (const auto& a : elements(n)) {
        ++one.instances;
        if (gamma_map(tw, n, m, a, unit) != eps_function(tw, n, n + m, a)) {
          fail(one, "n=" + std::to_string(n) + ", m=" + std::to_string(m) + ", a=" + a.str());
        }
      }
    }
  }

  auto& two = item(report, "(2) T^n⊗T^m = T^{n+m} = T^m⊗T^n and regroupings agree");
  for (int n = 1; n <= top; ++n) {
    for (int m = 1; n + m <= top; ++m) {
      const auto& target = *tw.level(n + m);
      two.instances += 2;
      if (!same_carrier(*tensor(tw.level(n), tw.level(m)).product, target) ||
          !same_carrier(*tensor(tw.level(m), tw.level(n)).product, target)) {
        fail(two, "n=" + std::to_string(n) + ", m=" + std::to_string(m));
      }
      for (int l = 1; n + m + l <= top; ++l) {
        ++two.instances;
        auto left = tensor(tensor(tw.level(n), tw.level(m)).product, tw.level(l)).product;
        auto right = tensor(tw.level(n), tensor(tw.level(m), tw.level(l)).product).product;
        if (!same_carrier(*left, *right)) {
          fail(two, "n=" + std::to_string(n) + ", m=" + std::to_string(m) + ", l=" + std::to_string(l));
        }
      }
    }
  }

  auto& three = item(report, "(3) γ_{n,m}(a, b) = γ_{m,n}(b, a) up to X^{n+m} ≅ X^{m+n}");
  auto& positional = item(report, "(3), (5) hold without regrouping coordinates");
  for (int n = 1; n <= top; ++n) {
    for (int m = 1; n + m <= top; ++m) {
      const auto src = concat({range(m, m + n), range(0, m)});
      for (const auto& a : elements(n)) {
        for (const auto& b : elements(m)) {
          const auto ab = gamma_map(tw, n, m, a, b);
          const auto ba = gamma_map(tw, m, n, b, a);
          ++three.instances;
          if (ba != reindex(ab, w, src)) fail(three, "a=" + a.str() + ", b=" + b.str());
          ++positional.instances;
          if (ba != ab) fail(positional, "(3) at a=" + a.str() + ", b=" + b.str());
        }
      }
    }
  }

  auto& four = item(report, "(4) γ_{n,m+k}(a, γ_{m,k}(b, c)) = γ_{n+m,k}(γ_{n,m}(a, b), c)");
  for (int n = 1; n <= top; ++n) {
    for (int m = 1; n + m < top; ++m) {
      for (int k = 1; n + m + k <= top; ++k) {
        for (const auto& a : elements(n)) {
          for (const auto& b : elements(m)) {
            const auto ab = gamma_map(tw, n, m, a, b);
            for (const auto& c : elements(k)) {
              ++four.instances;
              if (gamma_map(tw, n, m + k, a, gamma_map(tw, m, k, b, c)) != gamma_map(tw, n + m, k, ab, c)) {
                fail(four, "a=" + a.str() + ", b=" + b.str() + ", c=" + c.str());
              }
            }
          }
        }
      }
    }
  }

  auto& five = item(report, "(5) γ_{m,k}(ε_{n,m}(a), b) = ε_{n+k,m+k}(γ_{n,k}(a, b)) up to regrouping");
  for (int n = 1; n <= top; ++n) {
    for (int m = n; m < top; ++m) {
      for (int k = 1; m + k <= top; ++k) {
        const auto src = concat({range(0, n), range(m, m + k), range(n, m)});
        for (const auto& a : elements(n)) {
          const auto ea = eps_function(tw, n, m, a);
          for (const auto& b : elements(k)) {
            const auto lhs = gamma_map(tw, m, k, ea, b);
            const auto rhs = eps_function(tw, n + k, m + k, gamma_map(tw, n, k, a, b));
            ++five.instances;
            if (lhs != reindex(rhs, w, src)) {
              fail(five, "n=" + std::to_string(n) + ", m=" + std::to_string(m) + ", a=" + a.str() + ", b=" + b.str());
            }
            ++positional.instances;
            if (lhs != rhs) fail(positional, "(5) at n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                                                 ", a=" + a.str() + ", b=" + b.str());
          }
        }
      }
    }
  }
  return report;
}

AxiomReport check_product_laws(const Tower& tw) {
  AxiomReport report;
  const int top = tw.max_level();
  std::vector<TowerElement> all;
  for (int n = 1; n <= top; ++n) {
    for (Index i = 0; i < tw.level(n)->size(); ++i) all.push_back(tw.element(n, i));
  }
  auto mul = [&](const TowerElement& x, const TowerElement& y) { return tensor_pmv_product(tw, x, y); };

  auto& welldef = item(report, "product well defined on ∼-classes");
  auto& comm = item(report, "x · y ∼ y · x");
  for (const auto& x : all) {
    for (const auto& y : all) {
      if (x.level + y.level > top) continue;
      const auto xy = mul(x, y);
      ++comm.instances;
      if (!equivalent(tw, xy, mul(y, x))) fail(comm, show(x) + ", " + show(y));
      for (int n2 = x.level; n2 + y.level <= top; ++n2) {
        for (int m2 = y.level; n2 + m2 <= top; ++m2) {
          if (n2 == x.level && m2 == y.level) continue;
          ++welldef.instances;
          if (!equivalent(tw, xy, mul(promote(tw, x, n2), promote(tw, y, m2)))) {
            fail(welldef, show(x) + " at level " + std::to_string(n2) + ", " + show(y) + " at level " +
                              std::to_string(m2));
          }
        }
      }
    }
  }

  auto& bilinear = item(report, "(x1 + x2) · y ∼ x1 · y + x2 · y and y · (x1 + x2) ∼ y · x1 + y · x2");
  for (const auto& x1 : all) {
    for (const auto& x2 : all) {
      const int level = std::max(x1.level, x2.level);
      if (level >= top) continue;
      const auto p1 = promote(tw, x1, level);
      const auto p2 = promote(tw, x2, level);
      if (!leq(p1.value, pointwise_neg(p2.value))) continue;
      const auto sum = tower_oplus(tw, x1, x2);
      for (const auto& y : all) {
        if (level + y.level > top) continue;
        bilinear.instances += 2;
        if (!equivalent(tw, mul(sum, y), tower_oplus(tw, mul(x1, y), mul(x2, y))) ||
            !equivalent(tw, mul(y, sum), tower_oplus(tw, mul(y, x1), mul(y, x2)))) {
          fail(bilinear, show(x1) + ", " + show(x2) + ", " + show(y));
        }
      }
    }
  }

  auto& assoc = item(report, "(x · y) · z ∼ x · (y · z)");
  for (const auto& x : all) {
    for (const auto& y : all) {
      if (x.level + y.level >= top) continue;
      const auto xy = mul(x, y);
      for (const auto& z : all) {
        if (x.level + y.level + z.level > top) continue;
        ++assoc.instances;
        if (!equivalent(tw, mul(xy, z), mul(x, mul(y, z)))) fail(assoc, show(x) + ", " + show(y) + ", " + show(z));
      }
    }
  }

  auto& unit = item(report, "x · 1 ∼ 1 · x ∼ x");
  for (const auto& x : all) {
    for (int k = 1; x.level + k <= top; ++k) {
      const TowerElement one = tw.element(k, tw.level(k)->top());
      unit.instances += 2;
      if (!equivalent(tw, mul(x, one), x) || !equivalent(tw, mul(one, x), x)) {
        fail(unit, show(x) + " with 1 at level " + std::to_string(k));
      }
    }
  }
  return report;
}

Index TowerMap::apply(const Tower& tw, const TowerElement& x) const {
  return levels.at(x.level - 1)(tw.index_of(x));
}

TowerMap lift_hom(const Tower& tw, const AlgebraPtr& p, const Hom& f) {
  if (!p->signature().has_product() && !p->has_product_table()) {
    throw Error(ErrorKind::SignatureViolation, "the lift target needs a product");
  }
  TowerMap out;
  out.levels.push_back(realign(f, tw.level(1), p));
  verify_hom(Hom{out.levels[0].source->with_signature(Signature::mv()), p, out.levels[0].table});
  const auto& base = *tw.level(1);
  for (int n = 2; n <= tw.max_level(); ++n) {
    const auto& prev = *tw.level(n - 1);
    const auto& here = tw.level(n);
    std::vector<std::pair<Index, Index>> seeds;
    for (Index t = 0; t < prev.size(); ++t) {
      for (Index a = 0; a < base.size(); ++a) {
        const Index idx = here->index_of(gamma_map(tw, n - 1, 1, prev.element(t), base.element(a)));
        auto value = p->product(out.levels[n - 2](t), out.levels[0](a));
        if (!value) {
          throw Error(ErrorKind::NotWellDefined, "λ(" + prev.element(t).str() + ")·f(" + base.element(a).str() +
                                                     ") leaves the target carrier");
        }
        seeds.emplace_back(idx, *value);
      }
    }
    out.levels.push_back(extend_hom(here, p, seeds));
  }
  return out;
}

TowerMap functor_on_hom(const Tower& tw_a, const Tower& tw_b, const Hom& h) {
  if (tw_a.max_level() != tw_b.max_level()) {
    throw Error(ErrorKind::DomainMismatch, "towers have different maximum levels");
  }
  TowerMap out;
  out.levels.push_back(realign(h, tw_a.level(1), tw_b.level(1)));
  verify_hom(Hom{tw_a.level(1)->with_signature(Signature::mv()), tw_b.level(1)->with_signature(Signature::mv()),
                 out.levels[0].table});
  const auto& base_a = *tw_a.level(1);
  const auto& base_b = *tw_b.level(1);
  for (int n = 2; n <= tw_a.max_level(); ++n) {
    const auto& prev = *tw_a.level(n - 1);
    std::vector<std::pair<Index, Index>> seeds;
    for (Index t = 0; t < prev.size(); ++t) {
      const auto& image_t = tw_b.level(n - 1)->element(out.levels[n - 2](t));
      for (Index a = 0; a < base_a.size(); ++a) {
        const Index idx = tw_a.level(n)->index_of(gamma_map(tw_a, n - 1, 1, prev.element(t), base_a.element(a)));
        const auto image = gamma_map(tw_b, n - 1, 1, image_t, base_b.element(out.levels[0](a)));
        seeds.emplace_back(idx, tw_b.level(n)->index_of(image));
      }
    }
    out.levels.push_back(extend_hom(tw_a.level(n), tw_b.level(n), seeds));
  }
  return out;
}

AxiomReport check_lift(const Tower& tw, const AlgebraPtr& p, const Hom& f, const TowerMap& lift) {
  AxiomReport report;
  const int top = tw.max_level();
  const Hom f1 = realign(f, tw.level(1), p);

  auto& triangle = item(report, "f♯∘ε_1 = f");
  for (int n = 1; n <= top; ++n) {
    for (Index a = 0; a < tw.level(1)->size(); ++a) {
      ++triangle.instances;
      if (lift.levels[n - 1](tw.eps(1, n, a)) != f1(a)) {
        fail(triangle, "level " + std::to_string(n) + ", a=" + tw.level(1)->element(a).str());
      }
    }
  }

  auto& cocone = item(report, "λ_m∘ε_{n,m} = λ_n");
  for (int n = 1; n <= top; ++n) {
    for (int m = n; m <= top; ++m) {
      for (Index t = 0; t < tw.level(n)->size(); ++t) {
        ++cocone.instances;
        if (lift.levels[m - 1](tw.eps(n, m, t)) != lift.levels[n - 1](t)) {
          fail(cocone, "n=" + std::to_string(n) + ", m=" + std::to_string(m) + ", t=" + tw.level(n)->element(t).str());
        }
      }
    }
  }

  auto& mv = item(report, "every λ_n preserves 0, 1, ⊕, *");
  for (int n = 1; n <= top; ++n) {
    ++mv.instances;
    Hom level{tw.level(n)->with_signature(Signature::mv()), p, lift.levels[n - 1].table};
    if (auto v = hom_violation(level)) fail(mv, "level " + std::to_string(n) + ": " + *v);
  }

  auto& product = item(report, "f♯(x · y) = f♯(x) · f♯(y)");
  for (int n = 1; n <= top; ++n) {
    for (int m = 1; n + m <= top; ++m) {
      for (Index t = 0; t < tw.level(n)->size(); ++t) {
        for (Index s = 0; s < tw.level(m)->size(); ++s) {
          ++product.instances;
          const auto ts = tw.level(n + m)->index_of(
              gamma_map(tw, n, m, tw.level(n)->element(t), tw.level(m)->element(s)));
          auto expected = p->product(lift.levels[n - 1](t), lift.levels[m - 1](s));
          if (!expected || lift.levels[n + m - 1](ts) != *expected) {
            fail(product, "t=" + tw.level(n)->element(t).str() + ", s=" + tw.level(m)->element(s).str());
          }
        }
      }
    }
  }
  return report;
}

AxiomReport check_naturality(const Tower& tw_a, const Tower& tw_b, const Hom& h, const TowerMap& lifted) {
  AxiomReport report;
  const int top = tw_a.max_level();
  const Hom h1 = realign(h, tw_a.level(1), tw_b.level(1));

  auto& square = item(report, "h♯∘ε_{1,A} = ε_{1,B}∘h");
  for (int n = 1; n <= top; ++n) {
    for (Index a = 0; a < tw_a.level(1)->size(); ++a) {
      ++square.instances;
      if (lifted.levels[n - 1](tw_a.eps(1, n, a)) != tw_b.eps(1, n, h1(a))) {
        fail(square, "level " + std::to_string(n) + ", a=" + tw_a.level(1)->element(a).str());
      }
    }
  }

  auto& eps = item(report, "h♯∘ε_{n,m} = ε_{n,m}∘h♯");
  for (int n = 1; n <= top; ++n) {
    for (int m = n; m <= top; ++m) {
      for (Index t = 0; t < tw_a.level(n)->size(); ++t) {
        ++eps.instances;
        if (lifted.levels[m - 1](tw_a.eps(n, m, t)) != tw_b.eps(n, m, lifted.levels[n - 1](t))) {
          fail(eps, "n=" + std::to_string(n) + ", m=" + std::to_string(m));
        }
      }
    }
  }

  auto& product = item(report, "h♯ preserves the tower product");
  for (int n = 1; n <= top; ++n) {
    for (int m = 1; n + m <= top; ++m) {
      for (Index t = 0; t < tw_a.level(n)->size(); ++t) {
        for (Index s = 0; s < tw_a.level(m)->size(); ++s) {
          ++product.instances;
          const auto ts = tw_a.level(n + m)->index_of(
              gamma_map(tw_a, n, m, tw_a.level(n)->element(t), tw_a.level(m)->element(s)));
          const auto image = gamma_map(tw_b, n, m, tw_b.level(n)->element(lifted.levels[n - 1](t)),
                                       tw_b.level(m)->element(lifted.levels[m - 1](s)));
          if (lifted.levels[n + m - 1](ts) != tw_b.level(n + m)->index_of(image)) {
            fail(product, "t=" + tw_a.level(n)->element(t).str() + ", s=" + tw_a.level(m)->element(s).str());
          }
        }
      }
    }
  }
  return report;
}

bool functoriality_holds(const TowerMap& gh, const TowerMap& g, const TowerMap& h) {
  if (gh.levels.size() != g.levels.size() || gh.levels.size() != h.levels.size()) return false;
  for (std::size_t n = 0; n < gh.levels.size(); ++n) {
    for (Index i = 0; i < gh.levels[n].table.size(); ++i) {
      if (gh.levels[n](i) != g.levels[n](h.levels[n](i))) return false;
    }
  }
  return true;
}

TowerElement riesz_scalar_on_tower(const Tower& tw, Rational01 alpha, const TowerElement& x) {
  const auto& sig = tw.base()->signature();
  if (!sig.has_scalars() || sig.scalar_den % alpha.den() != 0) {
    throw Error(ErrorKind::ScalarUnsupported, "the base carries no scalar " + alpha.str());
  }
  TowerElement out{x.level, scale(alpha, x.value)};
  if (!tw.level(x.level)->find(out.value)) {
    throw Error(ErrorKind::ScalarUnsupported, alpha.str() + " · " + show(x) + " leaves T^" + std::to_string(x.level));
  }
  return out;
}

AxiomReport check_tower_scalars(const Tower& tw) {
  AxiomReport report;
  const auto scalars = tw.base()->signature().scalars();
  const int top = tw.max_level();
  auto s = [&](Rational01 alpha, const TowerElement& x) -> std::optional<TowerElement> {
    try {
      return riesz_scalar_on_tower(tw, alpha, x);
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  auto& one = item(report, "1x = x");
  auto& additive = item(report, "α(x ⊕ y) = αx ⊕ αy for x ≤ y*");
  auto& scalar_sum = item(report, "(α ⊕ β)x = αx ⊕ βx for α ≤ β*");
  auto& scalar_prod = item(report, "(αβ)x = α(βx)");
  auto& compat = item(report, "α(x · y) = (αx) · y = x · (αy)");
  for (int n = 1; n <= top; ++n) {
    for (Index i = 0; i < tw.level(n)->size(); ++i) {
      const auto x = tw.element(n, i);
      ++one.instances;
      auto ox = s(Rational01::one(), x);
      if (!ox || ox->value != x.value) fail(one, show(x));
      for (auto alpha : scalars) {
        const auto ax = s(alpha, x);
        for (Index j = 0; j < tw.level(n)->size(); ++j) {
          const auto y = tw.element(n, j);
          if (!leq(x.value, pointwise_neg(y.value))) continue;
          auto lhs = s(alpha, tower_oplus(tw, x, y));
          auto ay = s(alpha, y);
          if (lhs && ax && ay) {
            ++additive.instances;
            if (lhs->value != tower_oplus(tw, *ax, *ay).value) fail(additive, alpha.str() + " at " + show(x) + ", " + show(y));
          }
        }
        for (auto beta : scalars) {
          auto bx = s(beta, x);
          if (alpha <= neg(beta)) {
            auto lhs = s(oplus(alpha, beta), x);
            if (lhs && ax && bx) {
              ++scalar_sum.instances;
              if (lhs->value != tower_oplus(tw, *ax, *bx).value) fail(scalar_sum, show(x));
            }
          }
          const auto ab = times(alpha, beta);
          if (bx && tw.base()->signature().scalar_den % ab.den() == 0) {
            auto lhs = s(ab, x);
            auto rhs = s(alpha, *bx);
            if (lhs && rhs) {
              ++scalar_prod.instances;
              if (lhs->value != rhs->value) fail(scalar_prod, show(x));
            }
          }
        }
        for (int m = 1; n + m <= top; ++m) {
          for (Index j = 0; j < tw.level(m)->size(); ++j) {
            const auto y = tw.element(m, j);
            auto a_xy = s(alpha, tensor_pmv_product(tw, x, y));
            auto ay = s(alpha, y);
            if (!a_xy || !ax || !ay) continue;
            ++compat.instances;
            const auto left = tensor_pmv_product(tw, *ax, y);
            const auto right = tensor_pmv_product(tw, x, *ay);
            if (a_xy->value != left.value || left.value != right.value) fail(compat, alpha.str() + " at " + show(x) + ", " + show(y));
          }
        }
      }
    }
  }
  return report;
}

FixedPointVerdict pmv_fixed_point_check(const AlgebraPtr& p, int max_level, std::size_t cap) {
  FixedPointVerdict verdict;
  for (Index x = 0; x < p->size(); ++x) {
    for (Index y = x; y < p->size(); ++y) {
      auto product = pointwise(MvOp::Prod, p->element(x), p->element(y));
      if (!p->find(product)) {
        verdict.witness = p->element(x).str() + " · " + p->element(y).str() + " = " + product.str() + " is not in P";
        return verdict;
      }
    }
  }
  verdict.product_closed = true;
  const Tower tw = build_tower(p, max_level, cap);
  const std::size_t w = p->points()->size();
  for (int n = 1; n <= max_level; ++n) {
    const auto& level = *tw.level(n);
    verdict.level_sizes.push_back(level.size());
    std::size_t stride = 0;
    for (int k = 0; k < n; ++k) stride = stride * w + 1;  // index of (x,…,x) is x·stride
    auto diagonal = [&](const PointFunction& f) {
      std::vector<Rational01> values(w);
      for (std::size_t x = 0; x < w; ++x) values[x] = f.at(x * stride);
      return values;
    };
    for (const auto& f : level.carrier()) {
      auto d = diagonal(f);
      if (!p->find(d)) {
        verdict.witness = "diagonal of " + f.str() + " at level " + std::to_string(n) + " is not in P";
        return verdict;
      }
    }
    for (Index a = 0; a < p->size(); ++a) {
      if (diagonal(level.element(tw.eps(1, n, a))) != p->element(a).value_vector()) {
        verdict.witness = "diag∘ε_{1," + std::to_string(n) + "} moves " + p->element(a).str();
        return verdict;
      }
    }
  }
  verdict.holds = true;
  return verdict;
}

AdjunctionShadow adjunction_shadow(const AlgebraPtr& a, std::int64_t d, int level, std::size_t cap) {
  std::int64_t power = 1;
  for (int i = 0; i < level; ++i) power *= d;
  AdjunctionShadow out;
  out.left = tensor(chain(power), build_tower(a, level, cap).level(level), cap).product;
  out.right = build_tower(tensor(chain(d), a, cap).product, level, cap).level(level);
  out.iso = iso_check(out.left, out.right);
  return out;
}

}  // namespace mvt
