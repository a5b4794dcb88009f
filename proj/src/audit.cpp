#include "mvtensor/audit.hpp"

#include "mvtensor/error.hpp"

namespace mvt {

bool AxiomReport::all_passed() const {
  for (const auto& item : items) {
    if (!item.passed) return false;
  }
  return true;
}

const AxiomResult* AxiomReport::find(std::string_view name) const {
  for (const auto& item : items) {
    if (item.name == name) return &item;
  }
  return nullptr;
}

namespace {

class Audit {
 public:
  explicit Audit(const FiniteAlgebra& a) : a_(a), n_(a.size()) {}

  AxiomReport run() {
    if (!tabulate_mv()) return std::move(report_);
    mv_axioms();
    if (a_.signature().has_product() || a_.has_product_table()) product_axioms();
    if (a_.signature().has_scalars()) scalar_axioms();
    if (a_.signature().kind == SignatureKind::FMV) fmv_axioms();
    return std::move(report_);
  }

 private:
  std::string e(Index i) const { return a_.element(i).str(); }

  AxiomResult& begin(std::string name) {
    report_.items.push_back({std::move(name), true, 0, {}});
    return report_.items.back();
  }

  static void fail(AxiomResult& r, std::string witness) {
    if (r.passed) {
      r.passed = false;
      r.witness = std::move(witness);
    }
  }

  Index op(Index x, Index y) const { return plus_[x * n_ + y]; }

  bool tabulate_mv() {
    auto& closed = begin("closed under ⊕ and *");
    plus_.assign(n_ * n_, 0);
    neg_.assign(n_, 0);
    for (Index x = 0; x < n_; ++x) {
      ++closed.instances;
      auto nx = a_.try_neg(x);
      if (!nx) {
        fail(closed, "(" + e(x) + ")* leaves the carrier");
        continue;
      }
      neg_[x] = *nx;
      for (Index y = 0; y < n_; ++y) {
        ++closed.instances;
        auto s = a_.try_oplus(x, y);
        if (!s) {
          fail(closed, e(x) + " ⊕ " + e(y) + " leaves the carrier");
          continue;
        }
        plus_[x * n_ + y] = *s;
      }
    }
    return closed.passed;
  }

  void mv_axioms() {
    auto& assoc = begin("⊕ associative");
    auto& comm = begin("⊕ commutative");
    auto& unit = begin("x ⊕ 0 = x");
    auto& invol = begin("x** = x");
    auto& absorb = begin("x ⊕ 0* = 0*");
    auto& luk = begin("(x* ⊕ y)* ⊕ y = (y* ⊕ x)* ⊕ x");
    auto& top = begin("0* = 1");
    const Index zero = a_.zero();
    const Index one = neg_[zero];
    ++top.instances;
    if (one != a_.top()) fail(top, "0* = " + e(one));
    for (Index x = 0; x < n_; ++x) {
      ++unit.instances;
      if (op(x, zero) != x) fail(unit, "x = " + e(x));
      ++invol.instances;
      if (neg_[neg_[x]] != x) fail(invol, "x = " + e(x));
      ++absorb.instances;
      if (op(x, one) != one) fail(absorb, "x = " + e(x));
      for (Index y = 0; y < n_; ++y) {
        ++comm.instances;
        if (op(x, y) != op(y, x)) fail(comm, "(" + e(x) + ", " + e(y) + ")");
        ++luk.instances;
        if (op(neg_[op(neg_[x], y)], y) != op(neg_[op(neg_[y], x)], x)) fail(luk, "(" + e(x) + ", " + e(y) + ")");
        for (Index z = 0; z < n_; ++z) {
          ++assoc.instances;
          if (op(op(x, y), z) != op(x, op(y, z))) fail(assoc, "(" + e(x) + ", " + e(y) + ", " + e(z) + ")");
        }
      }
    }
  }

  bool orthogonal(Index x, Index y) const { return a_.leq(x, neg_[y]); }

  void product_axioms() {
    const auto& sig = a_.signature();
    std::vector<std::optional<Index>> prod(n_ * n_);
    for (Index x = 0; x < n_; ++x) {
      for (Index y = 0; y < n_; ++y) prod[x * n_ + y] = a_.product(x, y);
    }
    auto p = [&](Index x, Index y) { return prod[x * n_ + y]; };
    const bool graded = sig.graded() && !a_.has_product_table();

    auto& closed = begin(graded ? "closed under · up to degree " + std::to_string(sig.max_degree)
                                : std::string("closed under ·"));
    auto& comm = begin("· commutative");
    auto& assoc = begin("· associative");
    auto& unit = begin("x · 1 = 1 · x = x");
    auto& bilinear = begin("· bilinear");
    for (Index x = 0; x < n_; ++x) {
      ++unit.instances;
      auto r = p(x, a_.top());
      auto l = p(a_.top(), x);
      if (!r || !l || *r != x || *l != x) fail(unit, "x = " + e(x));
      for (Index y = 0; y < n_; ++y) {
        const auto xy = p(x, y);
        if (!graded || a_.degree(x) + a_.degree(y) <= sig.max_degree) {
          ++closed.instances;
          if (!xy) fail(closed, e(x) + " · " + e(y) + " leaves the carrier");
        }
        ++comm.instances;
        if (xy != p(y, x)) fail(comm, "(" + e(x) + ", " + e(y) + ")");
        for (Index z = 0; z < n_; ++z) {
          const auto yz = p(y, z);
          if (xy && yz) {
            auto left = p(*xy, z);
            auto right = p(x, *yz);
            if (left && right) {
              ++assoc.instances;
              if (*left != *right) fail(assoc, "(" + e(x) + ", " + e(y) + ", " + e(z) + ")");
            }
          }
          if (!orthogonal(x, y)) continue;
          const Index s = op(x, y);
          auto zs = p(z, s), zx = p(z, x), zy = p(z, y);
          if (zs && zx && zy) {
            ++bilinear.instances;
            if (*zs != op(*zx, *zy)) fail(bilinear, "z · (x ⊕ y) at (" + e(x) + ", " + e(y) + ", " + e(z) + ")");
          }
          auto sz = p(s, z), xz = p(x, z), yz2 = p(y, z);
          if (sz && xz && yz2) {
            ++bilinear.instances;
            if (*sz != op(*xz, *yz2)) fail(bilinear, "(x ⊕ y) · z at (" + e(x) + ", " + e(y) + ", " + e(z) + ")");
          }
        }
      }
    }
  }

  void scalar_axioms() {
    const auto& sig = a_.signature();
    const auto scalars = sig.scalars();
    auto s = [&](Rational01 alpha, Index x) { return a_.scale(alpha, x); };
    auto in_scalars = [&](Rational01 alpha) { return sig.scalar_den % alpha.den() == 0; };

    auto& closed = begin(sig.graded() ? "closed under Ł_" + std::to_string(sig.scalar_den) +
                                            " scalars up to degree " + std::to_string(sig.max_degree)
                                      : "closed under Ł_" + std::to_string(sig.scalar_den) + " scalars");
    auto& additive = begin("α(x ⊕ y) = αx ⊕ αy for x ≤ y*");
    auto& scalar_sum = begin("(α ⊕ β)x = αx ⊕ βx for α ≤ β*");
    auto& scalar_prod = begin("(αβ)x = α(βx)");
    auto& one = begin("1x = x");
    for (Index x = 0; x < n_; ++x) {
      ++one.instances;
      auto ox = s(Rational01::one(), x);
      if (!ox || *ox != x) fail(one, "x = " + e(x));
      for (auto alpha : scalars) {
        if (!sig.graded() || a_.degree(x) + 1 <= sig.max_degree) {
          ++closed.instances;
          if (!s(alpha, x)) fail(closed, alpha.str() + " · " + e(x) + " leaves the carrier");
        }
        const auto ax = s(alpha, x);
        for (Index y = 0; y < n_; ++y) {
          if (!orthogonal(x, y)) continue;
          auto lhs = s(alpha, op(x, y));
          auto ay = s(alpha, y);
          if (lhs && ax && ay) {
            ++additive.instances;
            if (*lhs != op(*ax, *ay)) fail(additive, alpha.str() + " at (" + e(x) + ", " + e(y) + ")");
          }
        }
        for (auto beta : scalars) {
          auto bx = s(beta, x);
          if (alpha <= neg(beta)) {
            auto lhs = s(oplus(alpha, beta), x);
            if (lhs && ax && bx) {
              ++scalar_sum.instances;
              if (*lhs != op(*ax, *bx)) fail(scalar_sum, "(" + alpha.str() + ", " + beta.str() + ") at " + e(x));
            }
          }
          const auto ab = times(alpha, beta);
          if (in_scalars(ab) && bx) {
            auto lhs = s(ab, x);
            auto rhs = s(alpha, *bx);
            if (lhs && rhs) {
              ++scalar_prod.instances;
              if (*lhs != *rhs) fail(scalar_prod, "(" + alpha.str() + ", " + beta.str() + ") at " + e(x));
            }
          }
        }
      }
    }
  }

  void fmv_axioms() {
    auto& compat = begin("α(x · y) = (αx) · y = x · (αy)");
    for (auto alpha : a_.signature().scalars()) {
      for (Index x = 0; x < n_; ++x) {
        auto ax = a_.scale(alpha, x);
        for (Index y = 0; y < n_; ++y) {
          auto xy = a_.product(x, y);
          auto ay = a_.scale(alpha, y);
          if (!xy || !ax || !ay) continue;
          auto a = a_.scale(alpha, *xy);
          auto b = a_.product(*ax, y);
          auto c = a_.product(x, *ay);
          if (!a || !b || !c) continue;
          ++compat.instances;
          if (*a != *b || *b != *c) fail(compat, alpha.str() + " at (" + e(x) + ", " + e(y) + ")");
        }
      }
    }
  }

  const FiniteAlgebra& a_;
  std::size_t n_;
  std::vector<Index> plus_;
  std::vector<Index> neg_;
  AxiomReport report_;
};

}  // namespace

AxiomReport check_axioms(const FiniteAlgebra& a) { return Audit(a).run(); }

std::optional<Index> has_infinitesimal(const FiniteAlgebra& a) {
  for (Index x = 0; x < a.size(); ++x) {
    if (x == a.zero()) continue;
    Index multiple = x;
    for (;;) {
      const Index next = a.oplus(multiple, x);
      if (next == multiple) break;
      multiple = next;
    }
    if (a.leq(multiple, a.neg(x))) return x;
  }
  return std::nullopt;
}

}  // namespace mvt
