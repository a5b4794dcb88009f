#pragma once

// Independent reference computations for the test suites. Arithmetic is
// GMP rationals and closures are naive fixpoints over std::map, so nothing
// here shares code with the library.

#include <gmpxx.h>

#include <map>
#include <set>
#include <vector>

#include "mvtensor/algebra.hpp"

namespace oracle {

using Q = mpq_class;
using Vec = std::vector<Q>;

inline Q q(long num, long den = 1) {
  Q r(num, den);
  r.canonicalize();
  return r;
}

inline Q from(mvt::Rational01 r) { return q(static_cast<long>(r.num()), static_cast<long>(r.den())); }

inline Vec from(const mvt::PointFunction& f) {
  Vec out;
  for (auto r : f.values()) out.push_back(from(r));
  return out;
}

inline Vec constant(std::size_t width, const Q& v) { return Vec(width, v); }

inline Vec oplus(const Vec& x, const Vec& y) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Q s = x[i] + y[i];
    out[i] = s > 1 ? Q(1) : s;
  }
  return out;
}

inline Vec neg(const Vec& x) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = 1 - x[i];
  return out;
}

inline Vec times(const Vec& x, const Vec& y) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * y[i];
  return out;
}

/// Row-major (x, y) ↦ f(x)·g(y).
inline Vec outer(const Vec& f, const Vec& g) {
  Vec out;
  for (const auto& a : f) {
    for (const auto& b : g) out.push_back(a * b);
  }
  return out;
}

inline bool leq(const Vec& x, const Vec& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

struct Seed {
  Vec f;
  int degree = 0;
};

/// Least set containing the seeds, 0 and 1 and closed under ⊕ and * (and ·
/// when `product`), tracking the least derivation degree of each element:
/// MV operations take the max, · adds. Elements above `max_degree` (when
/// positive) are dropped. Gives up past `limit` elements.
inline std::set<Vec> closure(const std::vector<Seed>& seeds, std::size_t width, bool product = false,
                             int max_degree = 0, std::size_t limit = 50000) {
  std::map<Vec, int> degree;
  std::vector<Vec> fresh;
  auto offer = [&](const Vec& f, int d) {
    if (max_degree > 0 && d > max_degree) return;
    auto it = degree.find(f);
    if (it == degree.end()) {
      degree.emplace(f, d);
      fresh.push_back(f);
    } else if (d < it->second) {
      it->second = d;
      fresh.push_back(f);
    }
  };
  offer(constant(width, 0), 0);
  offer(constant(width, 1), 0);
  for (const auto& s : seeds) offer(s.f, s.degree);
  // Semi-naive rounds: every pair with at least one side new this round.
  while (!fresh.empty()) {
    if (degree.size() > limit) return {};
    std::vector<Vec> round;
    round.swap(fresh);
    std::vector<std::pair<Vec, int>> snapshot(degree.begin(), degree.end());
    for (const auto& x : round) {
      const int dx = degree.at(x);
      offer(neg(x), dx);
      for (const auto& [y, dy] : snapshot) {
        offer(oplus(x, y), std::max(dx, dy));
        if (product) offer(times(x, y), dx + dy);
      }
    }
  }
  std::set<Vec> out;
  for (const auto& [f, d] : degree) out.insert(f);
  return out;
}

inline std::set<Vec> mv_closure(const std::vector<Vec>& gens, std::size_t width) {
  std::vector<Seed> seeds;
  for (const auto& g : gens) seeds.push_back({g, 0});
  return closure(seeds, width);
}

inline std::set<Vec> carrier(const mvt::FiniteAlgebra& a) {
  std::set<Vec> out;
  for (const auto& f : a.carrier()) out.insert(from(f));
  return out;
}

/// {0, 1/n, …, 1} on one point.
inline std::set<Vec> chain(long n) {
  std::set<Vec> out;
  for (long k = 0; k <= n; ++k) out.insert(Vec{q(k, n)});
  return out;
}

/// MV⟨a⊗b⟩ on X×Y from the two carriers.
inline std::set<Vec> tensor(const mvt::FiniteAlgebra& a, const mvt::FiniteAlgebra& b) {
  std::vector<Vec> gens;
  for (const auto& f : a.carrier()) {
    for (const auto& g : b.carrier()) gens.push_back(outer(from(f), from(g)));
  }
  return mv_closure(gens, a.points()->size() * b.points()->size());
}

/// Sizes of the classes of points with equal restrictions, paired with the
/// lcm of the denominators seen on each class: the chain-order multiset.
inline std::multiset<long> chain_orders(const mvt::FiniteAlgebra& a) {
  const std::size_t width = a.points()->size();
  std::vector<bool> seen(width, false);
  std::multiset<long> out;
  for (std::size_t p = 0; p < width; ++p) {
    if (seen[p]) continue;
    for (std::size_t r = p; r < width; ++r) {
      bool same = true;
      for (const auto& f : a.carrier()) same = same && f.at(r) == f.at(p);
      if (same) seen[r] = true;
    }
    mpz_class l = 1;
    for (const auto& f : a.carrier()) l = lcm(l, from(f.at(p)).get_den());
    out.insert(l.get_si());
  }
  return out;
}

}  // namespace oracle
