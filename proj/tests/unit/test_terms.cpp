#include <doctest.h>

#include "../support/oracle.hpp"
#include "mvtensor/error.hpp"
#include "mvtensor/term.hpp"

using namespace mvt;

namespace {

Rational01 r(std::int64_t n, std::int64_t d = 1) { return Rational01(n, d); }

const Signature kMv = Signature::mv();
const Signature kPmv = Signature::pmv();
const Signature kRiesz = Signature::riesz(4);
const Signature kFmv = Signature::fmv(4);

Rational01 eval(const std::string& text, std::vector<Rational01> xs, Signature sig = kFmv) {
  return eval_term(*parse_term(text, sig, static_cast<int>(xs.size())), xs);
}

/// Grid points of (Ł_d)^k, first coordinate slowest.
std::vector<oracle::Vec> grid(int k, long d) {
  std::vector<oracle::Vec> out{oracle::Vec{}};
  for (int i = 0; i < k; ++i) {
    std::vector<oracle::Vec> next;
    for (const auto& p : out) {
      for (long j = 0; j <= d; ++j) {
        auto q = p;
        q.push_back(oracle::q(j, d));
        next.push_back(q);
      }
    }
    out = next;
  }
  return out;
}

oracle::Vec projection(int k, long d, int i) {
  oracle::Vec out;
  for (const auto& p : grid(k, d)) out.push_back(p[i]);
  return out;
}

}  // namespace

TEST_SUITE("terms") {
  TEST_CASE("parsing") {
    auto t = parse_term("(oplus x1 x1)", kMv, 1);
    CHECK(t->kind == TermKind::Oplus);
    CHECK(t->args.size() == 2);
    CHECK(t->args[0]->var == 1);
    CHECK(parse_term(t->str(), kMv, 1)->str() == t->str());
    CHECK_THROWS_AS(parse_term("(prod x1 x2)", kMv, 2), Error);
    try {
      (void)parse_term("(prod x1 x2)", kMv, 2);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SignatureViolation);
    }
    auto s = parse_term("(scal 1/2 (neg x1))", kRiesz, 1);
    CHECK(s->kind == TermKind::Scal);
    CHECK(s->scalar == r(1, 2));
    CHECK(s->args[0]->kind == TermKind::Neg);
    for (const char* bad : {"(oplus x1)", "(neg x1 x1)", "(oplus x1 x3)", "(frob x1)", "(oplus x1 x1", "x0", ""}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_term(bad, kFmv, 2), Error);
    }
    CHECK(parse_term("(var 2)", kMv, 2)->var == 2);
  }

  TEST_CASE("standard-model evaluation") {
    CHECK(eval("(oplus x1 x1)", {r(2, 5)}) == r(4, 5));
    CHECK(eval("(prod x1 x1)", {r(1, 2)}) == r(1, 4));
    CHECK(eval("(oplus x1 x1)", {r(7, 10)}) == r(1));
    CHECK(eval("(odot x1 x2)", {r(2, 3), r(1, 2)}) == r(1, 6));
    CHECK(eval("(scal 1/4 (neg x1))", {r(1, 3)}) == r(1, 6));
    CHECK(eval("(neg 0)", {}) == r(1));
  }

  TEST_CASE("grid tabulation") {
    auto x = parse_term("x1", kMv, 1);
    CHECK(term_function_on_grid(*x, 1, 2).value_vector() == std::vector<Rational01>{r(0), r(1, 2), r(1)});
    auto join = parse_term("(oplus x1 x2)", kMv, 2);
    CHECK(term_function_on_grid(*join, 2, 1).value_vector() == std::vector<Rational01>{r(0), r(1), r(1), r(1)});
    auto prod = parse_term("(prod x1 x2)", kPmv, 2);
    const auto f = term_function_on_grid(*prod, 2, 2);
    REQUIRE(f.values().size() == 9);
    const auto pts = grid(2, 2);
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(oracle::from(f.at(i)) == pts[i][0] * pts[i][1]);

    auto mixed = parse_term("(oplus (prod x1 (neg x2)) (scal 1/2 x2))", kFmv, 2);
    const auto g = term_function_on_grid(*mixed, 2, 4);
    const auto labels = grid_points(2, 4);
    for (std::size_t i = 0; i < g.values().size(); ++i) {
      CHECK(g.at(i) == eval_term(*mixed, grid_coordinates(*labels, 4, i)));
    }
    CHECK_THROWS_AS(term_function_on_grid(*join, 2, 2000), Error);
  }

  TEST_CASE("grid equality") {
    const std::vector<std::pair<std::string, std::string>> axioms{
        {"(oplus x1 (oplus x2 x3))", "(oplus (oplus x1 x2) x3)"},
        {"(oplus x1 x2)", "(oplus x2 x1)"},
        {"(oplus x1 0)", "x1"},
        {"(neg (neg x1))", "x1"},
        {"(oplus x1 (neg 0))", "(neg 0)"},
        {"(oplus (neg (oplus (neg x1) x2)) x2)", "(oplus (neg (oplus (neg x2) x1)) x1)"},
    };
    for (const auto& [lhs, rhs] : axioms) {
      for (int k = 1; k <= 2; ++k) {
        for (std::int64_t d = 1; d <= 6; ++d) {
          int needed = 1;
          for (int v = 2; v <= 3; ++v) {
            if (lhs.find("x" + std::to_string(v)) != std::string::npos) needed = v;
          }
          const int vars = std::max(k, needed);
          if (vars == 3 && d > 4) continue;
          CAPTURE(lhs);
          CAPTURE(d);
          CHECK(grid_equal(*parse_term(lhs, kMv, vars), *parse_term(rhs, kMv, vars), vars, d).equal);
        }
      }
    }
    auto sq = grid_equal(*parse_term("(prod x1 x1)", kPmv, 1), *parse_term("x1", kPmv, 1), 1, 2);
    CHECK_FALSE(sq.equal);
    REQUIRE(sq.witness.has_value());
    CHECK((*sq.witness)[0] == r(1, 2));
    CHECK(sq.left == r(1, 4));
    CHECK(sq.right == r(1, 2));

    // 1/2·x against x⊙x on Ł_4: the oracle scans the grid for the first gap.
    std::optional<oracle::Q> first;
    for (const auto& p : grid(1, 4)) {
      const oracle::Q half = p[0] / 2;
      const oracle::Q sq2 = std::max<oracle::Q>(2 * p[0] - 1, 0);
      if (half != sq2 && !first) first = p[0];
    }
    auto sc = grid_equal(*parse_term("(scal 1/2 x1)", kRiesz, 1), *parse_term("(odot x1 x1)", kRiesz, 1), 1, 4);
    CHECK_FALSE(sc.equal);
    REQUIRE(first.has_value());
    CHECK(oracle::from((*sc.witness)[0]) == *first);
  }

  TEST_CASE("free-object evidence") {
    for (auto [k, d] : std::vector<std::pair<int, long>>{{1, 1}, {1, 2}, {2, 1}}) {
      CAPTURE(k);
      CAPTURE(d);
      const auto ev = free_pmv_evidence(k, d);
      CHECK(ev.pmv.equal);
      CHECK(ev.riesz.equal);
      const std::size_t width = grid(k, d).size();
      std::vector<oracle::Vec> projs;
      std::vector<oracle::Seed> seeds;
      for (int i = 0; i < k; ++i) {
        projs.push_back(projection(k, d, i));
        seeds.push_back({projs.back(), 1});
      }
      const auto free_mv = oracle::mv_closure(projs, width);
      CHECK(oracle::carrier(*ev.projections_mv) == free_mv);
      CHECK(oracle::carrier(*ev.pmv_closure) == oracle::closure(seeds, width, true, ev.degree));
      // products of at most `degree` elements of MV⟨π⟩, then MV closure
      std::set<oracle::Vec> products(free_mv.begin(), free_mv.end());
      for (int n = 2; n <= ev.degree; ++n) {
        std::set<oracle::Vec> next = products;
        for (const auto& p : products) {
          for (const auto& a : free_mv) next.insert(oracle::times(p, a));
        }
        products = next;
      }
      CHECK(oracle::carrier(*ev.tower_image) ==
            oracle::mv_closure(std::vector<oracle::Vec>(products.begin(), products.end()), width));
      CHECK(oracle::carrier(*ev.scalar_tensor) == oracle::tensor(*chain(d), *ev.projections_mv));
    }
    CHECK(oracle::carrier(*free_pmv_evidence(1, 1).pmv_closure) == oracle::mv_closure({projection(1, 1, 0)}, 2));
  }

  TEST_CASE("planted defect is reported") {
    const auto ev = free_pmv_evidence(1, 2, 2, kDefaultCap, true);
    CHECK_FALSE(ev.pmv.equal);
    CHECK_FALSE(ev.pmv.witness.empty());
    CHECK(ev.pmv.left_size != ev.pmv.right_size);
  }
}
