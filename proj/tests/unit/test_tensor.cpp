#include <doctest.h>

#include "../support/corpus.hpp"
#include "../support/oracle.hpp"
#include "mvtensor/audit.hpp"
#include "mvtensor/error.hpp"
#include "mvtensor/spectrum.hpp"
#include "mvtensor/tensor.hpp"

using namespace mvt;
using corpus::at;

TEST_SUITE("tensor") {
  TEST_CASE("chain products") {
    auto t23 = tensor(chain(2), chain(3));
    CHECK(oracle::carrier(*t23.product) == oracle::tensor(*chain(2), *chain(3)));
    CHECK(oracle::carrier(*t23.product) == oracle::chain(6));
    CHECK(iso_check(t23.product, chain(6)).has_value());
    CHECK(oracle::carrier(*tensor(chain(2), chain(2)).product) == oracle::chain(4));
  }

  TEST_CASE("the bimorphism is the pointwise product") {
    auto a = chain_product(std::vector<std::int64_t>{2, 3});
    auto b = diagonal_chain(2, 2);
    auto t = tensor(a, b);
    for (Index i = 0; i < a->size(); ++i) {
      for (Index j = 0; j < b->size(); ++j) {
        CHECK(oracle::from(t.product->element(t.beta(i, j))) == oracle::outer(oracle::from(a->element(i)), oracle::from(b->element(j))));
      }
    }
  }

  TEST_CASE("boolean factor is neutral") {
    for (const auto& [name, a] : corpus::algebras()) {
      CAPTURE(name);
      auto t = tensor(a, boolean_algebra());
      CHECK(iso_check(t.product, a).has_value());
    }
  }

  TEST_CASE("corpus pairs") {
    const auto all = corpus::algebras();
    for (const auto& [na, a] : all) {
      for (const auto& [nb, b] : all) {
        if (a->size() * b->size() > 80) continue;
        CAPTURE(na);
        CAPTURE(nb);
        auto t = tensor(a, b);
        if (t.product->size() <= 400) CHECK(oracle::carrier(*t.product) == oracle::tensor(*a, *b));
        CHECK(check_bimorphism(t.beta).holds);
        auto swap = commutativity_witness(a, b);
        CHECK(swap.injective());
        CHECK(swap.surjective());
        CHECK_FALSE(hom_violation(swap).has_value());
        CHECK(iso_check(t.product, tensor(b, a).product).has_value());
      }
    }
  }

  TEST_CASE("universal property") {
    auto l2 = chain(2);
    auto l4 = chain(4);
    auto t = tensor(l2, l2);
    Bimorphism product{l2, l2, l4, {}};
    Bimorphism zero{l2, l2, l4, {}};
    for (Index a = 0; a < l2->size(); ++a) {
      for (Index b = 0; b < l2->size(); ++b) {
        product.table.push_back(l4->index_of(pointwise(MvOp::Prod, l2->element(a), l2->element(b))));
        zero.table.push_back(l4->zero());
      }
    }
    auto omega = extend_bimorphism(t, product);
    CHECK(omega.omega.injective());
    CHECK(omega.omega.surjective());
    CHECK(omega.interval->size() == l4->size());

    auto zeros = extend_bimorphism(t, zero);
    CHECK(zeros.interval->size() == 1);

    for (const auto& [name, a] : corpus::algebras()) {
      if (a->size() > 5) continue;
      auto ta = tensor(a, l2);
      auto self = extend_bimorphism(ta, ta.beta);
      for (Index i = 0; i < ta.product->size(); ++i) {
        CHECK(self.interval->element(self.omega(i)) == ta.product->element(i));
      }
      for (Index x = 0; x < a->size(); ++x) {
        for (Index y = 0; y < l2->size(); ++y) {
          CHECK(self.interval->element(self.omega(ta.beta(x, y))) == ta.product->element(ta.beta(x, y)));
        }
      }
    }
  }

  TEST_CASE("non-bimorphisms do not extend") {
    auto l2 = chain(2);
    auto t = tensor(l2, l2);
    Bimorphism sum{l2, l2, l2, {}};
    for (Index a = 0; a < l2->size(); ++a) {
      for (Index b = 0; b < l2->size(); ++b) sum.table.push_back(l2->oplus(a, b));
    }
    CHECK_THROWS_AS(extend_bimorphism(t, sum), Error);
  }

  TEST_CASE("associativity") {
    auto l2 = chain(2), l3 = chain(3);
    auto eights = associativity_witness(l2, l2, l2);
    CHECK(eights.left_equals_right);
    CHECK(eights.equals_triple);
    CHECK(oracle::carrier(*eights.left) == oracle::chain(8));
    auto twelves = associativity_witness(l2, l3, l2);
    CHECK(oracle::carrier(*twelves.right) == oracle::chain(12));
    CHECK(twelves.equals_triple);
    auto boolean = boolean_algebra();
    auto trivial = associativity_witness(l3, boolean, boolean);
    CHECK(iso_check(trivial.left, l3).has_value());
    CHECK(iso_check(trivial.triple, l3).has_value());
  }

  TEST_CASE("scalar extension levels") {
    auto l2 = chain(2);
    auto tower = scalar_tower(l2, {2});
    REQUIRE(tower.levels.size() == 1);
    const auto& level = tower.levels[0];
    CHECK(level.matches_tensor);
    CHECK(oracle::carrier(*level.algebra) == oracle::chain(4));
    CHECK(level.algebra->signature().has_scalars());
    CHECK(check_axioms(*level.algebra).all_passed());
    auto half_of_one = level.algebra->scale(Rational01(1, 2), level.algebra->top());
    REQUIRE(half_of_one.has_value());
    CHECK(level.algebra->element(*half_of_one).at(std::size_t{0}) == Rational01(1, 2));

    for (std::int64_t d = 1; d <= 5; ++d) {
      auto s = scalar_level(boolean_algebra(), d);
      CHECK(oracle::carrier(*s.algebra) == oracle::chain(d));
    }

    auto l3 = chain(3);
    auto t3 = scalar_tower(l3, {2, 4, 3});
    REQUIRE(t3.embeddings.count({2, 4}) == 1);
    CHECK(t3.embeddings.count({2, 3}) == 0);
    const auto& e = t3.embeddings.at({2, 4});
    CHECK(e.injective());
    CHECK_FALSE(hom_violation(e).has_value());
    for (const auto& lv : t3.levels) {
      CHECK(lv.matches_tensor);
      CHECK(check_axioms(*lv.algebra).all_passed());
    }
    CHECK_THROWS_AS(scalar_embedding(t3.levels[0], t3.levels[2]), Error);
  }
}
