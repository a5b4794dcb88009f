// Acceptance runner: one PASS/FAIL line per criterion. Each criterion also
// yields a JSON payload; the last criterion reruns everything and compares
// the payload bytes.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "../support/corpus.hpp"
#include "../support/oracle.hpp"
#include "mvtensor/amalgam.hpp"
#include "mvtensor/audit.hpp"
#include "mvtensor/error.hpp"
#include "mvtensor/gamma.hpp"
#include "mvtensor/json_io.hpp"
#include "mvtensor/spectrum.hpp"
#include "mvtensor/tensor.hpp"
#include "mvtensor/term.hpp"
#include "mvtensor/tower.hpp"

using namespace mvt;
using corpus::at;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  Json payload = Json::object();
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;  // 0: no runtime bound
  std::function<Outcome()> run;
};

void require(Outcome& o, bool ok, const std::string& what) {
  if (!ok && o.pass) {
    o.pass = false;
    o.detail = what;
  }
}

Json report_items(const AxiomReport& r) {
  Json out = Json::array();
  for (const auto& item : r.items) out.push_back({{"name", item.name}, {"passed", item.passed}, {"instances", item.instances}});
  return out;
}

Outcome chain_law() {
  Outcome o;
  int cases = 0;
  for (std::int64_t n = 1; n <= 6; ++n) {
    for (std::int64_t m = 1; m <= 6; ++m) {
      const auto t = tensor(chain(n), chain(m));
      const bool iso = iso_check(t.product, chain(n * m)).has_value();
      const auto expected = oracle::mv_closure({oracle::Vec{oracle::q(1, static_cast<long>(n * m))}}, 1);
      const bool carrier = oracle::carrier(*t.product) == expected;
      const std::string name = std::to_string(n) + "x" + std::to_string(m);
      require(o, iso && carrier, "chain " + name);
      o.payload[name] = {{"size", t.product->size()}, {"iso", iso}, {"oracle", carrier}};
      ++cases;
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " chain pairs";
  return o;
}

Outcome commutativity_associativity() {
  Outcome o;
  const std::vector<corpus::Named> base{{"L2", chain(2)}, {"L3", chain(3)}, {"B", boolean_algebra()},
                                        {"diag", diagonal_chain(2, 2)}};
  int pairs = 0, triples = 0;
  for (const auto& [na, a] : base) {
    for (const auto& [nb, b] : base) {
      const Hom swap = commutativity_witness(a, b);
      const bool ok = swap.injective() && swap.surjective() && !hom_violation(swap);
      require(o, ok, "swap " + na + "," + nb);
      o.payload["swap"][na + "," + nb] = ok;
      ++pairs;
      for (const auto& [nc, c] : base) {
        const auto w = associativity_witness(a, b, c);
        const bool oracle_triple = [&] {
          std::vector<oracle::Vec> gens;
          for (const auto& f : a->carrier()) {
            for (const auto& g : b->carrier()) {
              for (const auto& h : c->carrier()) {
                gens.push_back(oracle::outer(oracle::outer(oracle::from(f), oracle::from(g)), oracle::from(h)));
              }
            }
          }
          const auto width = a->points()->size() * b->points()->size() * c->points()->size();
          return oracle::carrier(*w.triple) == oracle::mv_closure(gens, width);
        }();
        const bool ok3 = w.left_equals_right && w.equals_triple && oracle_triple;
        require(o, ok3, "triple " + na + "," + nb + "," + nc);
        o.payload["assoc"][na + "," + nb + "," + nc] = {{"size", w.left->size()}, {"ok", ok3}};
        ++triples;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " pairs, " + std::to_string(triples) + " triples";
  return o;
}

Outcome eps_gamma() {
  Outcome o;
  std::size_t instances = 0;
  for (std::int64_t n : {2, 3}) {
    const auto r = check_eps_gamma_identities(build_tower(chain(n), 3));
    for (const auto& item : r.items) {
      require(o, item.passed, "chain " + std::to_string(n) + ": " + item.name + " " + item.witness);
      instances += item.instances;
    }
    o.payload["chain " + std::to_string(n)] = report_items(r);
  }
  if (o.pass) o.detail = std::to_string(instances) + " instances";
  return o;
}

Outcome product_laws() {
  Outcome o;
  std::size_t instances = 0;
  for (std::int64_t n : {2, 3}) {
    const auto r = check_product_laws(build_tower(chain(n), 3));
    for (const auto& item : r.items) {
      require(o, item.passed && item.instances > 0, "chain " + std::to_string(n) + ": " + item.name + " " + item.witness);
      instances += item.instances;
    }
    o.payload["chain " + std::to_string(n)] = report_items(r);
  }
  if (o.pass) o.detail = std::to_string(instances) + " instances, 0 violations";
  return o;
}

/// The tallest tower of height ≤ 3 over `a` that fits the cap.
Tower tallest_tower(const AlgebraPtr& a) {
  for (int n = 3;; --n) {
    try {
      return build_tower(a, n);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CapExceeded || n == 1) throw;
    }
  }
}

Outcome semisimple_levels() {
  Outcome o;
  int levels = 0;
  auto scan = [&](const std::string& name, const AlgebraPtr& a) {
    const Tower tw = tallest_tower(a);
    Json sizes = Json::array();
    for (int n = 1; n <= tw.max_level(); ++n) {
      require(o, !has_infinitesimal(*tw.level(n)), name + ": infinitesimal at level " + std::to_string(n));
      for (int m = n; m <= tw.max_level(); ++m) {
        const auto& table = tw.eps_table(n, m);
        require(o, std::set<Index>(table.begin(), table.end()).size() == table.size(),
                name + ": ε not injective " + std::to_string(n) + "→" + std::to_string(m));
      }
      sizes.push_back(tw.level(n)->size());
      ++levels;
    }
    o.payload[name] = sizes;
  };
  for (const auto& [name, a] : corpus::algebras()) scan(name, a);
  for (const auto& [name, a] : corpus::product_closed()) scan(name + " (product)", a);
  if (o.pass) o.detail = std::to_string(levels) + " tower levels";
  return o;
}

Outcome lifts_and_naturality() {
  Outcome o;
  int morphisms = 0;
  auto lift_case = [&](const std::string& name, const Tower& tw, const AlgebraPtr& p, const Hom& f) {
    const auto lift = lift_hom(tw, p, f);
    const auto r = check_lift(tw, p, f, lift);
    for (const auto& item : r.items) require(o, item.passed, name + ": " + item.name + " " + item.witness);
    o.payload["lift"][name] = report_items(r);
    ++morphisms;
  };
  auto boolean = boolean_algebra();
  const Tower tb = build_tower(boolean, 3);
  for (const auto& [name, p] : corpus::product_closed()) {
    lift_case("unit into " + name, tb, p, extend_hom(boolean, p, std::vector<std::pair<Index, Index>>{}));
    lift_case("identity on " + name, build_tower(p, 2), p, identity_hom(p));
  }
  {
    auto diag = diagonal_chain(2, 2);
    std::vector<GradedGenerator> gens{{diag->element(diag->generators().at(0)), 1}};
    auto p = generate_graded(diag->points(), gens, Signature::pmv(3), 2000);
    std::vector<std::pair<Index, Index>> seeds;
    for (Index i = 0; i < diag->size(); ++i) seeds.emplace_back(i, p->index_of(diag->element(i)));
    lift_case("diagonal chain into its product closure", build_tower(diag, 3), p, extend_hom(diag, p, seeds));
  }

  for (const auto& [name, h] : corpus::mv_homs()) {
    const Tower ta = build_tower(h.source, 2);
    const Tower tb2 = build_tower(h.target, 2);
    const auto sharp = functor_on_hom(ta, tb2, h);
    const auto r = check_naturality(ta, tb2, h, sharp);
    for (const auto& item : r.items) require(o, item.passed, name + ": " + item.name + " " + item.witness);
    o.payload["naturality"][name] = report_items(r);
    ++morphisms;
  }

  // (g∘h)♯ = g♯∘h♯ and id♯ = id
  for (auto [a, b, c] : std::vector<std::tuple<int, int, int>>{{2, 4, 8}, {1, 2, 4}, {1, 3, 6}}) {
    const Hom h = corpus::chain_inclusion(a, b);
    const Hom g = corpus::chain_inclusion(b, c);
    const Tower ta = build_tower(h.source, 2), tb2 = build_tower(h.target, 2), tc = build_tower(g.target, 2);
    const bool ok = functoriality_holds(functor_on_hom(ta, tc, compose(g, h)), functor_on_hom(tb2, tc, g),
                                        functor_on_hom(ta, tb2, h));
    const auto id = functor_on_hom(ta, ta, identity_hom(h.source));
    bool identity = true;
    for (int n = 1; n <= 2; ++n) {
      for (Index i = 0; i < ta.level(n)->size(); ++i) identity = identity && id.levels[n - 1](i) == i;
    }
    const std::string name = std::to_string(a) + "→" + std::to_string(b) + "→" + std::to_string(c);
    require(o, ok && identity, "functoriality " + name);
    o.payload["functoriality"][name] = ok && identity;
  }
  if (o.pass) o.detail = std::to_string(morphisms) + " morphisms, 3 composites";
  return o;
}

Outcome fixed_points() {
  Outcome o;
  for (const auto& [name, p] : corpus::product_closed()) {
    const auto v = pmv_fixed_point_check(p, 3);
    require(o, v.holds, name + ": " + v.witness);
    o.payload[name] = {{"holds", v.holds}, {"level_sizes", v.level_sizes}};
  }
  if (o.pass) o.detail = std::to_string(corpus::product_closed().size()) + " product-closed carriers, N = 3";
  return o;
}

Outcome adjunction() {
  Outcome o;
  for (auto [n, d] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 2}, {2, 3}, {3, 2}}) {
    const auto s = adjunction_shadow(chain(n), d, 2);
    const std::string name = "chain " + std::to_string(n) + ", d = " + std::to_string(d);
    require(o, s.iso.has_value(), name);
    o.payload[name] = {{"left", s.left->size()}, {"right", s.right->size()}, {"iso", s.iso.has_value()}};
  }
  if (o.pass) o.detail = "3 instances at level 2";
  return o;
}

Outcome amalgamation() {
  Outcome o;
  auto check = [&](const std::string& kind, const std::string& name, const Amalgam& m) {
    require(o, m.square_commutes && m.legs_injective, kind + " " + name);
    o.payload[kind][name] = {{"size", m.e->size()}, {"points", m.e->points()->size()},
                             {"commutes", m.square_commutes}, {"injective", m.legs_injective}};
  };
  auto l2 = chain(2), l3 = chain(3), l4 = chain(4);
  auto diag = diagonal_chain(2, 2);
  auto prod = chain_product(std::vector<std::int64_t>{2, 2});
  std::vector<std::tuple<std::string, Hom, Hom>> mv{
      {"2 into 4 and 6", corpus::chain_inclusion(2, 4), corpus::chain_inclusion(2, 6)},
      {"boolean into 2 twice", corpus::chain_inclusion(1, 2), corpus::chain_inclusion(1, 2)},
      {"identities on 3", identity_hom(l3), identity_hom(l3)},
      {"boolean into 3 and 2", corpus::chain_inclusion(1, 3), corpus::chain_inclusion(1, 2)},
      {"3 into 6 and 3", corpus::chain_inclusion(3, 6), identity_hom(l3)},
      {"diagonal into product and 4", extend_hom(diag, prod, std::vector<Index>{at(prod, {Rational01(1, 2), Rational01(1, 2)})}),
       extend_hom(diag, l4, std::vector<Index>{at(l4, 1, 2)})},
  };
  for (const auto& [name, za, zb] : mv) check("mv", name, amalgamate_mv(za, zb));
  const auto twelve = amalgamate_mv(corpus::chain_inclusion(2, 4), corpus::chain_inclusion(2, 6));
  require(o, oracle::carrier(*twelve.e) == oracle::chain(12), "2 into 4 and 6 is not the chain of order 12");

  auto pmv_of = [](const AlgebraPtr& a) { return a->with_signature(Signature::pmv()); };
  auto unit = [](const AlgebraPtr& z, const AlgebraPtr& t) { return extend_hom(z, t, std::vector<std::pair<Index, Index>>{}); };
  const auto b = pmv_of(boolean_algebra());
  const auto pc = corpus::product_closed();
  const auto pair = pc[1].algebra, triple = pc[2].algebra, four = pc[3].algebra;
  const auto pair_into_four =
      extend_hom(pair, four, std::vector<std::pair<Index, Index>>{{pair->generators().at(0), four->index_of(PointFunction(four->points(), {Rational01(1, 1), Rational01(1, 1), Rational01(0, 1), Rational01(0, 1)}))}});
  auto pt = PointSet::singleton();
  std::vector<PointFunction> half{PointFunction::constant(pt, Rational01(1, 2))};
  const auto graded = generate_subalgebra(pt, half, Signature::pmv(2), 100);
  const auto graded_b = boolean_algebra()->with_signature(Signature::pmv(2));
  const auto riesz2 = scalar_level(boolean_algebra(), 2).algebra;
  const auto riesz4 = scalar_level(chain(2), 2).algebra;
  std::vector<std::tuple<std::string, Hom, Hom>> rich{
      {"boolean identities", identity_hom(b), identity_hom(b)},
      {"boolean into a boolean pair twice", unit(b, pair), unit(b, pair)},
      {"boolean into pair and triple", unit(b, pair), unit(b, triple)},
      {"pair into four points and itself", pair_into_four, identity_hom(pair)},
      {"boolean into graded product closure of 1/2 twice", unit(graded_b, graded), unit(graded_b, graded)},
      {"scalar chains 2 into 2 and 4", identity_hom(riesz2),
       extend_hom(riesz2, riesz4, std::vector<std::pair<Index, Index>>{{at(riesz2, 1, 2), riesz4->index_of(PointFunction::constant(riesz4->points(), Rational01(1, 2)))}})},
  };
  for (const auto& [name, za, zb] : rich) {
    const auto m = amalgamate_pmv(za, zb);
    check("pmv", name, m);
    const auto axioms = check_axioms(*m.e);
    require(o, axioms.all_passed(), "axioms on the amalgam of " + name);
  }
  if (o.pass) o.detail = std::to_string(mv.size()) + " MV squares, " + std::to_string(rich.size()) + " product/scalar squares";
  return o;
}

Outcome gamma_lambda() {
  Outcome o;
  for (const auto& g : corpus::groups()) {
    auto back = lambda(gamma(g)).group.factors;
    auto want = g.factors;
    std::sort(back.begin(), back.end());
    std::sort(want.begin(), want.end());
    require(o, back == want, "factors of " + g.str());
    o.payload["groups"][g.str()] = back;
  }
  for (const auto& [name, a] : corpus::algebras()) {
    const auto l = lambda(a);
    const bool iso = iso_check(gamma(l.group), a).has_value();
    require(o, iso, "round trip of " + name);
    o.payload["algebras"][name] = l.group.str();
  }
  const auto ring = tensor_fu_ring(UnitGroup{{2}}, 3);
  Json levels = Json::array();
  for (std::size_t n = 0; n < ring.levels.size(); ++n) {
    levels.push_back(ring.levels[n].group.factors);
    require(o, ring.gamma_iso[n], "fu-ring level " + std::to_string(n + 1));
  }
  require(o, levels == Json::parse("[[2],[4],[8]]"), "fu-ring factors " + levels.dump());
  o.payload["fu-ring"] = levels;
  if (o.pass) o.detail = std::to_string(corpus::groups().size()) + " groups, " + std::to_string(corpus::algebras().size()) + " algebras, levels " + levels.dump();
  return o;
}

Outcome free_evidence() {
  Outcome o;
  for (auto [k, d] : std::vector<std::pair<int, std::int64_t>>{{1, 1}, {1, 2}, {2, 1}}) {
    const auto ev = free_pmv_evidence(k, d, 2, 20000);
    const std::string name = "k=" + std::to_string(k) + ", d=" + std::to_string(d);
    require(o, ev.pmv.equal, name + ": " + ev.pmv.witness);
    require(o, ev.riesz.equal, name + " (scalars): " + ev.riesz.witness);
    o.payload[name] = {{"pmv", {ev.pmv.left_size, ev.pmv.right_size}}, {"riesz", {ev.riesz.left_size, ev.riesz.right_size}}};
  }
  const auto planted = free_pmv_evidence(1, 2, 2, 20000, true);
  require(o, !planted.pmv.equal, "planted defect went unnoticed");
  if (o.pass) o.detail = "3 grids, planted defect detected";
  return o;
}

struct Line {
  bool pass;
  std::string text;
};

std::vector<Criterion> criteria() {
  return {
      {1, "chain tensor law", 5, chain_law},
      {2, "commutativity and associativity witnesses", 30, commutativity_associativity},
      {3, "ε/γ identities on chain towers", 60, eps_gamma},
      {4, "tower product laws", 0, product_laws},
      {5, "semisimple, injectively embedded tower levels", 0, semisimple_levels},
      {6, "lifts, naturality and functoriality", 0, lifts_and_naturality},
      {7, "product-closed carriers are tower fixed points", 0, fixed_points},
      {8, "scalar extension commutes with the tower", 60, adjunction},
      {9, "amalgamation squares", 0, amalgamation},
      {10, "Γ/Λ round trips and fu-ring transport", 0, gamma_lambda},
      {11, "free-object grid evidence", 120, free_evidence},
  };
}

std::pair<std::vector<Line>, std::string> run_all() {
  std::vector<Line> lines;
  Json payloads = Json::object();
  for (const auto& c : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("error: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && s >= c.budget_s) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget)";
    }
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.title << ": " << o.detail << " [" << std::fixed;
    line.precision(2);
    line << s << " s]";
    lines.push_back({o.pass, line.str()});
    payloads[std::to_string(c.id)] = o.payload;
  }
  return {lines, payloads.dump()};
}

}  // namespace

int main() {
  const auto [lines, first] = run_all();
  bool all = true;
  for (const auto& l : lines) {
    std::cout << l.text << '\n' << std::flush;
    all = all && l.pass;
  }
  const auto start = std::chrono::steady_clock::now();
  const auto second = run_all().second;
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool same = first == second;
  std::cout << (same ? "PASS" : "FAIL") << "  12. determinism: rerun payloads " << (same ? "byte-identical" : "differ")
            << " (" << first.size() << " bytes) [" << std::fixed;
  std::cout.precision(2);
  std::cout << s << " s]\n";
  return all && same ? 0 : 1;
}
