// Batch front end: every verb builds one construction or audit and prints a
// JSON report { command, outcome, payload, timing_ms }.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

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

namespace {

constexpr const char* kTermHelp =
    "Terms use prefix syntax: 0, 1, x1..xk or (var i), (neg t), (oplus t t), (odot t t), (prod t t), "
    "(scal p/q t).";

struct Outcome {
  Json payload = Json::object();
  bool audits_pass = true;
};

struct Globals {
  std::size_t cap = kDefaultCap;
  std::string out;
  bool json = false;
};

std::vector<std::int64_t> int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Error(ErrorKind::UsageError, "expected a comma-separated integer list, got '" + text + "'");
    }
  }
  if (out.empty()) throw Error(ErrorKind::UsageError, "empty integer list");
  return out;
}

Json inline_or_file(const std::string& text) {
  if (!text.empty() && (text.front() == '{' || text.front() == '[')) {
    try {
      return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorKind::SchemaError, std::string("inline JSON: ") + e.what());
    }
  }
  return load_json(text);
}

/// chain:N | bool | prod:a,b,... | diag:N[,r] | path to algebra JSON
AlgebraPtr algebra_spec(const std::string& spec, std::size_t cap) {
  auto body = [&](std::string_view prefix) { return spec.substr(prefix.size()); };
  if (spec == "bool") return boolean_algebra();
  if (spec.rfind("chain:", 0) == 0) return chain(int_list(body("chain:")).at(0));
  if (spec.rfind("prod:", 0) == 0) return chain_product(int_list(body("prod:")));
  if (spec.rfind("diag:", 0) == 0) {
    auto v = int_list(body("diag:"));
    return diagonal_chain(v.at(0), v.size() > 1 ? static_cast<std::size_t>(v[1]) : 2);
  }
  return load_algebra(spec, cap);
}

UnitGroup group_spec(const std::string& spec) {
  if (!spec.empty() && std::isdigit(static_cast<unsigned char>(spec.front()))) return UnitGroup{int_list(spec)};
  return unit_group_from_json(inline_or_file(spec));
}

Json report_json(const AxiomReport& r) {
  Json items = Json::array();
  for (const auto& item : r.items) {
    Json j{{"name", item.name}, {"passed", item.passed}, {"instances", item.instances}};
    if (!item.passed) j["witness"] = item.witness;
    items.push_back(j);
  }
  return items;
}

Json orders_json(const AlgebraPtr& a) {
  try {
    return chain_orders(a);
  } catch (const Error&) {
    return nullptr;
  }
}

Outcome alg_check(const AlgebraPtr& a) {
  Outcome o;
  const auto report = check_axioms(*a);
  const auto inf = has_infinitesimal(*a);
  o.payload["size"] = a->size();
  o.payload["signature"] = to_string(a->signature().kind);
  o.payload["axioms"] = report_json(report);
  o.payload["infinitesimal"] = inf ? to_json(a->element(*inf)) : Json(nullptr);
  o.audits_pass = report.all_passed() && !inf;
  return o;
}

Outcome alg_spectrum(const AlgebraPtr& a) {
  Outcome o;
  Json comps = Json::array();
  for (const auto& c : spectral_decomposition(a)) {
    Json points = Json::array();
    for (auto p : c.points) points.push_back(a->points()->label(p));
    Json evaluation = Json::array();
    for (Index i : a->sorted_order()) {
      evaluation.push_back(to_json(c.evaluation.target->element(c.evaluation(i)).at(std::size_t{0})));
    }
    comps.push_back({{"order", c.order}, {"points", points}, {"evaluation", evaluation}});
  }
  o.payload["components"] = comps;
  return o;
}

Outcome interval_verb(const AlgebraPtr& a, const std::string& elem) {
  PointFunction bound = [&] {
    if (!elem.empty() && elem.front() == '{') return function_from_json(inline_or_file(elem), a->points(), "");
    if (a->points()->size() != 1) throw Error(ErrorKind::UsageError, "give ELEM as a JSON object on this point set");
    return PointFunction::constant(a->points(), Rational01::parse(elem));
  }();
  auto interval = interval_algebra(a, bound);
  Outcome o = alg_check(interval);
  o.payload["interval"] = to_json(*interval);
  return o;
}

Outcome tensor_verb(const std::vector<std::string>& args, std::size_t cap) {
  Outcome o;
  if (args.size() == 4 && args[0] == "assoc") {
    auto w = associativity_witness(algebra_spec(args[1], cap), algebra_spec(args[2], cap), algebra_spec(args[3], cap),
                                   cap);
    o.payload["left_size"] = w.left->size();
    o.payload["right_size"] = w.right->size();
    o.payload["triple_size"] = w.triple->size();
    o.payload["left_equals_right"] = w.left_equals_right;
    o.payload["equals_triple_products"] = w.equals_triple;
    o.payload["carrier"] = to_json(*w.left);
    o.audits_pass = w.left_equals_right && w.equals_triple;
    return o;
  }
  if (args.size() != 2) throw Error(ErrorKind::UsageError, "tensor SPEC SPEC | tensor assoc SPEC SPEC SPEC");
  auto a = algebra_spec(args[0], cap);
  auto b = algebra_spec(args[1], cap);
  auto t = tensor(a, b, cap);
  const auto verdict = check_bimorphism(t.beta);
  o.payload["product"] = to_json(*t.product);
  std::vector<std::size_t> pos_a(a->size()), pos_b(b->size()), pos_t(t.product->size());
  auto positions = [](const FiniteAlgebra& x, std::vector<std::size_t>& pos) {
    const auto order = x.sorted_order();
    for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
  };
  positions(*a, pos_a);
  positions(*b, pos_b);
  positions(*t.product, pos_t);
  Json index = Json::array();
  for (Index i : a->sorted_order()) {
    for (Index j : b->sorted_order()) index.push_back(Json::array({pos_a[i], pos_b[j], pos_t[t.beta(i, j)]}));
  }
  o.payload["generator_index"] = index;
  o.payload["bimorphism"] = verdict.describe(t.beta);
  const auto orders = chain_orders(t.product);
  o.payload["chain_orders"] = orders;
  if (orders.size() == 1) {
    const auto iso = iso_check(t.product, chain(orders[0]));
    o.payload["iso_to_chain"] = {{"order", orders[0]}, {"found", iso.has_value()}};
    if (iso) o.payload["iso_to_chain"]["witness"] = to_json(*iso);
    o.audits_pass = iso.has_value();
  }
  o.audits_pass = o.audits_pass && verdict.holds;
  return o;
}

Outcome tower_verb(const AlgebraPtr& a, int levels, bool identities, bool pmv, std::size_t cap) {
  Outcome o;
  const Tower tw = build_tower(a, levels, cap);
  Json list = Json::array();
  for (int n = 1; n <= levels; ++n) {
    const auto& level = tw.level(n);
    const auto inf = has_infinitesimal(*level);
    list.push_back({{"level", n},
                    {"size", level->size()},
                    {"chain_orders", orders_json(level)},
                    {"infinitesimal", inf ? to_json(level->element(*inf)) : Json(nullptr)}});
    if (inf) o.audits_pass = false;
  }
  o.payload["levels"] = list;
  o.payload["eps_injective"] = true;  // build_tower throws otherwise
  if (identities) {
    auto r = check_eps_gamma_identities(tw);
    o.payload["eps_gamma_identities"] = report_json(r);
    o.audits_pass = o.audits_pass && r.all_passed();
  }
  if (pmv) {
    auto r = check_product_laws(tw);
    o.payload["product_laws"] = report_json(r);
    o.audits_pass = o.audits_pass && r.all_passed();
  }
  return o;
}

Outcome tpmv_mul(const AlgebraPtr& a, const std::string& xs, const std::string& ys, int levels, std::size_t cap) {
  const Json xj = inline_or_file(xs);
  const Json yj = inline_or_file(ys);
  if (levels == 0) {
    auto level_of = [](const Json& j) { return j.contains("level") && j["level"].is_number_integer() ? j["level"].get<int>() : 1; };
    levels = std::max(1, level_of(xj) + level_of(yj));
  }
  const Tower tw = build_tower(a, levels, cap);
  const auto x = tower_element_from_json(tw, xj, "/x");
  const auto y = tower_element_from_json(tw, yj, "/y");
  const auto xy = tensor_pmv_product(tw, x, y);
  Outcome o;
  o.payload["product"] = to_json(xy);
  o.payload["canonical"] = to_json(canonical(tw, xy));
  o.payload["commutes"] = equivalent(tw, xy, tensor_pmv_product(tw, y, x));
  return o;
}

Outcome lift_verb(const AlgebraPtr& a, const std::string& homfile, int levels, std::size_t cap) {
  const Json spec = inline_or_file(homfile);
  if (!spec.contains("target")) throw Error(ErrorKind::SchemaError, "/target: missing field");
  auto p = algebra_from_json(spec["target"], cap);
  if (!spec.contains("images") || !spec["images"].is_array()) throw Error(ErrorKind::SchemaError, "/images: expected an array");
  std::vector<Index> images;
  for (std::size_t i = 0; i < spec["images"].size(); ++i) {
    images.push_back(p->index_of(function_from_json(spec["images"][i], p->points(), "/images/" + std::to_string(i))));
  }
  if (spec.contains("levels")) levels = spec["levels"].get<int>();
  const Hom f = extend_hom(a->with_signature(Signature::mv()), p, images);
  const Tower tw = build_tower(a, levels, cap);
  const auto lift = lift_hom(tw, p, f);
  const auto report = check_lift(tw, p, f, lift);
  Outcome o;
  Json sizes = Json::array();
  for (int n = 1; n <= levels; ++n) sizes.push_back(tw.level(n)->size());
  o.payload["level_sizes"] = sizes;
  o.payload["checks"] = report_json(report);
  o.audits_pass = report.all_passed();
  return o;
}

Hom embedding_from(const AlgebraPtr& z, const AlgebraPtr& target, const Json& spec, const std::string& pointer) {
  if (spec.contains("embedding")) {
    const auto& e = spec["embedding"];
    if (!e.is_array()) throw Error(ErrorKind::SchemaError, pointer + "/embedding: expected an array");
    std::vector<Index> images;
    for (std::size_t i = 0; i < e.size(); ++i) {
      images.push_back(target->index_of(
          function_from_json(e[i], target->points(), pointer + "/embedding/" + std::to_string(i))));
    }
    return extend_hom(z, target, images);
  }
  Hom h{z, target, std::vector<Index>(z->size())};
  for (Index i = 0; i < z->size(); ++i) {
    auto found = target->find(z->element(i).value_vector());
    if (!found || !same_points(z->points(), target->points())) {
      throw Error(ErrorKind::EmbeddingFailure, "no \"embedding\" given and Z is not contained in the algebra");
    }
    h.table[i] = *found;
  }
  return h;
}

Json amalgam_json(const Amalgam& m) {
  return {{"amalgam", to_json(*m.e)},
          {"square_commutes", m.square_commutes},
          {"legs_injective", m.legs_injective},
          {"f_a", to_json(m.f_a)},
          {"f_b", to_json(m.f_b)}};
}

Outcome amalgamate_verb(const std::string& zf, const std::string& af, const std::string& bf, std::size_t cap) {
  const Json zj = inline_or_file(zf), aj = inline_or_file(af), bj = inline_or_file(bf);
  auto z = algebra_from_json(zj, cap);
  auto a = algebra_from_json(aj, cap);
  auto b = algebra_from_json(bj, cap);
  const Hom za = embedding_from(z, a, aj, "/a");
  const Hom zb = embedding_from(z, b, bj, "/b");
  Outcome o;
  const auto mv = amalgamate_mv(za, zb, cap);
  o.payload["mv"] = amalgam_json(mv);
  o.audits_pass = mv.square_commutes && mv.legs_injective;
  if (a->signature().kind != SignatureKind::MV) {
    const auto rich = amalgamate_pmv(za, zb, cap);
    o.payload["full_signature"] = amalgam_json(rich);
    const auto axioms = check_axioms(*rich.e);
    o.payload["full_signature"]["axioms"] = report_json(axioms);
    o.audits_pass = o.audits_pass && rich.square_commutes && rich.legs_injective && axioms.all_passed();
  }
  return o;
}

Outcome lambda_verb(const AlgebraPtr& a) {
  const auto l = lambda(a);
  Outcome o;
  o.payload["group"] = to_json(l.group);
  o.payload["group_text"] = l.group.str();
  const bool iso = iso_check(gamma(l.group), a).has_value();
  o.payload["round_trip_iso"] = iso;
  o.audits_pass = iso;
  return o;
}

Outcome fu_ring_verb(const UnitGroup& g, int levels, std::size_t cap) {
  const auto ring = tensor_fu_ring(g, levels, cap);
  Outcome o;
  Json list = Json::array();
  for (int n = 1; n <= levels; ++n) {
    const auto& l = ring.levels[n - 1];
    list.push_back({{"level", n}, {"group", to_json(l.group)}, {"group_text", l.group.str()},
                    {"gamma_iso", static_cast<bool>(ring.gamma_iso[n - 1])}});
    o.audits_pass = o.audits_pass && ring.gamma_iso[n - 1];
  }
  o.payload["levels"] = list;
  Json embeddings = Json::array();
  for (int n = 1; n < levels; ++n) {
    for (std::size_t k = 0; k < ring.embeddings[n - 1].size(); ++k) {
      Json images = Json::array();
      for (const auto& img : ring.embeddings[n - 1][k].images) images.push_back(to_json(img));
      embeddings.push_back({{"from", n}, {"to", n + 1 + static_cast<int>(k)}, {"generator_images", images}});
    }
  }
  o.payload["embeddings"] = embeddings;
  return o;
}

std::vector<Rational01> assignment(const std::string& text) {
  std::vector<Rational01> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) out.push_back(Rational01::parse(part));
  return out;
}

Json comparison_json(const CarrierComparison& c) {
  Json j{{"equal", c.equal}, {"left_size", c.left_size}, {"right_size", c.right_size}};
  if (!c.equal) j["witness"] = c.witness;
  return j;
}

int emit(const Globals& g, const std::vector<std::string>& argv, const std::string& outcome, const Json& payload,
         double ms) {
  Json report;
  report["command"] = argv;
  report["outcome"] = outcome;
  report["payload"] = payload;
  report["timing_ms"] = ms;
  if (!g.out.empty()) save_json(g.out, report);
  if (g.json) {
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << "outcome: " << outcome << '\n' << payload.dump(2) << '\n';
  }
  return outcome == "ok" ? 0 : (outcome == "audit-failed" ? 1 : 2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact MV-algebra, tensor product and tensor PMV-algebra workbench.\n" + std::string(kTermHelp)};
  app.require_subcommand(1);
  Globals globals;
  auto add_globals = [&](CLI::App* sub) {
    sub->add_option("--cap", globals.cap, "carrier size cap")->capture_default_str();
    sub->add_option("--out", globals.out, "also write the report to PATH");
    sub->add_flag("--json", globals.json, "print the full report as JSON");
  };
  add_globals(&app);

  std::function<Outcome()> action;
  auto set = [&](CLI::App* sub, std::function<Outcome()> fn) {
    sub->callback([&action, fn] { action = fn; });
  };
  auto verb = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* sub = parent->add_subcommand(name, help);
    add_globals(sub);
    return sub;
  };

  std::string s1, s2, s3;
  std::int64_t n1 = 0, n2 = 0;
  int levels = 0;
  bool flag1 = false, flag2 = false;
  std::vector<std::string> specs;

  auto* alg = app.add_subcommand("alg", "single-algebra constructions and audits");
  alg->require_subcommand(1);
  auto* alg_chain = verb(alg, "chain", "the chain Ł_N");
  alg_chain->add_option("N", n1)->required();
  set(alg_chain, [&] { return Outcome{to_json(*chain(n1)), true}; });
  auto* alg_gen = verb(alg, "generate", "regenerate an algebra from its generators");
  alg_gen->add_option("FILE", s1)->required();
  set(alg_gen, [&] { return Outcome{to_json(*algebra_spec(s1, globals.cap)), true}; });
  auto* alg_check_cmd = verb(alg, "check", "axiom audit");
  alg_check_cmd->add_option("FILE", s1)->required();
  set(alg_check_cmd, [&] { return alg_check(algebra_spec(s1, globals.cap)); });
  auto* alg_spec_cmd = verb(alg, "spectrum", "spectral decomposition");
  alg_spec_cmd->add_option("FILE", s1)->required();
  set(alg_spec_cmd, [&] { return alg_spectrum(algebra_spec(s1, globals.cap)); });

  auto* interval = verb(&app, "interval", "the interval algebra [0, ELEM]");
  interval->add_option("FILE", s1)->required();
  interval->add_option("ELEM", s2)->required();
  set(interval, [&] { return interval_verb(algebra_spec(s1, globals.cap), s2); });

  auto* tensor_cmd = verb(&app, "tensor", "semisimple tensor product; 'tensor assoc A B C' for associativity");
  tensor_cmd->add_option("SPECS", specs)->required();
  set(tensor_cmd, [&] { return tensor_verb(specs, globals.cap); });

  auto* tower = verb(&app, "tower", "the tower T^1..T^N");
  tower->add_option("SPEC", s1)->required();
  tower->add_option("--levels", levels)->required();
  tower->add_flag("--check-lemma21", flag1, "ε/γ identities");
  tower->add_flag("--check-pmv", flag2, "tower product laws");
  set(tower, [&] { return tower_verb(algebra_spec(s1, globals.cap), levels, flag1, flag2, globals.cap); });

  auto* tpmv = app.add_subcommand("tpmv", "tower product");
  tpmv->require_subcommand(1);
  auto* mul = verb(tpmv, "mul", "product of two tower elements (JSON files or inline JSON)");
  mul->add_option("FILE", s1)->required();
  mul->add_option("X", s2)->required();
  mul->add_option("Y", s3)->required();
  mul->add_option("--levels", levels);
  set(mul, [&] { return tpmv_mul(algebra_spec(s1, globals.cap), s2, s3, levels, globals.cap); });

  auto* lift = verb(&app, "lift", "lift of an MV-hom into a product algebra along the tower");
  lift->add_option("FILE", s1)->required();
  lift->add_option("HOMFILE", s2)->required();
  lift->add_option("--levels", levels)->default_val(2);
  set(lift, [&] { return lift_verb(algebra_spec(s1, globals.cap), s2, levels, globals.cap); });

  auto* amalg = verb(&app, "amalgamate", "amalgam of two embeddings of Z");
  amalg->add_option("ZFILE", s1)->required();
  amalg->add_option("AFILE", s2)->required();
  amalg->add_option("BFILE", s3)->required();
  set(amalg, [&] { return amalgamate_verb(s1, s2, s3, globals.cap); });

  auto* gamma_cmd = verb(&app, "gamma", "Γ of a unit group (factors like 2,3 or a JSON file)");
  gamma_cmd->add_option("GROUPSPEC", s1)->required();
  set(gamma_cmd, [&] { return Outcome{to_json(*gamma(group_spec(s1))), true}; });

  auto* lambda_cmd = verb(&app, "lambda", "Λ of a finite algebra");
  lambda_cmd->add_option("FILE", s1)->required();
  set(lambda_cmd, [&] { return lambda_verb(algebra_spec(s1, globals.cap)); });

  auto* fu = verb(&app, "fu-ring", "tensor fu-ring levels of a unit group");
  fu->add_option("GROUPSPEC", s1)->required();
  fu->add_option("--levels", levels)->required();
  set(fu, [&] { return fu_ring_verb(group_spec(s1), levels, globals.cap); });

  auto* term = app.add_subcommand("term", std::string("term functions. ") + kTermHelp);
  term->require_subcommand(1);
  std::string sig_name = "FMV";
  auto* eval = verb(term, "eval", "evaluate at an assignment like 1/2,1/3");
  eval->add_option("EXPR", s1)->required();
  eval->add_option("ASSIGN", s2)->required();
  eval->add_option("--signature", sig_name)->capture_default_str();
  set(eval, [&] {
    const auto values = assignment(s2);
    const auto t = parse_term(s1, Signature{parse_signature_kind(sig_name), 1, 0}, static_cast<int>(values.size()));
    return Outcome{Json{{"term", t->str()}, {"value", to_json(eval_term(*t, values))}}, true};
  });
  auto* grid = verb(term, "grid", "tabulate on the grid (Ł_D)^K");
  grid->add_option("EXPR", s1)->required();
  grid->add_option("K", n1)->required();
  grid->add_option("D", n2)->required();
  grid->add_option("--signature", sig_name)->capture_default_str();
  set(grid, [&] {
    const auto t = parse_term(s1, Signature{parse_signature_kind(sig_name), 1, 0}, static_cast<int>(n1));
    return Outcome{Json{{"term", t->str()}, {"values", to_json(term_function_on_grid(*t, static_cast<int>(n1), n2))}}, true};
  });

  auto* evidence = verb(&app, "free-evidence", "grid evidence for the free PMV and Riesz characterizations");
  evidence->add_option("K", n1)->required();
  evidence->add_option("D", n2)->required();
  int degree = 2;
  evidence->add_option("--degree", degree, "product degree bound")->capture_default_str();
  evidence->add_flag("--omit-products", flag1, "plant a defect: drop products from the tower route");
  set(evidence, [&] {
    const auto ev = free_pmv_evidence(static_cast<int>(n1), n2, degree, globals.cap, flag1);
    Outcome o;
    o.payload = {{"k", ev.k},
                 {"d", ev.d},
                 {"degree", ev.degree},
                 {"free_mv_size", ev.projections_mv->size()},
                 {"pmv", comparison_json(ev.pmv)},
                 {"riesz", comparison_json(ev.riesz)}};
    o.audits_pass = ev.pmv.equal && ev.riesz.equal;
    return o;
  });

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return emit(globals, args, "error", {{"kind", "UsageError"}, {"message", e.what()}}, 0.0);
  }
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = action();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return emit(globals, args, o.audits_pass ? "ok" : "audit-failed", o.payload, ms);
  } catch (const Error& e) {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return emit(globals, args, "error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}, ms);
  }
}
