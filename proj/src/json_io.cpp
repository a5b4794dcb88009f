#include "mvtensor/json_io.hpp"

#include <fstream>
#include <sstream>

#include "mvtensor/error.hpp"

namespace mvt {

namespace {

[[noreturn]] void schema(const std::string& pointer, const std::string& what) {
  throw Error(ErrorKind::SchemaError, (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& pointer) {
  if (!j.is_object()) schema(pointer, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(pointer + "/" + key, "missing field");
  return *it;
}

std::string escape(const std::string& key) {
  std::string out;
  for (char ch : key) {
    if (ch == '~') out += "~0";
    else if (ch == '/') out += "~1";
    else out += ch;
  }
  return out;
}

std::vector<std::string> string_list(const Json& j, const std::string& pointer) {
  if (!j.is_array() || j.empty()) schema(pointer, "expected a nonempty array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) schema(pointer + "/" + std::to_string(i), "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

std::int64_t positive_int(const Json& j, const std::string& pointer) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 1) schema(pointer, "expected a positive integer");
  return j.get<std::int64_t>();
}

}  // namespace

Json to_json(Rational01 r) { return Json::array({r.num(), r.den()}); }

Rational01 rational_from_json(const Json& j, const std::string& pointer) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    schema(pointer, "expected a rational [num, den]");
  }
  try {
    return Rational01::from_reduced(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
  } catch (const Error& e) {
    schema(pointer, e.what());
  }
}

Json to_json(const PointFunction& f) {
  Json out = Json::object();
  for (std::size_t i = 0; i < f.values().size(); ++i) out[f.domain().label(i)] = to_json(f.at(i));
  return out;
}

PointFunction function_from_json(const Json& j, const PointSetPtr& points, const std::string& pointer) {
  if (!j.is_object()) schema(pointer, "expected an object of label: [num, den]");
  std::vector<Rational01> values(points->size());
  std::vector<bool> seen(points->size(), false);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto where = pointer + "/" + escape(it.key());
    auto idx = points->find(it.key());
    if (!idx) schema(where, "unknown point label");
    values[*idx] = rational_from_json(it.value(), where);
    seen[*idx] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) schema(pointer + "/" + escape(points->label(i)), "missing value");
  }
  return PointFunction(points, std::move(values));
}

Json to_json(const FiniteAlgebra& a) {
  Json out;
  out["points"] = a.points()->labels();
  if (a.points()->factor_count() > 1) out["factors"] = a.points()->factors();
  const auto& sig = a.signature();
  out["signature"] = to_string(sig.kind);
  if (sig.has_scalars()) out["scalar_den"] = sig.scalar_den;
  if (sig.graded()) out["max_degree"] = sig.max_degree;
  Json gens = Json::array();
  Json degrees = Json::array();
  for (Index g : a.generators()) {
    gens.push_back(to_json(a.element(g)));
    degrees.push_back(a.degree(g));
  }
  out["generators"] = gens;
  if (sig.graded()) out["degrees"] = degrees;
  out["size"] = a.size();
  const auto order = a.sorted_order();
  Json carrier = Json::array();
  for (Index i : order) carrier.push_back(to_json(a.element(i)));
  out["carrier"] = carrier;
  if (a.has_tables()) {
    std::vector<std::size_t> position(a.size());
    for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = k;
    Json plus = Json::array();
    Json neg_row = Json::array();
    for (Index x : order) {
      Json row = Json::array();
      for (Index y : order) row.push_back(position[a.oplus(x, y)]);
      plus.push_back(row);
      neg_row.push_back(position[a.neg(x)]);
    }
    out["tables"] = {{"zero", position[a.zero()]}, {"top", position[a.top()]}, {"oplus", plus}, {"neg", neg_row}};
  }
  return out;
}

AlgebraPtr algebra_from_json(const Json& j, std::size_t cap) {
  if (!j.is_object()) schema("", "expected an algebra object");
  const auto labels = string_list(field(j, "points", ""), "/points");
  PointSetPtr points;
  try {
    if (j.contains("factors")) {
      const auto& factors = j["factors"];
      if (!factors.is_array() || factors.empty()) schema("/factors", "expected a nonempty array");
      points = PointSet::make(string_list(factors[0], "/factors/0"));
      for (std::size_t i = 1; i < factors.size(); ++i) {
        points = PointSet::product(*points, PointSet(string_list(factors[i], "/factors/" + std::to_string(i))));
      }
      if (points->labels() != labels) schema("/factors", "factors do not produce the listed points");
    } else {
      points = PointSet::make(labels);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SchemaError) throw;
    schema("/points", e.what());
  }

  const auto& sig_field = field(j, "signature", "");
  if (!sig_field.is_string()) schema("/signature", "expected a string");
  Signature sig;
  try {
    sig.kind = parse_signature_kind(sig_field.get<std::string>());
  } catch (const Error& e) {
    schema("/signature", e.what());
  }
  if (sig.has_scalars()) sig.scalar_den = j.contains("scalar_den") ? positive_int(j["scalar_den"], "/scalar_den") : 1;
  if (j.contains("max_degree")) {
    const auto& md = j["max_degree"];
    if (!md.is_number_integer() || md.get<int>() < 0) schema("/max_degree", "expected a nonnegative integer");
    sig.max_degree = md.get<int>();
  }

  const auto& gens_json = field(j, "generators", "");
  if (!gens_json.is_array()) schema("/generators", "expected an array");
  std::vector<PointFunction> gens;
  for (std::size_t i = 0; i < gens_json.size(); ++i) {
    gens.push_back(function_from_json(gens_json[i], points, "/generators/" + std::to_string(i)));
  }
  AlgebraPtr algebra;
  if (sig.graded() && j.contains("degrees")) {
    const auto& degrees = j["degrees"];
    if (!degrees.is_array() || degrees.size() != gens.size()) schema("/degrees", "expected one degree per generator");
    std::vector<GradedGenerator> graded;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!degrees[i].is_number_integer() || degrees[i].get<int>() < 0) {
        schema("/degrees/" + std::to_string(i), "expected a nonnegative integer");
      }
      graded.push_back({gens[i], degrees[i].get<int>()});
    }
    algebra = generate_graded(points, graded, sig, cap);
  } else {
    algebra = generate_subalgebra(points, gens, sig, cap);
  }

  if (j.contains("carrier")) {
    const auto& carrier = j["carrier"];
    if (!carrier.is_array()) schema("/carrier", "expected an array");
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      const auto where = "/carrier/" + std::to_string(i);
      if (!algebra->find(function_from_json(carrier[i], points, where))) {
        schema(where, "not generated by the listed generators");
      }
    }
    if (carrier.size() != algebra->size()) {
      schema("/carrier", "lists " + std::to_string(carrier.size()) + " elements but the generators give " +
                             std::to_string(algebra->size()));
    }
  }
  return algebra;
}

Json to_json(const TowerElement& x) {
  Json out;
  out["level"] = x.level;
  out["value"] = to_json(x.value);
  return out;
}

TowerElement tower_element_from_json(const Tower& tw, const Json& j, const std::string& pointer) {
  const auto& level = field(j, "level", pointer);
  if (!level.is_number_integer()) schema(pointer + "/level", "expected an integer");
  const int n = level.get<int>();
  if (n < 1 || n > tw.max_level()) schema(pointer + "/level", "outside the tower");
  TowerElement x{n, function_from_json(field(j, "value", pointer), tw.level(n)->points(), pointer + "/value")};
  if (!tw.level(n)->find(x.value)) schema(pointer + "/value", "not an element of T^" + std::to_string(n));
  return x;
}

Json to_json(const UnitGroup& g) { return Json{{"factors", g.factors}}; }

UnitGroup unit_group_from_json(const Json& j, const std::string& pointer) {
  const auto& factors = field(j, "factors", pointer);
  if (!factors.is_array() || factors.empty()) schema(pointer + "/factors", "expected a nonempty array");
  UnitGroup g;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    g.factors.push_back(positive_int(factors[i], pointer + "/factors/" + std::to_string(i)));
  }
  return g;
}

Json to_json(const GroupElement& x) {
  Json out = Json::array();
  for (const auto& v : x) out.push_back(Json::array({v.num(), v.den()}));
  return out;
}

Json to_json(const Hom& h) {
  Json out = Json::array();
  for (Index i : h.source->sorted_order()) {
    out.push_back({{"source", to_json(h.source->element(i))}, {"target", to_json(h.target->element(h(i)))}});
  }
  return out;
}

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IOError, "cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::SchemaError, path.string() + ": " + e.what());
  }
}

void save_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IOError, "cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw Error(ErrorKind::IOError, "write to " + path.string() + " failed");
}

AlgebraPtr load_algebra(const std::filesystem::path& path, std::size_t cap) {
  return algebra_from_json(load_json(path), cap);
}

}  // namespace mvt
