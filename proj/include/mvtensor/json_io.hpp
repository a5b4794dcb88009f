#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "mvtensor/algebra.hpp"
#include "mvtensor/gamma.hpp"
#include "mvtensor/morphism.hpp"
#include "mvtensor/tower.hpp"

namespace mvt {

using Json = nlohmann::ordered_json;

/// [num, den] in lowest terms.
Json to_json(Rational01 r);
/// Throws SchemaError at `pointer` unless `j` is a reduced pair in [0,1].
Rational01 rational_from_json(const Json& j, const std::string& pointer);

/// { label: [num, den], ... } in point order.
Json to_json(const PointFunction& f);
PointFunction function_from_json(const Json& j, const PointSetPtr& points, const std::string& pointer);

/// Points, optional factors, signature, generators (with degrees when
/// graded) and the carrier sorted lexicographically by value vector.
/// Table-backed algebras also list their ⊕ and * tables in that order.
Json to_json(const FiniteAlgebra& a);
/// Regenerates the carrier from the generators; a present "carrier" must
/// match it. Throws SchemaError with a JSON pointer.
AlgebraPtr algebra_from_json(const Json& j, std::size_t cap = kDefaultCap);

Json to_json(const TowerElement& x);
TowerElement tower_element_from_json(const Tower& tw, const Json& j, const std::string& pointer = "");

Json to_json(const UnitGroup& g);
UnitGroup unit_group_from_json(const Json& j, const std::string& pointer = "");
Json to_json(const GroupElement& x);

/// { "source": [...], "target": [...] } pairs of carrier functions, in the
/// source's sorted order.
Json to_json(const Hom& h);

/// Throws IOError, or SchemaError when the text is not JSON.
Json load_json(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const Json& j);
AlgebraPtr load_algebra(const std::filesystem::path& path, std::size_t cap = kDefaultCap);

}  // namespace mvt
