#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "fixpoint/dynamics.hpp"
#include "fixpoint/e3036.hpp"
#include "fixpoint/eset.hpp"
#include "fixpoint/polynomial.hpp"
#include "fixpoint/realroots.hpp"

namespace fixpoint {

using json = nlohmann::ordered_json;

/// Ascending coefficient strings.
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

/// { "defining", "lo", "hi", "approx" }.
json to_json(const AlgebraicNumber& a, int digits = 30);
AlgebraicNumber algebraic_from_json(const json& j);

/// { "verdict", "rank", "limit", "trace", "reason" } with absent fields
/// omitted; cycles also carry "entry"/"period", divergence "step".
json to_json(const OrbitVerdict& v, const std::optional<OrbitTrace>& trace = std::nullopt);

/// { "polynomial", "max_depth", "e_empty", "levels", "nodes" }.
json to_json(const ETree& tree, int digits = 30);
/// Rebuilds a tree over a PolynomialMap from its JSON form.
ETree tree_from_json(const json& j, PolyLimits limits = {});

json to_json(const CrossValidationReport& r);

/// { "family", "signs", "approx", "level" }.
json to_json(const e3036::LeveledRadical& r, int digits = 30);
json to_json(const e3036::MatchReport& r);

/// Edges child -> parent, 12-digit labels, fixed points double-circled.
std::string to_dot(const ETree& tree);
/// id,depth,parent,lo,hi,approx
std::string to_csv(const ETree& tree, int digits = 30);

/// Decimal rendering of an enclosure's midpoint.
std::string decimal_midpoint(const Interval& iv, int digits);

} // namespace fixpoint
