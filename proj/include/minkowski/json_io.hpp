#pragma once

// JSON encodings. Rationals are always strings ("p/q" or "p"); integer JSON
// numbers are accepted on input, other numbers are rejected.

#include <json.hpp>

#include "minkowski/angles.hpp"
#include "minkowski/antipodality.hpp"
#include "minkowski/steiner.hpp"

namespace minkowski::json {

using nlohmann::json;

json to_json(const Rat& r);
json to_json(const Vec& v);
json to_json(const std::vector<Vec>& vs);

Rat rat_from_json(const json& j);
Vec vec_from_json(const json& j);
std::vector<Vec> points_from_json(const json& j);

/// {"dim": d, "vertices": [...]} plus "facets" when requested.
json ball_to_json(const Polytope& p, bool include_facets);
/// Reads "vertices" and rebuilds the polytope; any "facets" entry is ignored.
Polytope ball_from_json(const json& j);

json face_to_json(const Polytope& p, const Face& f);
json face_lattice_summary(const Polytope& p);

json angle_report_to_json(const AngleReport& r);
json steiner_antipodal_to_json(const PolytopalNorm& n, const SteinerAntipodalReport& r);
json cl_report_to_json(const PolytopalNorm& n, const ClReport& r);
json tree_to_json(const SteinerTreeResult& t);
json chain_report_to_json(const ChainReport& r);
json plane_report_to_json(const PlaneReport& r);

}  // namespace minkowski::json
