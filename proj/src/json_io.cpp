#include "minkowski/json_io.hpp"

#include <map>

namespace minkowski::json {

json to_json(const Rat& r) { return to_string(r); }

json to_json(const Vec& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(to_string(c));
  return out;
}

json to_json(const std::vector<Vec>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Rat(std::to_string(j.get<unsigned long long>()));
  throw InputError("expected a rational string or an integer, got " + j.dump());
}

Vec vec_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InputError("expected a nonempty coordinate array, got " + j.dump());
  std::vector<Rat> c;
  for (const auto& x : j) c.push_back(rat_from_json(x));
  return Vec(std::move(c));
}

std::vector<Vec> points_from_json(const json& j) {
  const json& list = j.is_object() && j.contains("points") ? j.at("points") : j;
  if (!list.is_array()) throw InputError("expected an array of points");
  std::vector<Vec> out;
  for (const auto& p : list) out.push_back(vec_from_json(p));
  return out;
}

json ball_to_json(const Polytope& p, bool include_facets) {
  json out;
  out["dim"] = p.dim();
  out["vertices"] = to_json(p.vertices());
  if (include_facets) out["facets"] = to_json(p.facets());
  return out;
}

Polytope ball_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices")) throw InputError("ball JSON needs a \"vertices\" array");
  auto vertices = points_from_json(j.at("vertices"));
  if (j.contains("dim")) {
    const auto d = j.at("dim").get<int>();
    for (const auto& v : vertices)
      if (static_cast<int>(v.dim()) != d) throw InputError("vertex " + to_string(v) + " does not have dimension " + std::to_string(d));
  }
  return Polytope::from_vertices(vertices);
}

json face_to_json(const Polytope& p, const Face& f) {
  json out;
  out["dim"] = f.dim();
  out["vertexIndices"] = f.vertex_indices();
  out["vertices"] = to_json(p.points(f));
  out["functional"] = to_json(f.functional());
  return out;
}

json face_lattice_summary(const Polytope& p) {
  std::map<int, std::size_t> counts;
  for (const auto& f : p.faces()) ++counts[f.dim()];
  json by_dim = json::array();
  for (const auto& [d, c] : counts) by_dim.push_back(c);
  return {{"total", p.faces().size()}, {"byDim", by_dim}};
}

json angle_report_to_json(const AngleReport& r) {
  json out;
  out["absorbing"] = r.absorbing;
  out["faceDistance"] = to_json(r.face_distance);
  if (r.certificate) {
    out["certificate"] = {{"aStar", to_json(r.certificate->a_star)}, {"bStar", to_json(r.certificate->b_star)}};
  } else {
    out["certificate"] = nullptr;
  }
  return out;
}

json steiner_antipodal_to_json(const PolytopalNorm& n, const SteinerAntipodalReport& r) {
  json out;
  out["steinerAntipodal"] = r.steiner_antipodal;
  out["disjointPairs"] = r.disjoint_pairs;
  out["pairsMeasured"] = r.pairs_measured;
  if (r.witness) {
    out["witness"] = {{"faceA", face_to_json(n.dual_ball(), r.witness->face_a)},
                      {"faceB", face_to_json(n.dual_ball(), r.witness->face_b)},
                      {"distance", to_json(r.witness->distance)},
                      {"a", to_json(r.witness->a)},
                      {"b", to_json(r.witness->b)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json cl_report_to_json(const PolytopalNorm& n, const ClReport& r) {
  json out;
  out["clSpace"] = r.cl_space;
  if (r.witness) {
    out["witness"] = {{"facet", to_json(n.ball().facets()[r.witness->facet])},
                      {"vertex", to_json(n.ball().vertices()[r.witness->vertex])}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json tree_to_json(const SteinerTreeResult& t) {
  json out;
  out["level"] = to_string(t.level);
  out["length"] = to_json(t.length);
  out["terminals"] = to_json(t.terminals);
  out["steinerPoints"] = to_json(t.steiner_positions);
  json edges = json::array();
  for (const auto& [a, b] : t.topology.edges) edges.push_back({a, b});
  out["edges"] = edges;
  return out;
}

json chain_report_to_json(const ChainReport& r) {
  return {{"allAbsorbing", r.all_absorbing},
          {"allDistancesTwo", r.all_distances_two},
          {"starSmtOfLeaves", r.star_smt_of_leaves},
          {"starSmtWithOrigin", r.star_smt_with_origin},
          {"steinerAntipodal", r.steiner_antipodal},
          {"implicationsHold", r.implications_hold},
          {"equivalenceHolds", r.equivalence_holds},
          {"ok", r.ok},
          {"starLength", to_json(r.star_length)},
          {"smtLeavesLength", to_json(r.smt_leaves_length)},
          {"smtWithOriginLength", to_json(r.smt_with_origin_length)}};
}

json plane_report_to_json(const PlaneReport& r) {
  return {{"allAbsorbing", r.all_absorbing},
          {"starIsSmt", r.star_is_smt},
          {"agree", r.agree},
          {"starLength", to_json(r.star_length)},
          {"smtLength", to_json(r.smt_length)}};
}

}  // namespace minkowski::json
