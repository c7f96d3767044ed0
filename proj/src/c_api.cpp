#include "minkowski/minkowski.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "minkowski/hanner.hpp"
#include "minkowski/json_io.hpp"
#include "parallel.hpp"

struct mk_norm {
  minkowski::PolytopalNorm norm;
};

namespace {

thread_local std::string g_last_error;

using minkowski::json::json;

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p != nullptr) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class Body>
mk_status guarded(Body&& body) {
  try {
    g_last_error.clear();
    body();
    return MK_OK;
  } catch (const minkowski::NotSymmetric& e) {
    g_last_error = e.what();
    return MK_ERR_NOT_SYMMETRIC;
  } catch (const minkowski::DegenerateBall& e) {
    g_last_error = e.what();
    return MK_ERR_DEGENERATE_BALL;
  } catch (const minkowski::SizeLimit& e) {
    g_last_error = e.what();
    return MK_ERR_SIZE_LIMIT;
  } catch (const minkowski::InputError& e) {
    g_last_error = e.what();
    return MK_ERR_INPUT;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("JSON: ") + e.what();
    return MK_ERR_INPUT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MK_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw minkowski::InputError(std::string(what) + " must not be null");
}

unsigned jobs_of(int jobs) { return jobs < 1 ? 1u : static_cast<unsigned>(jobs); }

mk_status emit(const json& j, char** out) {
  *out = copy_out(j.dump(2));
  return *out == nullptr ? MK_ERR_INTERNAL : MK_OK;
}

}  // namespace

extern "C" {

MK_API const char* mk_version(void) { return "0.1.0"; }
MK_API const char* mk_last_error(void) { return g_last_error.c_str(); }

MK_API const char* mk_status_name(mk_status s) {
  switch (s) {
    case MK_OK: return "ok";
    case MK_ERR_INPUT: return "input error";
    case MK_ERR_NOT_SYMMETRIC: return "not symmetric";
    case MK_ERR_DEGENERATE_BALL: return "degenerate ball";
    case MK_ERR_SIZE_LIMIT: return "size limit";
    case MK_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

MK_API void mk_free_string(char* s) { std::free(s); }

MK_API mk_status mk_norm_from_ball_json(const char* ball_json, mk_norm** out) {
  return guarded([&] {
    require(ball_json, "ball_json");
    require(out, "out");
    auto ball = minkowski::json::ball_from_json(json::parse(ball_json));
    *out = new mk_norm{minkowski::PolytopalNorm(std::move(ball))};
  });
}

MK_API mk_status mk_norm_from_hanner(const char* expr, mk_norm** out) {
  return guarded([&] {
    require(expr, "expr");
    require(out, "out");
    *out = new mk_norm{minkowski::build_hanner(minkowski::HannerExpr::parse(expr))};
  });
}

MK_API mk_status mk_norm_rhombic(int d, mk_norm** out) {
  return guarded([&] {
    require(out, "out");
    *out = new mk_norm{minkowski::rhombic_dodecahedron(d)};
  });
}

MK_API mk_status mk_norm_dual(const mk_norm* n, mk_norm** out) {
  return guarded([&] {
    require(n, "norm");
    require(out, "out");
    *out = new mk_norm{minkowski::dual(n->norm)};
  });
}

MK_API void mk_norm_free(mk_norm* n) { delete n; }

MK_API int mk_norm_dim(const mk_norm* n) { return n == nullptr ? 0 : n->norm.dim(); }

MK_API mk_status mk_ball_json(const mk_norm* n, int include_facets, int include_faces, char** out) {
  mk_status s = guarded([&] {
    require(n, "norm");
    require(out, "out");
    json j = minkowski::json::ball_to_json(n->norm.ball(), include_facets != 0);
    if (include_faces != 0) j["faces"] = minkowski::json::face_lattice_summary(n->norm.ball());
    *out = copy_out(j.dump(2));
  });
  return s;
}

MK_API mk_status mk_norm_eval(const mk_norm* n, const char* vec, int dual, char** out) {
  return guarded([&] {
    require(n, "norm");
    require(vec, "vec");
    require(out, "out");
    auto x = minkowski::parse_vec(vec);
    auto v = dual != 0 ? minkowski::dual_norm_eval(n->norm, x) : minkowski::norm_eval(n->norm, x);
    *out = copy_out(minkowski::to_string(v));
  });
}

MK_API mk_status mk_absorbing(const mk_norm* n, const char* a, const char* b, char** out) {
  return guarded([&] {
    require(n, "norm");
    require(a, "a");
    require(b, "b");
    require(out, "out");
    auto report = minkowski::analyze_angle(n->norm, {minkowski::parse_vec(a), minkowski::parse_vec(b)});
    emit(minkowski::json::angle_report_to_json(report), out);
  });
}

MK_API mk_status mk_steiner_antipodal(const mk_norm* n, int jobs, char** out) {
  return guarded([&] {
    require(n, "norm");
    require(out, "out");
    auto report = minkowski::is_steiner_antipodal(n->norm, jobs_of(jobs));
    emit(minkowski::json::steiner_antipodal_to_json(n->norm, report), out);
  });
}

MK_API mk_status mk_cl_check(const mk_norm* n, char** out) {
  return guarded([&] {
    require(n, "norm");
    require(out, "out");
    emit(minkowski::json::cl_report_to_json(n->norm, minkowski::is_cl_space(n->norm)), out);
  });
}

MK_API mk_status mk_smt(const mk_norm* n, const char* terminals_json, mk_smt_mode mode, uint64_t seed,
                        int iterations, int jobs, char** out) {
  return guarded([&] {
    require(n, "norm");
    require(terminals_json, "terminals_json");
    require(out, "out");
    minkowski::Instance inst{n->norm, minkowski::json::points_from_json(json::parse(terminals_json))};
    minkowski::SteinerTreeResult result;
    if (mode == MK_SMT_EXACT) {
      result = minkowski::exact_smt(inst, jobs_of(jobs));
    } else {
      minkowski::ImproveOptions opt;
      opt.seed = seed;
      if (iterations >= 0) opt.iterations = static_cast<std::size_t>(iterations);
      result = minkowski::improve_tree(inst, minkowski::minimum_spanning_tree(inst), opt);
    }
    emit(minkowski::json::tree_to_json(result), out);
  });
}

MK_API mk_status mk_verify_chain(const mk_norm* n, const char* points_json, int jobs, int* holds, char** out) {
  return guarded([&] {
    require(n, "norm");
    require(points_json, "points_json");
    require(out, "out");
    auto pts = minkowski::json::points_from_json(json::parse(points_json));
    auto report = minkowski::verify_theorem_chain(n->norm, pts, jobs_of(jobs));
    if (holds != nullptr) *holds = report.ok ? 1 : 0;
    emit(minkowski::json::chain_report_to_json(report), out);
  });
}

MK_API mk_status mk_verify_plane(const mk_norm* n, const char* points_json, int jobs, int* holds, char** out) {
  return guarded([&] {
    require(n, "norm");
    require(points_json, "points_json");
    require(out, "out");
    auto pts = minkowski::json::points_from_json(json::parse(points_json));
    auto report = minkowski::verify_plane_theorem(n->norm, pts, jobs_of(jobs));
    if (holds != nullptr) *holds = report.agree ? 1 : 0;
    emit(minkowski::json::plane_report_to_json(report), out);
  });
}

MK_API mk_status mk_counterexample_rhombic(int d, uint64_t seed, int iterations, int jobs, char** out) {
  return guarded([&] {
    require(out, "out");
    auto norm = minkowski::rhombic_dodecahedron(d);
    const auto& vertices = norm.ball().vertices();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t j = i + 1; j < vertices.size(); ++j) pairs.emplace_back(i, j);
    std::vector<char> absorbing(pairs.size(), 0);
    minkowski::detail::parallel_for(pairs.size(), jobs_of(jobs), [&](std::size_t k) {
      absorbing[k] = minkowski::is_absorbing(norm, {vertices[pairs[k].first], vertices[pairs[k].second]}) ? 1 : 0;
    });
    const std::size_t checked = pairs.size();
    const bool all_absorbing = std::all_of(absorbing.begin(), absorbing.end(), [](char c) { return c != 0; });
    minkowski::Instance inst{norm, vertices};
    auto star = minkowski::star_tree(inst, minkowski::Vec(static_cast<std::size_t>(d)));
    minkowski::ImproveOptions opt;
    opt.seed = seed;
    if (iterations >= 0) opt.iterations = static_cast<std::size_t>(iterations);
    auto found = minkowski::improve_tree(inst, star, opt);
    json j;
    j["d"] = d;
    j["vertices"] = vertices.size();
    j["anglesChecked"] = checked;
    j["allAbsorbing"] = all_absorbing;
    j["starLength"] = minkowski::json::to_json(star.length);
    j["foundLength"] = minkowski::json::to_json(found.length);
    j["shorter"] = found.length < star.length;
    j["tree"] = minkowski::json::tree_to_json(found);
    emit(j, out);
  });
}

}  // extern "C"
