#include "minkowski/antipodality.hpp"

#include <algorithm>

#include "parallel.hpp"

namespace minkowski {

bool is_antipodal(const PolytopalNorm& n, const Vec& a, const Vec& b) {
  return norm_eval(n, normalize(n, a) - normalize(n, b)) == 2;
}

SteinerAntipodalReport is_steiner_antipodal(const PolytopalNorm& n, unsigned jobs) {
  const Polytope& dual_ball = n.dual_ball();
  const auto& faces = dual_ball.faces();
  const std::size_t count = faces.size();

  // parents[i]: faces of one dimension more that contain face i.
  std::vector<std::vector<std::size_t>> parents(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (faces[j].dim() != faces[i].dim() + 1) continue;
      const auto& big = faces[j].vertex_indices();
      const auto& small = faces[i].vertex_indices();
      if (std::includes(big.begin(), big.end(), small.begin(), small.end())) parents[i].push_back(j);
    }
  }

  SteinerAntipodalReport report;
  std::vector<std::pair<std::size_t, std::size_t>> maximal;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (!faces_disjoint(faces[i], faces[j])) continue;
      ++report.disjoint_pairs;
      auto can_grow = [&](std::size_t grow, std::size_t other) {
        return std::any_of(parents[grow].begin(), parents[grow].end(),
                           [&](std::size_t p) { return faces_disjoint(faces[p], faces[other]); });
      };
      if (can_grow(i, j) || can_grow(j, i)) continue;
      maximal.emplace_back(i, j);
    }
  }
  report.pairs_measured = maximal.size();

  std::vector<FaceDistance> distances(maximal.size());
  detail::parallel_for(maximal.size(), jobs, [&](std::size_t k) {
    distances[k] = face_distance(n, faces[maximal[k].first], faces[maximal[k].second]);
  });

  for (std::size_t k = 0; k < maximal.size(); ++k) {
    if (distances[k].distance > 1) continue;
    const Face& fa = faces[maximal[k].first];
    const Face& fb = faces[maximal[k].second];
    report.steiner_antipodal = false;
    report.witness = FacePairWitness{fa, fb, distances[k].distance, fa.functional(), -fb.functional()};
    break;
  }
  return report;
}

ClReport is_cl_space(const PolytopalNorm& n) {
  const Polytope& ball = n.ball();
  ClReport report;
  for (std::size_t f = 0; f < ball.facets().size(); ++f) {
    for (std::size_t v = 0; v < ball.vertices().size(); ++v) {
      if (abs(dot(ball.facets()[f], ball.vertices()[v])) != 1) {
        report.cl_space = false;
        report.witness = ClWitness{f, v};
        return report;
      }
    }
  }
  return report;
}

}  // namespace minkowski
