#include <doctest.h>

#include <random>

#include "minkowski/angles.hpp"
#include "minkowski/antipodality.hpp"
#include "minkowski/hanner.hpp"
#include "support.hpp"

using namespace minkowski;

namespace {

PolytopalNorm octagon() {
  const Rat t(3, 4);
  return PolytopalNorm::from_vertices(
      support::symmetric_closure({Vec{1, 0}, Vec{0, 1}, Vec{t, t}, Vec{t, -t}}));
}

/// Random boundary point: a random convex combination of a random face's vertices.
Vec random_unit(std::mt19937_64& rng, const PolytopalNorm& n) {
  const auto& faces = n.ball().faces();
  std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
  const auto pts = n.ball().points(faces[pick(rng)]);
  Vec out(static_cast<std::size_t>(n.dim()));
  Rat total = 0;
  std::uniform_int_distribution<int> w(0, 4);
  std::vector<Rat> weights;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    weights.push_back(w(rng) + (i == 0 ? 1 : 0));
    total += weights.back();
  }
  for (std::size_t i = 0; i < pts.size(); ++i) out += (weights[i] / total) * pts[i];
  return out;
}

}  // namespace

TEST_CASE("is_antipodal examples") {
  auto linf = support::linf(2);
  CHECK(is_antipodal(linf, Vec{1, 1}, Vec{1, -1}));
  CHECK_FALSE(is_antipodal(linf, Vec{1, 0}, Vec{0, 1}));
  CHECK(is_antipodal(support::hexagon(), Vec{1, 1}, Vec{-1, -1}));
}

TEST_CASE("steiner antipodality examples") {
  CHECK(is_steiner_antipodal(support::l1(2)).steiner_antipodal);
  CHECK(is_steiner_antipodal(support::linf(2)).steiner_antipodal);
  // Adjacent hexagon vertices span an absorbing angle at distance 1.
  auto hex = is_steiner_antipodal(support::hexagon());
  CHECK_FALSE(hex.steiner_antipodal);
  REQUIRE(hex.witness);
  CHECK(hex.witness->distance == 1);
  CHECK(is_absorbing(support::hexagon(), {Vec{1, 0}, Vec{1, 1}}));
  CHECK_FALSE(is_antipodal(support::hexagon(), Vec{1, 0}, Vec{1, 1}));
  auto rd = is_steiner_antipodal(rhombic_dodecahedron(3));
  CHECK_FALSE(rd.steiner_antipodal);
  REQUIRE(rd.witness);
  CHECK(rd.witness->distance <= 1);
}

TEST_CASE("steiner antipodality scan is coherent with random unit pairs") {
  std::mt19937_64 rng(31);
  std::vector<PolytopalNorm> norms{octagon(), support::hexagon(), rhombic_dodecahedron(3)};
  for (int i = 0; i < 6; ++i) norms.push_back(support::random_polygon(rng));
  for (const auto& n : norms) {
    auto report = is_steiner_antipodal(n);
    CHECK(report.pairs_measured <= report.disjoint_pairs);
    if (report.witness) {
      const auto& w = *report.witness;
      Vec a = normalize(n, w.a), b = normalize(n, w.b);
      CHECK(is_absorbing(n, {a, b}));
      CHECK_FALSE(is_antipodal(n, a, b));
    }
    for (int s = 0; s < 25; ++s) {
      Vec a = random_unit(rng, n), b = random_unit(rng, n);
      if (a == b) continue;
      const bool absorbing = is_absorbing(n, {a, b});
      const bool antipodal = is_antipodal(n, a, b);
      if (antipodal) CHECK(absorbing);
      if (report.steiner_antipodal && absorbing) CHECK(antipodal);
    }
  }
}

TEST_CASE("cl-space check") {
  for (int d = 2; d <= 4; ++d) {
    CHECK(is_cl_space(support::l1(d)).cl_space);
    CHECK(is_cl_space(support::linf(d)).cl_space);
  }
  // conv of an edge and its opposite is a parallelogram missing two vertices.
  auto hex = is_cl_space(support::hexagon());
  CHECK_FALSE(hex.cl_space);
  REQUIRE(hex.witness);
  auto rd = is_cl_space(rhombic_dodecahedron(3));
  CHECK_FALSE(rd.cl_space);
  REQUIRE(rd.witness);
  auto n = rhombic_dodecahedron(3);
  const Vec& f = n.ball().facets()[rd.witness->facet];
  const Vec& v = n.ball().vertices()[rd.witness->vertex];
  CHECK(abs(dot(f, v)) != 1);
}

TEST_CASE("cl-spaces are steiner antipodal; their disjoint faces are at distance 2") {
  std::mt19937_64 rng(37);
  std::vector<PolytopalNorm> norms{octagon(), support::hexagon(), support::l1(3), support::linf(3)};
  for (int i = 0; i < 8; ++i) norms.push_back(support::random_polygon(rng));
  for (const auto& n : norms)
    if (is_cl_space(n).cl_space) CHECK(is_steiner_antipodal(n).steiner_antipodal);

  for (const auto& n : {support::l1(3), build_hanner(HannerExpr::parse("((R +1 R) +inf R)"))}) {
    const auto& faces = n.ball().faces();
    for (std::size_t i = 0; i < faces.size(); ++i)
      for (std::size_t j = i + 1; j < faces.size(); ++j)
        if (faces_disjoint(faces[i], faces[j])) CHECK(polytope_face_distance(n.ball(), faces[i], faces[j]).distance == 2);
  }
}
