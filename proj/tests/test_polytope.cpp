#include <doctest.h>

#include <random>

#include "minkowski/error.hpp"
#include "minkowski/hanner.hpp"
#include "minkowski/polytope.hpp"
#include "support.hpp"

using namespace minkowski;
using support::sorted;

TEST_CASE("hull: cross-polytope, square and hexagon") {
  auto cross = Polytope::from_vertices({Vec{1, 0}, Vec{-1, 0}, Vec{0, 1}, Vec{0, -1}});
  CHECK(cross.vertices().size() == 4);
  CHECK(sorted(cross.facets()) == sorted({Vec{1, 1}, Vec{1, -1}, Vec{-1, 1}, Vec{-1, -1}}));

  auto square = Polytope::from_vertices(support::sign_vectors(2));
  CHECK(sorted(square.facets()) == sorted({Vec{1, 0}, Vec{-1, 0}, Vec{0, 1}, Vec{0, -1}}));

  std::vector<Vec> hex_pts{Vec{1, 0}, Vec{-1, 0}, Vec{0, 1}, Vec{0, -1}, Vec{1, 1}, Vec{-1, -1}};
  auto hex = Polytope::from_vertices(hex_pts);
  CHECK(hex.vertices().size() == 6);
  CHECK(hex.facets().size() == 6);
  CHECK(hex.facets() == support::brute_force_facets(hex_pts));
}

TEST_CASE("hull: redundant and interior points are dropped") {
  auto p = Polytope::from_vertices({Vec{1, 0}, Vec{-1, 0}, Vec{0, 1}, Vec{0, -1}, Vec{Rat(1, 2), Rat(1, 2)},
                                    Vec{Rat(-1, 2), Rat(-1, 2)}, Vec{Rat(1, 4), 0}, Vec{Rat(-1, 4), 0}, Vec{1, 0}});
  CHECK(p.vertices().size() == 4);
}

TEST_CASE("hull: input validation") {
  CHECK_THROWS_AS((Polytope::from_vertices({Vec{1, 0}, Vec{-1, 0}})), DegenerateBall);
  CHECK_THROWS_AS((Polytope::from_vertices({Vec{1, 0}, Vec{0, 1}, Vec{-1, -1}})), NotSymmetric);
  CHECK_THROWS_AS((Polytope::from_vertices({})), DegenerateBall);
}

TEST_CASE("hull: agrees with brute-force facet enumeration") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = trial < 20 ? 2 : 3;
    std::vector<Vec> pts;
    for (int i = 0; i < 5; ++i) pts.push_back(support::random_vec(rng, d, 5, 2));
    pts = support::symmetric_closure(pts);
    if (affine_dimension(pts) != static_cast<int>(d)) continue;
    auto p = Polytope::from_vertices(pts);
    CHECK(p.facets() == support::brute_force_facets(pts));
    CHECK(p.vertices() == support::brute_force_vertices(pts));
    // Double description consistency.
    for (const auto& f : p.facets()) {
      std::vector<Vec> tight;
      for (const auto& v : p.vertices()) {
        CHECK(dot(f, v) <= 1);
        if (dot(f, v) == 1) tight.push_back(v);
      }
      CHECK(affine_dimension(tight) == static_cast<int>(d) - 1);
    }
  }
}

TEST_CASE("polar dual") {
  auto cross = Polytope::from_vertices({Vec{1, 0}, Vec{-1, 0}, Vec{0, 1}, Vec{0, -1}});
  CHECK(polar_dual(cross).vertices() == sorted(support::sign_vectors(2)));
  auto hex = Polytope::from_vertices({Vec{1, 0}, Vec{-1, 0}, Vec{0, 1}, Vec{0, -1}, Vec{1, 1}, Vec{-1, -1}});
  CHECK(polar_dual(hex).vertices() == sorted({Vec{1, 0}, Vec{-1, 0}, Vec{0, 1}, Vec{0, -1}, Vec{1, -1}, Vec{-1, 1}}));
  CHECK(polar_dual(hex).vertices() == hex.facets());
  CHECK(polar_dual(hex).facets() == hex.vertices());
  CHECK(polar_dual(polar_dual(hex)) == hex);
}

TEST_CASE("face lattice sizes") {
  auto square = Polytope::from_vertices(support::sign_vectors(2));
  CHECK(square.faces().size() == 8);
  auto cube = Polytope::from_vertices(support::sign_vectors(3));
  CHECK(cube.faces().size() == 26);
  CHECK(cube.faces_of_dim(0).size() == 8);
  CHECK(cube.faces_of_dim(1).size() == 12);
  CHECK(cube.faces_of_dim(2).size() == 6);
  auto rd = rhombic_dodecahedron(3).ball();
  CHECK(rd.faces_of_dim(0).size() == 14);
  CHECK(rd.faces_of_dim(1).size() == 24);
  CHECK(rd.faces_of_dim(2).size() == 12);
  CHECK(face_lattice(rd).size() == 50);
}

TEST_CASE("face lattice functionals expose their faces") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto p = support::random_ball(rng, trial < 5 ? 2 : 3, 3, 5).ball();
    for (const auto& f : p.faces()) {
      CHECK(exposed_face(p, f.functional()) == f);
      for (std::size_t v = 0; v < p.vertices().size(); ++v) {
        const Rat val = dot(f.functional(), p.vertices()[v]);
        CHECK(val <= 1);
        CHECK((val == 1) == f.contains(v));
      }
    }
  }
}

TEST_CASE("exposed_face") {
  auto cross = Polytope::from_vertices({Vec{1, 0}, Vec{-1, 0}, Vec{0, 1}, Vec{0, -1}});
  auto edge = exposed_face(cross, Vec{1, 1});
  CHECK(edge.dim() == 1);
  CHECK(sorted(cross.points(edge)) == sorted({Vec{1, 0}, Vec{0, 1}}));
  CHECK(exposed_face(cross, Vec{3, 3}) == edge);

  auto square = Polytope::from_vertices(support::sign_vectors(2));
  auto facet = exposed_face(square, Vec{1, 0});
  CHECK(facet.dim() == 1);
  CHECK(facet.functional() == Vec{1, 0});
  auto vertex = exposed_face(square, Vec{1, 1});
  CHECK(vertex.dim() == 0);
  CHECK(square.points(vertex) == std::vector<Vec>{Vec{1, 1}});
  CHECK(vertex.functional() == Vec{Rat(1, 2), Rat(1, 2)});
  CHECK_THROWS_AS((exposed_face(square, Vec{0, 0})), InputError);

  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    Vec a = support::random_vec(rng, 2, 5, 3);
    CHECK(exposed_face(square, a) == exposed_face(square, support::random_positive(rng) * a));
  }
}

TEST_CASE("faces_disjoint") {
  auto square = Polytope::from_vertices(support::sign_vectors(2));
  CHECK(faces_disjoint(exposed_face(square, Vec{1, 0}), exposed_face(square, Vec{-1, 0})));
  CHECK_FALSE(faces_disjoint(exposed_face(square, Vec{1, 0}), exposed_face(square, Vec{1, 1})));
  auto cross = Polytope::from_vertices({Vec{1, 0}, Vec{-1, 0}, Vec{0, 1}, Vec{0, -1}});
  CHECK_FALSE(faces_disjoint(exposed_face(cross, Vec{1, 1}), exposed_face(cross, Vec{1, -1})));
  CHECK_THROWS_AS((faces_disjoint(exposed_face(cross, Vec{1, 1}), exposed_face(square, Vec{1, 0}))), InputError);
}

TEST_CASE("polytope_face_distance") {
  // Faces of the cross-polytope measured in its own (ℓ1) norm.
  auto cross = Polytope::from_vertices({Vec{1, 0}, Vec{-1, 0}, Vec{0, 1}, Vec{0, -1}});
  auto v = exposed_face(cross, Vec{1, 0});
  auto w = exposed_face(cross, Vec{0, -1});
  CHECK(polytope_face_distance(cross, v, w).distance == 2);
  CHECK(polytope_face_distance(cross, v, cross.negate(v)).distance == 2);
  auto e1 = exposed_face(cross, Vec{1, 1});
  auto e2 = exposed_face(cross, Vec{1, -1});
  CHECK(polytope_face_distance(cross, e1, e2).distance == 0);
}

TEST_CASE("face distance is symmetric and vanishes exactly on intersecting faces") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 6; ++trial) {
    auto p = support::random_ball(rng, 2 + static_cast<std::size_t>(trial % 2), 3, 4).ball();
    const auto& faces = p.faces();
    for (std::size_t i = 0; i < faces.size(); i += 2) {
      for (std::size_t j = i; j < faces.size(); j += 3) {
        auto ab = polytope_face_distance(p, faces[i], faces[j]);
        auto ba = polytope_face_distance(p, faces[j], faces[i]);
        CHECK(ab.distance == ba.distance);
        CHECK((ab.distance == 0) == !faces_disjoint(faces[i], faces[j]));
      }
    }
  }
}
