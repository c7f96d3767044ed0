#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "minkowski/exactgeom.hpp"

namespace minkowski {

inline constexpr int kMaxDim = 6;

namespace detail {
struct PolytopeData;
}

class Polytope;
class Face;
Face exposed_face(const Polytope& p, const Vec& a);

/// A nonempty face of a polytope, identified by the sorted indices of its
/// vertices. `functional()` is tight (== 1) exactly on those vertices and
/// < 1 on every other vertex.
class Face {
 public:
  const std::vector<std::size_t>& vertex_indices() const { return vertices_; }
  const Vec& functional() const { return functional_; }
  int dim() const { return dim_; }
  std::uint64_t owner() const { return owner_; }
  bool contains(std::size_t vertex) const;

  /// Faces compare by owner and vertex set; the functional is one of many.
  friend bool operator==(const Face& a, const Face& b) { return a.owner_ == b.owner_ && a.vertices_ == b.vertices_; }

 private:
  friend class Polytope;
  friend struct detail::PolytopeData;
  friend Face exposed_face(const Polytope& p, const Vec& a);
  std::uint64_t owner_ = 0;
  std::vector<std::size_t> vertices_;
  Vec functional_;
  int dim_ = 0;
};

/// Centrally symmetric polytope containing the origin in its interior, with
/// synchronized V- and H-representations. Facets are stored as normals u
/// of the halfspaces <u, x> <= 1. Immutable; copies share storage.
class Polytope {
 public:
  /// Convex hull of a symmetric, full-dimensional point set.
  /// Throws NotSymmetric, DegenerateBall, or SizeLimit (dimension > 6).
  static Polytope from_vertices(const std::vector<Vec>& points);

  /// Builds from both representations at once, after checking that they
  /// describe the same symmetric polytope.
  static Polytope from_representations(std::vector<Vec> vertices, std::vector<Vec> facets);

  int dim() const;
  const std::vector<Vec>& vertices() const;
  const std::vector<Vec>& facets() const;
  /// Index of -v for vertex index v.
  std::size_t antipode(std::size_t vertex) const;
  /// Vertex indices tight on each facet.
  const std::vector<std::vector<std::size_t>>& facet_vertices() const;

  /// All nonempty proper faces, sorted by (dim, vertex indices).
  const std::vector<Face>& faces() const;
  std::vector<const Face*> faces_of_dim(int d) const;
  /// Lattice face with exactly these vertices, or nullptr.
  const Face* find_face(const std::vector<std::size_t>& vertex_indices) const;

  std::vector<Vec> points(const Face& f) const;
  /// The face -F (central symmetry).
  Face negate(const Face& f) const;
  bool owns(const Face& f) const;

  std::uint64_t id() const;

  /// Same vertex set (both are stored in canonical order).
  friend bool operator==(const Polytope& a, const Polytope& b) { return a.vertices() == b.vertices(); }

 private:
  explicit Polytope(std::shared_ptr<const detail::PolytopeData> d) : data_(std::move(d)) {}
  friend Polytope polar_dual(const Polytope& p);
  std::shared_ptr<const detail::PolytopeData> data_;
};

/// {x : <x, v> <= 1 for all v in P}; swaps the two representations.
Polytope polar_dual(const Polytope& p);

/// Alias kept for symmetry with the other face operations.
inline const std::vector<Face>& face_lattice(const Polytope& p) { return p.faces(); }

/// Face on which x -> <a, x> is maximal; its functional is a / max.
/// Throws InputError for a = o.
Face exposed_face(const Polytope& p, const Vec& a);

/// True iff the faces share no vertex. Throws InputError if the faces come
/// from different polytopes.
bool faces_disjoint(const Face& f, const Face& g);

struct FaceDistance {
  Rat distance;
  Vec p;  // point of F
  Vec q;  // point of G with ||p - q|| == distance
};

/// min ||p - q|| over p in F, q in G, measured in the norm whose unit ball
/// is `ball` itself (evaluated via its facet normals). Exact, via one LP
/// over convex-combination weights of the two vertex sets.
FaceDistance polytope_face_distance(const Polytope& ball, const Face& f, const Face& g);

}  // namespace minkowski
