#pragma once

#include <vector>

#include "minkowski/polytope.hpp"

namespace minkowski {

/// A norm whose unit ball is a symmetric polytope, paired with its polar.
/// ||x|| = max over vertices u of the dual ball of <u, x>, and symmetrically
/// for the dual norm. The dual is always derived, never supplied.
class PolytopalNorm {
 public:
  explicit PolytopalNorm(Polytope ball) : ball_(std::move(ball)), dual_(polar_dual(ball_)) {}
  static PolytopalNorm from_vertices(const std::vector<Vec>& points) {
    return PolytopalNorm(Polytope::from_vertices(points));
  }

  int dim() const { return ball_.dim(); }
  const Polytope& ball() const { return ball_; }
  const Polytope& dual_ball() const { return dual_; }

 private:
  PolytopalNorm(Polytope ball, Polytope dual) : ball_(std::move(ball)), dual_(std::move(dual)) {}
  friend PolytopalNorm dual(const PolytopalNorm& n);

  Polytope ball_;
  Polytope dual_;
};

/// The dual normed space (balls exchanged).
PolytopalNorm dual(const PolytopalNorm& n);

Rat norm_eval(const PolytopalNorm& n, const Vec& x);
Rat dual_norm_eval(const PolytopalNorm& n, const Vec& x);

/// x / ||x||; throws InputError for x = o.
Vec normalize(const PolytopalNorm& n, const Vec& x);

/// All dual unit vectors x* with <x*, x> = ||x||: the face [x]* of B*.
Face dual_vectors(const PolytopalNorm& n, const Vec& x);

/// True iff B has a unique supporting hyperplane at x / ||x||.
bool is_regular_direction(const PolytopalNorm& n, const Vec& v);

/// Dual-norm distance between two faces of the dual ball.
FaceDistance face_distance(const PolytopalNorm& n, const Face& f, const Face& g);

}  // namespace minkowski
