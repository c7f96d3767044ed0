#include "minkowski/norm.hpp"

#include <string>

namespace minkowski {

namespace {

Rat max_pairing(const std::vector<Vec>& functionals, const Vec& x) {
  Rat best = dot(functionals.front(), x);
  for (std::size_t i = 1; i < functionals.size(); ++i) {
    Rat v = dot(functionals[i], x);
    if (v > best) best = v;
  }
  return best;
}

void require_nonzero(const Vec& x, const char* what) {
  if (x.is_zero()) throw InputError(std::string(what) + " is undefined for the zero vector");
}

}  // namespace

PolytopalNorm dual(const PolytopalNorm& n) { return PolytopalNorm(n.dual_ball(), n.ball()); }

Rat norm_eval(const PolytopalNorm& n, const Vec& x) {
  if (x.dim() != static_cast<std::size_t>(n.dim())) throw InputError("vector dimension does not match the norm");
  return max_pairing(n.dual_ball().vertices(), x);
}

Rat dual_norm_eval(const PolytopalNorm& n, const Vec& x) {
  if (x.dim() != static_cast<std::size_t>(n.dim())) throw InputError("vector dimension does not match the norm");
  return max_pairing(n.ball().vertices(), x);
}

Vec normalize(const PolytopalNorm& n, const Vec& x) {
  require_nonzero(x, "normalize");
  return (1 / norm_eval(n, x)) * x;
}

Face dual_vectors(const PolytopalNorm& n, const Vec& x) {
  require_nonzero(x, "dual_vectors");
  return exposed_face(n.dual_ball(), x);
}

bool is_regular_direction(const PolytopalNorm& n, const Vec& v) {
  return dual_vectors(n, v).dim() == 0;
}

FaceDistance face_distance(const PolytopalNorm& n, const Face& f, const Face& g) {
  return polytope_face_distance(n.dual_ball(), f, g);
}

}  // namespace minkowski
