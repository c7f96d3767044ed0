#include "minkowski/angles.hpp"

#include "minkowski/lp.hpp"

namespace minkowski {

namespace {

void validate(const PolytopalNorm& n, const AngleQuery& q) {
  const auto d = static_cast<std::size_t>(n.dim());
  if (q.a.dim() != d || q.b.dim() != d) throw InputError("angle legs do not match the norm's dimension");
  if (q.a.is_zero() || q.b.is_zero()) throw InputError("angle legs must be nonzero");
}

Rat det2(const Vec& u, const Vec& v) { return u[0] * v[1] - u[1] * v[0]; }

/// Membership of x in the closed cone of a planar angle (legs o1, o2).
bool in_cone(const Vec& o1, const Vec& o2, const Vec& x) {
  Rat d = det2(o1, o2);
  if (d != 0) {
    int s = sign(d);
    return s * sign(det2(o1, x)) >= 0 && s * sign(det2(x, o2)) >= 0;
  }
  if (dot(o1, o2) > 0) {
    // Zero angle: the cone is a single ray.
    return det2(o1, x) == 0 && dot(o1, x) > 0;
  }
  return false;  // straight angles are handled by the caller
}

}  // namespace

AngleReport analyze_angle(const PolytopalNorm& n, const AngleQuery& q) {
  validate(n, q);
  Face fa = dual_vectors(n, q.a);
  Face neg_fb = n.dual_ball().negate(dual_vectors(n, q.b));
  FaceDistance fd = face_distance(n, fa, neg_fb);
  AngleReport report;
  report.face_distance = fd.distance;
  report.absorbing = fd.distance <= 1;
  if (report.absorbing) report.certificate = AbsorbingCertificate{fd.p, -fd.q};
  return report;
}

bool is_absorbing(const PolytopalNorm& n, const AngleQuery& q) { return analyze_angle(n, q).absorbing; }

std::optional<AbsorbingCertificate> absorbing_certificate(const PolytopalNorm& n, const AngleQuery& q) {
  return analyze_angle(n, q).certificate;
}

bool certificate_valid(const PolytopalNorm& n, const AngleQuery& q, const AbsorbingCertificate& c) {
  validate(n, q);
  Vec ua = normalize(n, q.a);
  Vec ub = normalize(n, q.b);
  return dual_norm_eval(n, c.a_star) == 1 && dual_norm_eval(n, c.b_star) == 1 && dot(c.a_star, ua) == 1 &&
         dot(c.b_star, ub) == 1 && dual_norm_eval(n, c.a_star + c.b_star) <= 1;
}

OracleResult absorbing_oracle_detail(const PolytopalNorm& n, const AngleQuery& q) {
  validate(n, q);
  const std::size_t d = static_cast<std::size_t>(n.dim());
  // Variables: x (d coordinates), t0, t1, t2 with t_k >= <u, x - c_k> for
  // every vertex u of the dual ball, c = (o, a, b).
  const std::size_t nv = d + 3;
  LpProblem lp;
  lp.num_vars = nv;
  lp.objective = Vec(nv);
  for (std::size_t k = 0; k < 3; ++k) lp.objective[d + k] = 1;
  const Vec zero(d);
  const Vec* centers[3] = {&zero, &q.a, &q.b};
  for (std::size_t k = 0; k < 3; ++k) {
    for (const auto& u : n.dual_ball().vertices()) {
      Vec row(nv);
      for (std::size_t i = 0; i < d; ++i) row[i] = u[i];
      row[d + k] = -1;
      lp.add_le(std::move(row), dot(u, *centers[k]));
    }
  }
  LpSolution sol = lp_solve(lp);
  if (sol.status != LpStatus::Optimal) throw std::logic_error("absorbing oracle LP did not reach an optimum");
  OracleResult out;
  out.optimum = sol.value;
  out.minimizer = Vec(std::vector<Rat>(sol.point.begin(), sol.point.begin() + static_cast<std::ptrdiff_t>(d)));
  out.absorbing = sol.value == norm_eval(n, q.a) + norm_eval(n, q.b);
  return out;
}

bool absorbing_oracle(const PolytopalNorm& n, const AngleQuery& q) { return absorbing_oracle_detail(n, q).absorbing; }

bool angle_contains(const AngleQuery& outer, const AngleQuery& inner) {
  for (const Vec* v : {&outer.a, &outer.b, &inner.a, &inner.b}) {
    if (v->dim() != 2) throw InputError("angle_contains is defined for planar angles only");
    if (v->is_zero()) throw InputError("angle legs must be nonzero");
  }
  const bool outer_straight = det2(outer.a, outer.b) == 0 && dot(outer.a, outer.b) < 0;
  if (outer_straight) {
    int s1 = sign(det2(outer.a, inner.a));
    int s2 = sign(det2(outer.a, inner.b));
    if (s1 * s2 < 0) return false;
    const int side = s1 != 0 ? s1 : s2;
    if (side == 0) return true;  // both inner legs on the line itself
    // The inner cone must not wrap around through the far side.
    const bool inner_straight = det2(inner.a, inner.b) == 0 && dot(inner.a, inner.b) < 0;
    return !inner_straight;
  }
  const bool inner_straight = det2(inner.a, inner.b) == 0 && dot(inner.a, inner.b) < 0;
  if (inner_straight) return false;
  return in_cone(outer.a, outer.b, inner.a) && in_cone(outer.a, outer.b, inner.b);
}

}  // namespace minkowski
