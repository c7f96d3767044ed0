#pragma once

#include <optional>

#include "minkowski/norm.hpp"

namespace minkowski {

/// The angle between the rays through a and b, with vertex at the origin.
struct AngleQuery {
  Vec a;
  Vec b;
};

/// Dual unit vectors a*, b* attaining their norms at a and b, with
/// ||a* + b*||_* <= 1.
struct AbsorbingCertificate {
  Vec a_star;
  Vec b_star;
};

struct AngleReport {
  bool absorbing = false;
  Rat face_distance;  // dual distance between [a]* and -[b]*
  std::optional<AbsorbingCertificate> certificate;
};

/// Decides absorption through the dual ball: the faces [a]* and -[b]* must
/// lie within dual distance 1 (the boundary value 1 counts as absorbing).
AngleReport analyze_angle(const PolytopalNorm& n, const AngleQuery& q);

bool is_absorbing(const PolytopalNorm& n, const AngleQuery& q);
std::optional<AbsorbingCertificate> absorbing_certificate(const PolytopalNorm& n, const AngleQuery& q);

/// Checks every defining property of a certificate for the query.
bool certificate_valid(const PolytopalNorm& n, const AngleQuery& q, const AbsorbingCertificate& c);

struct OracleResult {
  bool absorbing = false;
  Rat optimum;    // min over x of ||x|| + ||x - a|| + ||x - b||
  Vec minimizer;  // an optimal x
};

/// Direct minimization of x -> ||x|| + ||x - a|| + ||x - b|| as one LP; the
/// angle is absorbing iff the minimum equals ||a|| + ||b|| (attained at o).
/// Shares no code with analyze_angle beyond norm evaluation.
OracleResult absorbing_oracle_detail(const PolytopalNorm& n, const AngleQuery& q);
bool absorbing_oracle(const PolytopalNorm& n, const AngleQuery& q);

/// Planar only: the closed cone spanned by inner's legs lies inside outer's.
/// A straight outer angle is read as the closed half-plane on either side,
/// so it contains any inner angle lying weakly on one side of its line.
bool angle_contains(const AngleQuery& outer, const AngleQuery& inner);

}  // namespace minkowski
