#pragma once

#include <cstddef>
#include <optional>

#include "minkowski/angles.hpp"

namespace minkowski {

/// ||a/||a|| - b/||b|| || == 2, exactly.
bool is_antipodal(const PolytopalNorm& n, const Vec& a, const Vec& b);

/// Two disjoint faces of the dual ball at dual distance <= 1, together with
/// unit directions a, b exposing them ([a]* = faceA, -[b]* = faceB). The
/// angle aob is then absorbing but not antipodal.
struct FacePairWitness {
  Face face_a;
  Face face_b;
  Rat distance;
  Vec a;
  Vec b;
};

struct SteinerAntipodalReport {
  bool steiner_antipodal = true;
  std::optional<FacePairWitness> witness;
  std::size_t disjoint_pairs = 0;  // unordered disjoint face pairs of B*
  std::size_t pairs_measured = 0;  // pairs whose distance was computed
};

/// Scans disjoint face pairs of the dual ball for one at dual distance <= 1.
/// Distances only shrink as faces grow, so a pair is measured only when
/// neither face can be enlarged while staying disjoint from the other.
/// The witness is the first failing pair in lexicographic lattice order.
SteinerAntipodalReport is_steiner_antipodal(const PolytopalNorm& n, unsigned jobs = 1);

struct ClWitness {
  std::size_t facet;   // index into ball().facets()
  std::size_t vertex;  // vertex of B in neither the facet nor its opposite
};

struct ClReport {
  bool cl_space = true;
  std::optional<ClWitness> witness;
};

/// B = conv(F u -F) for every facet F, decided by exact vertex tightness.
ClReport is_cl_space(const PolytopalNorm& n);

}  // namespace minkowski
