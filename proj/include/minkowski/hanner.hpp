#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "minkowski/norm.hpp"

namespace minkowski {

/// Expression tree over the one-dimensional space R with l1- and
/// l-infinity-sums. Text form: `R`, `(E +1 E)`, `(E +inf E)`.
class HannerExpr {
 public:
  enum class Kind { Line, Sum1, SumInf };

  static HannerExpr line();
  static HannerExpr sum1(HannerExpr left, HannerExpr right);
  static HannerExpr sum_inf(HannerExpr left, HannerExpr right);
  /// Throws InputError on malformed text.
  static HannerExpr parse(std::string_view text);

  Kind kind() const { return kind_; }
  const HannerExpr& left() const { return *left_; }
  const HannerExpr& right() const { return *right_; }
  int dim() const { return dim_; }
  std::string to_string() const;

 private:
  HannerExpr(Kind kind, std::shared_ptr<const HannerExpr> l, std::shared_ptr<const HannerExpr> r);
  Kind kind_ = Kind::Line;
  std::shared_ptr<const HannerExpr> left_, right_;
  int dim_ = 1;
};

/// Every expression with at most max_dim leaves, over all binary tree
/// shapes and both sum types, ordered by dimension then text.
std::vector<HannerExpr> enumerate_hanner_exprs(int max_dim);

/// R with the absolute value: ball [-1, 1].
PolytopalNorm line_norm();

/// ||(x, y)|| = ||x||_M + ||y||_N; ball conv(B_M x {o} u {o} x B_N).
PolytopalNorm l1_sum(const PolytopalNorm& m, const PolytopalNorm& n);

/// ||(x, y)|| = max(||x||_M, ||y||_N); ball B_M x B_N.
PolytopalNorm linf_sum(const PolytopalNorm& m, const PolytopalNorm& n);

/// Folds the sums over the tree. Throws SizeLimit above dimension 6.
PolytopalNorm build_hanner(const HannerExpr& e);

/// Ball = image of {-1, 1}^(d+1) under the projection along (1, ..., 1),
/// written in the basis e_i - e_(i+1) of the diagonal's complement.
/// d = 2 gives the hexagon, d = 3 the rhombic dodecahedron. 2 <= d <= 5.
PolytopalNorm rhombic_dodecahedron(int d);

}  // namespace minkowski
