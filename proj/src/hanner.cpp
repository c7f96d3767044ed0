#include "minkowski/hanner.hpp"

#include <cctype>
#include <functional>
#include <map>

namespace minkowski {

HannerExpr::HannerExpr(Kind kind, std::shared_ptr<const HannerExpr> l, std::shared_ptr<const HannerExpr> r)
    : kind_(kind), left_(std::move(l)), right_(std::move(r)) {
  dim_ = kind_ == Kind::Line ? 1 : left_->dim() + right_->dim();
}

HannerExpr HannerExpr::line() { return HannerExpr(Kind::Line, nullptr, nullptr); }

HannerExpr HannerExpr::sum1(HannerExpr left, HannerExpr right) {
  return HannerExpr(Kind::Sum1, std::make_shared<const HannerExpr>(std::move(left)),
                    std::make_shared<const HannerExpr>(std::move(right)));
}

HannerExpr HannerExpr::sum_inf(HannerExpr left, HannerExpr right) {
  return HannerExpr(Kind::SumInf, std::make_shared<const HannerExpr>(std::move(left)),
                    std::make_shared<const HannerExpr>(std::move(right)));
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  HannerExpr parse_all() {
    HannerExpr e = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  HannerExpr expr() {
    skip();
    if (peek() == 'R') {
      ++pos_;
      return HannerExpr::line();
    }
    if (peek() != '(') fail("expected 'R' or '('");
    ++pos_;
    HannerExpr left = expr();
    skip();
    bool inf = false;
    if (s_.substr(pos_, 4) == "+inf") {
      inf = true;
      pos_ += 4;
    } else if (s_.substr(pos_, 2) == "+1") {
      pos_ += 2;
    } else {
      fail("expected '+1' or '+inf'");
    }
    HannerExpr right = expr();
    skip();
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    return inf ? HannerExpr::sum_inf(std::move(left), std::move(right))
               : HannerExpr::sum1(std::move(left), std::move(right));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const char* what) const {
    throw InputError(std::string("Hanner expression: ") + what + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

HannerExpr HannerExpr::parse(std::string_view text) { return Parser(text).parse_all(); }

std::string HannerExpr::to_string() const {
  switch (kind_) {
    case Kind::Line: return "R";
    case Kind::Sum1: return "(" + left_->to_string() + " +1 " + right_->to_string() + ")";
    case Kind::SumInf: return "(" + left_->to_string() + " +inf " + right_->to_string() + ")";
  }
  return "?";
}

std::vector<HannerExpr> enumerate_hanner_exprs(int max_dim) {
  std::map<int, std::vector<HannerExpr>> by_dim;
  by_dim[1].push_back(HannerExpr::line());
  for (int d = 2; d <= max_dim; ++d) {
    for (int left = 1; left < d; ++left) {
      for (const auto& l : by_dim[left]) {
        for (const auto& r : by_dim[d - left]) {
          by_dim[d].push_back(HannerExpr::sum1(l, r));
          by_dim[d].push_back(HannerExpr::sum_inf(l, r));
        }
      }
    }
  }
  std::vector<HannerExpr> out;
  for (int d = 1; d <= max_dim; ++d) out.insert(out.end(), by_dim[d].begin(), by_dim[d].end());
  return out;
}

PolytopalNorm line_norm() {
  return PolytopalNorm(Polytope::from_representations({Vec{Rat(1)}, Vec{Rat(-1)}}, {Vec{Rat(1)}, Vec{Rat(-1)}}));
}

namespace {

Vec pad_right(const Vec& x, std::size_t extra) { return concat(x, Vec(extra)); }
Vec pad_left(const Vec& y, std::size_t extra) { return concat(Vec(extra), y); }

}  // namespace

PolytopalNorm l1_sum(const PolytopalNorm& m, const PolytopalNorm& n) {
  const auto dm = static_cast<std::size_t>(m.dim()), dn = static_cast<std::size_t>(n.dim());
  std::vector<Vec> vertices, facets;
  for (const auto& v : m.ball().vertices()) vertices.push_back(pad_right(v, dn));
  for (const auto& w : n.ball().vertices()) vertices.push_back(pad_left(w, dm));
  // The polar of the l1-sum ball is the product of the polars.
  for (const auto& u : m.ball().facets())
    for (const auto& w : n.ball().facets()) facets.push_back(concat(u, w));
  return PolytopalNorm(Polytope::from_representations(std::move(vertices), std::move(facets)));
}

PolytopalNorm linf_sum(const PolytopalNorm& m, const PolytopalNorm& n) {
  const auto dm = static_cast<std::size_t>(m.dim()), dn = static_cast<std::size_t>(n.dim());
  std::vector<Vec> vertices, facets;
  for (const auto& v : m.ball().vertices())
    for (const auto& w : n.ball().vertices()) vertices.push_back(concat(v, w));
  for (const auto& u : m.ball().facets()) facets.push_back(pad_right(u, dn));
  for (const auto& w : n.ball().facets()) facets.push_back(pad_left(w, dm));
  return PolytopalNorm(Polytope::from_representations(std::move(vertices), std::move(facets)));
}

PolytopalNorm build_hanner(const HannerExpr& e) {
  if (e.dim() > kMaxDim) throw SizeLimit("Hanner expression of dimension " + std::to_string(e.dim()) + " exceeds 6");
  switch (e.kind()) {
    case HannerExpr::Kind::Line: return line_norm();
    case HannerExpr::Kind::Sum1: return l1_sum(build_hanner(e.left()), build_hanner(e.right()));
    case HannerExpr::Kind::SumInf: return linf_sum(build_hanner(e.left()), build_hanner(e.right()));
  }
  throw std::logic_error("unknown Hanner node");
}

PolytopalNorm rhombic_dodecahedron(int d) {
  if (d < 2 || d > 5) throw InputError("rhombic_dodecahedron needs 2 <= d <= 5, got " + std::to_string(d));
  const int n = d + 1;
  std::vector<Vec> points;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<Rat> x(n);
    Rat sum = 0;
    for (int i = 0; i < n; ++i) {
      x[i] = (mask >> i & 1) ? 1 : -1;
      sum += x[i];
    }
    const Rat mean = sum / n;
    // Coordinates c_k of x - mean * (1,...,1) in the basis e_i - e_(i+1):
    // c_k = sum_{j <= k} (x_j - mean).
    Vec c(static_cast<std::size_t>(d));
    Rat partial = 0;
    for (int k = 0; k < d; ++k) {
      partial += x[k] - mean;
      c[k] = partial;
    }
    if (!c.is_zero()) points.push_back(std::move(c));
  }
  return PolytopalNorm::from_vertices(points);
}

}  // namespace minkowski
