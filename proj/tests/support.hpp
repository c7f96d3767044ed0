#pragma once

// Generators and brute-force oracles shared by the unit and acceptance tests.
// The oracles deliberately avoid the library's own algorithms (hull, polar,
// dual-vertex norm evaluation) so agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "minkowski/exactgeom.hpp"
#include "minkowski/lp.hpp"
#include "minkowski/norm.hpp"

namespace support {

using minkowski::PolytopalNorm;
using minkowski::Rat;
using minkowski::Vec;

inline PolytopalNorm l1(int d) {
  std::vector<Vec> pts;
  for (int i = 0; i < d; ++i) {
    Vec e(static_cast<std::size_t>(d));
    e[static_cast<std::size_t>(i)] = 1;
    pts.push_back(e);
    pts.push_back(-e);
  }
  return PolytopalNorm::from_vertices(pts);
}

inline std::vector<Vec> sign_vectors(int d) {
  std::vector<Vec> pts;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Vec v(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] = (mask >> i & 1) ? 1 : -1;
    pts.push_back(v);
  }
  return pts;
}

inline PolytopalNorm linf(int d) { return PolytopalNorm::from_vertices(sign_vectors(d)); }

/// Affine regular hexagon with vertices ±(1,0), ±(0,1), ±(1,1).
inline PolytopalNorm hexagon() {
  return PolytopalNorm::from_vertices({Vec{1, 0}, Vec{0, 1}, Vec{1, 1}, Vec{-1, 0}, Vec{0, -1}, Vec{-1, -1}});
}

inline std::vector<Vec> symmetric_closure(const std::vector<Vec>& pts) {
  std::vector<Vec> out = pts;
  for (const auto& p : pts) out.push_back(-p);
  return out;
}

inline Rat random_rat(std::mt19937_64& rng, int range, int max_den = 1) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, max_den);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Vec random_vec(std::mt19937_64& rng, std::size_t d, int range, int max_den = 1, bool nonzero = true) {
  for (;;) {
    Vec v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = random_rat(rng, range, max_den);
    if (!nonzero || !v.is_zero()) return v;
  }
}

inline Rat random_positive(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 5);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

/// Random full-dimensional centrally symmetric ball spanned by a few
/// random rational points and their negatives.
inline PolytopalNorm random_ball(std::mt19937_64& rng, std::size_t d, int points_min, int points_max) {
  std::uniform_int_distribution<int> count(points_min, points_max);
  for (;;) {
    std::vector<Vec> pts;
    const int m = count(rng);
    for (int i = 0; i < m; ++i) pts.push_back(random_vec(rng, d, 6, 2));
    auto all = symmetric_closure(pts);
    if (minkowski::affine_dimension(all) != static_cast<int>(d)) continue;
    return PolytopalNorm::from_vertices(all);
  }
}

inline PolytopalNorm random_polygon(std::mt19937_64& rng) { return random_ball(rng, 2, 2, 5); }

/// Facet normals (rhs 1) of conv(points) by testing every d-subset of points.
/// Requires the origin in the interior.
inline std::vector<Vec> brute_force_facets(const std::vector<Vec>& points) {
  const std::size_t d = points.front().dim();
  const std::size_t m = points.size();
  std::set<Vec> found;
  std::vector<std::size_t> idx(d);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == d) {
      std::vector<Vec> rows;
      for (auto i : idx) rows.push_back(points[i]);
      Vec ones(d);
      for (std::size_t i = 0; i < d; ++i) ones[i] = 1;
      Vec a;
      if (!minkowski::solve_square(rows, ones, a)) return;
      for (const auto& p : points)
        if (minkowski::dot(a, p) > 1) return;
      found.insert(a);
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return {found.begin(), found.end()};
}

/// Points among `points` whose tight facets have full rank.
inline std::vector<Vec> brute_force_vertices(const std::vector<Vec>& points) {
  const auto facets = brute_force_facets(points);
  std::set<Vec> out;
  for (const auto& p : points) {
    std::vector<Vec> tight;
    for (const auto& f : facets)
      if (minkowski::dot(f, p) == 1) tight.push_back(f);
    if (minkowski::rank(tight) == p.dim()) out.insert(p);
  }
  return {out.begin(), out.end()};
}

inline std::vector<Vec> sorted(std::vector<Vec> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// min{λ ≥ 0 : x ∈ λB} as an LP over convex weights of the ball's vertices.
inline Rat norm_by_scaling(const PolytopalNorm& n, const Vec& x) {
  const auto& verts = n.ball().vertices();
  const std::size_t m = verts.size(), d = x.dim();
  minkowski::LpProblem lp;
  lp.num_vars = m;
  lp.objective = Vec(m);
  for (std::size_t j = 0; j < m; ++j) {
    lp.objective[j] = 1;
    Vec row(m);
    row[j] = -1;
    lp.add_le(row, 0);
  }
  for (std::size_t i = 0; i < d; ++i) {
    Vec row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = verts[j][i];
    lp.add_eq(row, x[i]);
  }
  auto sol = minkowski::lp_solve(lp);
  return sol.value;
}

/// Brute-force LP: best objective over all basic feasible solutions.
/// Returns false when no basic feasible solution exists.
inline bool lp_brute_force(const minkowski::LpProblem& p, Rat& best) {
  const std::size_t n = p.num_vars, m = p.constraints.size();
  bool any = false;
  std::vector<std::size_t> idx(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == n) {
      std::vector<Vec> rows;
      Vec rhs(n);
      for (std::size_t k = 0; k < n; ++k) {
        rows.push_back(p.constraints[idx[k]].normal);
        rhs[k] = p.constraints[idx[k]].rhs;
      }
      Vec x;
      if (!minkowski::solve_square(rows, rhs, x)) return;
      for (const auto& c : p.constraints) {
        Rat lhs = minkowski::dot(c.normal, x);
        if (c.relation == minkowski::Relation::Equal ? lhs != c.rhs : lhs > c.rhs) return;
      }
      Rat v = minkowski::dot(p.objective, x);
      if (!any || v < best) best = v;
      any = true;
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return any;
}

using Metric = std::function<Rat(const Vec&)>;

inline Rat mst_length(const Metric& norm, const std::vector<Vec>& pts) {
  const std::size_t n = pts.size();
  if (n < 2) return 0;
  std::vector<bool> in(n, false);
  std::vector<Rat> best(n);
  std::vector<bool> has(n, false);
  in[0] = true;
  for (std::size_t j = 1; j < n; ++j) {
    best[j] = norm(pts[j] - pts[0]);
    has[j] = true;
  }
  Rat total = 0;
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t j = 0; j < n; ++j)
      if (!in[j] && (pick == n || best[j] < best[pick])) pick = j;
    in[pick] = true;
    total += best[pick];
    for (std::size_t j = 0; j < n; ++j) {
      if (in[j]) continue;
      Rat c = norm(pts[j] - pts[pick]);
      if (c < best[j]) best[j] = c;
    }
  }
  return total;
}

inline Rat l1_length(const Vec& v) {
  Rat s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

/// Exact planar rectilinear SMT length: some SMT has all Steiner points on
/// the Hanan grid, so minimizing MST length over grid subsets of size ≤ n−2
/// suffices.
inline Rat rectilinear_smt(const std::vector<Vec>& terminals) {
  std::set<Rat> xs, ys;
  for (const auto& t : terminals) {
    xs.insert(t[0]);
    ys.insert(t[1]);
  }
  std::vector<Vec> grid;
  for (const auto& x : xs)
    for (const auto& y : ys) grid.push_back(Vec{x, y});
  const std::size_t max_extra = terminals.size() >= 2 ? terminals.size() - 2 : 0;
  Rat best = mst_length(l1_length, terminals);
  std::vector<Vec> cur = terminals;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t extra) {
    if (extra > 0) best = std::min(best, mst_length(l1_length, cur));
    if (extra == max_extra) return;
    for (std::size_t i = start; i < grid.size(); ++i) {
      cur.push_back(grid[i]);
      rec(i + 1, extra + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return best;
}

/// ℓ∞ in the plane is ℓ1 after (x, y) ↦ ((x+y)/2, (x−y)/2).
inline Vec linf_to_l1(const Vec& v) { return Vec{(v[0] + v[1]) / 2, (v[0] - v[1]) / 2}; }


}  // namespace support
