#include "minkowski/polytope.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <string>

#include "minkowski/lp.hpp"

namespace minkowski {

namespace detail {

struct PolytopeData {
  std::uint64_t id = 0;
  int dim = 0;
  std::vector<Vec> vertices;
  std::vector<Vec> facets;
  std::vector<std::size_t> antipode;
  std::vector<std::vector<std::size_t>> facet_vertices;
  std::vector<Face> faces;
  std::map<std::vector<std::size_t>, std::size_t> face_index;

  void build_lattice();
};

}  // namespace detail

namespace {

std::atomic<std::uint64_t> g_next_id{1};

using IndexSet = std::vector<std::size_t>;

IndexSet intersect(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool includes(const IndexSet& big, const IndexSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void scale_to_unit_leading(Vec& v) {
  for (const auto& c : v) {
    if (c != 0) {
      Rat s = 1 / abs(c);
      v *= s;
      return;
    }
  }
}

/// Double description (Motzkin) on the homogenized cone
///   { (u, t) : t - <p, u> >= 0 for every point p },
/// whose extreme rays with t = 1 are the facet normals of conv(points).
std::vector<Vec> hull_facets(const std::vector<Vec>& points, int d) {
  const std::size_t D = static_cast<std::size_t>(d) + 1;
  std::vector<Vec> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    Vec r(D);
    for (int i = 0; i < d; ++i) r[i] = -p[i];
    r[d] = 1;
    rows.push_back(std::move(r));
  }

  // Greedy choice of D linearly independent rows for the initial simplicial cone.
  std::vector<std::size_t> initial;
  std::vector<Vec> chosen;
  for (std::size_t i = 0; i < rows.size() && initial.size() < D; ++i) {
    chosen.push_back(rows[i]);
    if (rank(chosen) == chosen.size()) {
      initial.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  if (initial.size() < D) throw DegenerateBall("points do not span the space");

  struct Ray {
    Vec v;
    IndexSet zeros;  // processed rows on which the ray is tight, sorted
  };
  std::vector<Ray> rays;
  for (std::size_t i = 0; i < D; ++i) {
    Vec e(D);
    e[i] = 1;
    Vec r;
    if (!solve_square(chosen, e, r)) throw DegenerateBall("points do not span the space");
    scale_to_unit_leading(r);
    IndexSet z;
    for (std::size_t j = 0; j < D; ++j)
      if (j != i) z.push_back(initial[j]);
    std::sort(z.begin(), z.end());
    rays.push_back({std::move(r), std::move(z)});
  }

  std::vector<bool> done(rows.size(), false);
  for (auto i : initial) done[i] = true;

  for (std::size_t row = 0; row < rows.size(); ++row) {
    if (done[row]) continue;
    done[row] = true;
    std::vector<Rat> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = dot(rows[row], rays[k].v);
      if (val[k] > 0) pos.push_back(k);
      if (val[k] < 0) neg.push_back(k);
    }
    if (neg.empty()) {
      for (std::size_t k = 0; k < rays.size(); ++k)
        if (val[k] == 0) rays[k].zeros.insert(std::upper_bound(rays[k].zeros.begin(), rays[k].zeros.end(), row), row);
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (val[k] < 0) continue;
      Ray r = rays[k];
      if (val[k] == 0) r.zeros.insert(std::upper_bound(r.zeros.begin(), r.zeros.end(), row), row);
      next.push_back(std::move(r));
    }
    for (auto ip : pos) {
      for (auto in : neg) {
        IndexSet common = intersect(rays[ip].zeros, rays[in].zeros);
        if (common.size() + 2 < D) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == ip || k == in) continue;
          if (includes(rays[k].zeros, common)) adjacent = false;
        }
        if (!adjacent) continue;
        Vec v = val[ip] * rays[in].v - val[in] * rays[ip].v;
        scale_to_unit_leading(v);
        common.insert(std::upper_bound(common.begin(), common.end(), row), row);
        next.push_back({std::move(v), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  std::vector<Vec> facets;
  for (const auto& r : rays) {
    const Rat& t = r.v[d];
    if (t <= 0) throw DegenerateBall("origin is not an interior point of the hull");
    Vec u(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) u[i] = r.v[i] / t;
    facets.push_back(std::move(u));
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return facets;
}

std::vector<std::size_t> antipode_map(const std::vector<Vec>& sorted_vertices) {
  std::vector<std::size_t> out(sorted_vertices.size());
  for (std::size_t i = 0; i < sorted_vertices.size(); ++i) {
    Vec neg = -sorted_vertices[i];
    auto it = std::lower_bound(sorted_vertices.begin(), sorted_vertices.end(), neg);
    if (it == sorted_vertices.end() || !(*it == neg))
      throw NotSymmetric("vertex " + to_string(sorted_vertices[i]) + " has no antipode");
    out[i] = static_cast<std::size_t>(it - sorted_vertices.begin());
  }
  return out;
}

void check_dim(int d) {
  if (d < 1) throw InputError("polytope dimension must be at least 1");
  if (d > kMaxDim) throw SizeLimit("polytope dimension " + std::to_string(d) + " exceeds the cap of 6");
}

std::shared_ptr<detail::PolytopeData> make_data(int d, std::vector<Vec> vertices, std::vector<Vec> facets) {
  auto data = std::make_shared<detail::PolytopeData>();
  data->id = g_next_id.fetch_add(1);
  data->dim = d;
  std::sort(vertices.begin(), vertices.end());
  std::sort(facets.begin(), facets.end());
  data->vertices = std::move(vertices);
  data->facets = std::move(facets);
  data->antipode = antipode_map(data->vertices);
  for (const auto& u : data->facets) {
    IndexSet tight;
    for (std::size_t i = 0; i < data->vertices.size(); ++i) {
      Rat v = dot(u, data->vertices[i]);
      if (v > 1) throw DegenerateBall("vertex " + to_string(data->vertices[i]) + " violates facet " + to_string(u));
      if (v == 1) tight.push_back(i);
    }
    data->facet_vertices.push_back(std::move(tight));
  }
  data->build_lattice();
  return data;
}

}  // namespace

void detail::PolytopeData::build_lattice() {
  std::set<IndexSet> seen;
  std::vector<IndexSet> queue;
  for (const auto& fv : facet_vertices) {
    if (seen.insert(fv).second) queue.push_back(fv);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& fv : facet_vertices) {
      IndexSet meet = intersect(queue[head], fv);
      if (meet.empty()) continue;
      if (seen.insert(meet).second) queue.push_back(std::move(meet));
    }
  }
  for (const auto& set : queue) {
    Face f;
    f.owner_ = id;
    f.vertices_ = set;
    std::vector<Vec> pts;
    for (auto i : set) pts.push_back(vertices[i]);
    f.dim_ = affine_dimension(pts);
    Vec sum(static_cast<std::size_t>(dim));
    int count = 0;
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (includes(facet_vertices[j], set)) {
        sum += facets[j];
        ++count;
      }
    }
    f.functional_ = Rat(1, count) * sum;
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.vertex_indices() < b.vertex_indices();
  });
  for (std::size_t i = 0; i < faces.size(); ++i) face_index.emplace(faces[i].vertex_indices(), i);
}

bool Face::contains(std::size_t vertex) const { return std::binary_search(vertices_.begin(), vertices_.end(), vertex); }

Polytope Polytope::from_vertices(const std::vector<Vec>& input) {
  if (input.empty()) throw DegenerateBall("empty point set");
  const int d = static_cast<int>(input.front().dim());
  check_dim(d);
  std::vector<Vec> pts;
  for (const auto& p : input) {
    if (static_cast<int>(p.dim()) != d) throw InputError("points have inconsistent dimensions");
    if (!p.is_zero()) pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (const auto& p : pts) {
    if (!std::binary_search(pts.begin(), pts.end(), -p))
      throw NotSymmetric("point " + to_string(p) + " has no antipode in the input");
  }
  if (rank(pts) < static_cast<std::size_t>(d)) throw DegenerateBall("points are not full-dimensional");

  std::vector<Vec> facets = hull_facets(pts, d);
  std::vector<Vec> vertices;
  for (const auto& p : pts) {
    std::vector<Vec> tight;
    for (const auto& u : facets)
      if (dot(u, p) == 1) tight.push_back(u);
    if (rank(tight) == static_cast<std::size_t>(d)) vertices.push_back(p);
  }
  return Polytope(make_data(d, std::move(vertices), std::move(facets)));
}

Polytope Polytope::from_representations(std::vector<Vec> vertices, std::vector<Vec> facets) {
  if (vertices.empty() || facets.empty()) throw DegenerateBall("empty representation");
  const int d = static_cast<int>(vertices.front().dim());
  check_dim(d);
  for (const auto& v : vertices)
    if (static_cast<int>(v.dim()) != d) throw InputError("vertices have inconsistent dimensions");
  for (const auto& u : facets)
    if (static_cast<int>(u.dim()) != d) throw InputError("facets have inconsistent dimensions");
  auto data = make_data(d, std::move(vertices), std::move(facets));
  for (std::size_t j = 0; j < data->facets.size(); ++j) {
    std::vector<Vec> pts;
    for (auto i : data->facet_vertices[j]) pts.push_back(data->vertices[i]);
    if (affine_dimension(pts) != d - 1)
      throw DegenerateBall("facet " + to_string(data->facets[j]) + " is not tight on a (d-1)-dimensional vertex set");
  }
  for (std::size_t i = 0; i < data->vertices.size(); ++i) {
    std::vector<Vec> tight;
    for (std::size_t j = 0; j < data->facets.size(); ++j)
      if (std::binary_search(data->facet_vertices[j].begin(), data->facet_vertices[j].end(), i))
        tight.push_back(data->facets[j]);
    if (rank(tight) != static_cast<std::size_t>(d))
      throw DegenerateBall("point " + to_string(data->vertices[i]) + " is not a vertex");
  }
  return Polytope(std::move(data));
}

int Polytope::dim() const { return data_->dim; }
const std::vector<Vec>& Polytope::vertices() const { return data_->vertices; }
const std::vector<Vec>& Polytope::facets() const { return data_->facets; }
std::size_t Polytope::antipode(std::size_t vertex) const { return data_->antipode.at(vertex); }
const std::vector<std::vector<std::size_t>>& Polytope::facet_vertices() const { return data_->facet_vertices; }
const std::vector<Face>& Polytope::faces() const { return data_->faces; }
std::uint64_t Polytope::id() const { return data_->id; }
bool Polytope::owns(const Face& f) const { return f.owner() == data_->id; }

std::vector<const Face*> Polytope::faces_of_dim(int d) const {
  std::vector<const Face*> out;
  for (const auto& f : data_->faces)
    if (f.dim() == d) out.push_back(&f);
  return out;
}

const Face* Polytope::find_face(const std::vector<std::size_t>& vertex_indices) const {
  auto it = data_->face_index.find(vertex_indices);
  return it == data_->face_index.end() ? nullptr : &data_->faces[it->second];
}

std::vector<Vec> Polytope::points(const Face& f) const {
  if (!owns(f)) throw InputError("face belongs to a different polytope");
  std::vector<Vec> out;
  for (auto i : f.vertex_indices()) out.push_back(data_->vertices[i]);
  return out;
}

Face Polytope::negate(const Face& f) const {
  if (!owns(f)) throw InputError("face belongs to a different polytope");
  IndexSet idx;
  for (auto i : f.vertex_indices()) idx.push_back(data_->antipode[i]);
  std::sort(idx.begin(), idx.end());
  const Face* lattice_face = find_face(idx);
  if (lattice_face == nullptr) throw std::logic_error("negated face missing from the lattice");
  Face out = *lattice_face;
  out.functional_ = -f.functional();
  return out;
}

Polytope polar_dual(const Polytope& p) {
  return Polytope(make_data(p.dim(), p.facets(), p.vertices()));
}

Face exposed_face(const Polytope& p, const Vec& a) {
  if (a.dim() != static_cast<std::size_t>(p.dim())) throw InputError("functional has the wrong dimension");
  if (a.is_zero()) throw InputError("exposed_face needs a nonzero functional");
  Rat best;
  IndexSet idx;
  const auto& vs = p.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Rat v = dot(a, vs[i]);
    if (idx.empty() || v > best) {
      best = v;
      idx.assign(1, i);
    } else if (v == best) {
      idx.push_back(i);
    }
  }
  const Face* f = p.find_face(idx);
  if (f == nullptr) throw std::logic_error("exposed vertex set missing from the lattice");
  Face out = *f;
  out.functional_ = (1 / best) * a;
  return out;
}

bool faces_disjoint(const Face& f, const Face& g) {
  if (f.owner() != g.owner()) throw InputError("faces belong to different polytopes");
  const auto& a = f.vertex_indices();
  const auto& b = g.vertex_indices();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) ++i; else ++j;
  }
  return true;
}

FaceDistance polytope_face_distance(const Polytope& ball, const Face& f, const Face& g) {
  if (!ball.owns(f) || !ball.owns(g)) throw InputError("faces do not belong to the stated ball");
  const auto fp = ball.points(f);
  const auto gp = ball.points(g);
  const std::size_t d = static_cast<std::size_t>(ball.dim());
  if (!faces_disjoint(f, g)) {
    for (auto i : f.vertex_indices()) {
      if (g.contains(i)) return {Rat(0), ball.vertices()[i], ball.vertices()[i]};
    }
  }
  auto norm_of = [&](const Vec& z) {
    Rat m = dot(ball.facets().front(), z);
    for (const auto& u : ball.facets()) m = std::max(m, dot(u, z));
    return m;
  };
  if (fp.size() == 1 && gp.size() == 1) return {norm_of(fp[0] - gp[0]), fp[0], gp[0]};

  // Variables: lambda (|F|), mu (|G|), t.
  const std::size_t nf = fp.size(), ng = gp.size(), nv = nf + ng + 1;
  LpProblem lp;
  lp.num_vars = nv;
  lp.objective = Vec(nv);
  lp.objective[nv - 1] = 1;
  Vec sum_f(nv), sum_g(nv);
  for (std::size_t i = 0; i < nf; ++i) {
    Vec c(nv);
    c[i] = -1;
    lp.add_le(std::move(c), 0);
    sum_f[i] = 1;
  }
  for (std::size_t j = 0; j < ng; ++j) {
    Vec c(nv);
    c[nf + j] = -1;
    lp.add_le(std::move(c), 0);
    sum_g[nf + j] = 1;
  }
  lp.add_eq(std::move(sum_f), 1);
  lp.add_eq(std::move(sum_g), 1);
  for (const auto& u : ball.facets()) {
    Vec c(nv);
    for (std::size_t i = 0; i < nf; ++i) c[i] = dot(u, fp[i]);
    for (std::size_t j = 0; j < ng; ++j) c[nf + j] = -dot(u, gp[j]);
    c[nv - 1] = -1;
    lp.add_le(std::move(c), 0);
  }
  LpSolution sol = lp_solve(lp);
  if (sol.status != LpStatus::Optimal) throw std::logic_error("face distance LP did not reach an optimum");
  Vec p(d), q(d);
  for (std::size_t i = 0; i < nf; ++i) p += sol.point[i] * fp[i];
  for (std::size_t j = 0; j < ng; ++j) q += sol.point[nf + j] * gp[j];
  return {sol.value, std::move(p), std::move(q)};
}

}  // namespace minkowski
