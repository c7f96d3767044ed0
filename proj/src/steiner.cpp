#include "minkowski/steiner.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "minkowski/angles.hpp"
#include "minkowski/antipodality.hpp"
#include "minkowski/lp.hpp"
#include "parallel.hpp"

namespace minkowski {

namespace {

std::vector<std::vector<std::size_t>> adjacency(std::size_t slots, const std::vector<Edge>& edges) {
  std::vector<std::vector<std::size_t>> adj(slots);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

void validate_terminals(const PolytopalNorm& n, const std::vector<Vec>& terminals) {
  for (const auto& p : terminals)
    if (p.dim() != static_cast<std::size_t>(n.dim())) throw InputError("terminal dimension does not match the norm");
  std::vector<Vec> sorted = terminals;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("terminals must be distinct");
}

}  // namespace

const char* to_string(CertificateLevel level) {
  switch (level) {
    case CertificateLevel::ExactGlobal: return "ExactGlobal";
    case CertificateLevel::ExactForTopology: return "ExactForTopology";
    case CertificateLevel::Heuristic: return "Heuristic";
  }
  return "?";
}

std::vector<Vec> SteinerTreeResult::positions() const {
  std::vector<Vec> out = terminals;
  out.insert(out.end(), steiner_positions.begin(), steiner_positions.end());
  return out;
}

void validate_topology(const SteinerTopology& t) {
  const std::size_t slots = t.slots();
  if (slots == 0) throw InputError("topology has no slots");
  if (t.edges.size() + 1 != slots) throw InputError("topology is not a tree: wrong edge count");
  for (const auto& [a, b] : t.edges) {
    if (a >= slots || b >= slots) throw InputError("topology edge refers to a missing slot");
    if (a == b) throw InputError("topology has a loop");
  }
  auto adj = adjacency(slots, t.edges);
  std::vector<bool> seen(slots, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != slots) throw InputError("topology is not connected");
  for (std::size_t s = t.terminals; s < slots; ++s)
    if (adj[s].size() < 3) throw InputError("Steiner slot " + std::to_string(s) + " has degree below 3");
}

Rat tree_length(const PolytopalNorm& n, const std::vector<Vec>& positions, const std::vector<Edge>& edges) {
  Rat total = 0;
  for (const auto& [a, b] : edges) {
    if (a >= positions.size() || b >= positions.size()) throw InputError("edge refers to a missing vertex");
    total += norm_eval(n, positions[a] - positions[b]);
  }
  return total;
}

std::vector<SteinerTopology> enumerate_topologies(std::size_t n) {
  if (n < 2 || n > kExactTerminalLimit)
    throw SizeLimit("topology enumeration supports 2 to 7 terminals, got " + std::to_string(n));
  if (n == 2) return {SteinerTopology{2, 0, {{0, 1}}}};

  std::vector<SteinerTopology> out;
  // Steiner slot indices are fixed from the start: n, n+1, ..., 2n-3.
  SteinerTopology base{n, n - 2, {{0, n}, {1, n}, {2, n}}};
  std::function<void(SteinerTopology&, std::size_t)> grow = [&](SteinerTopology& t, std::size_t k) {
    if (k == n) {
      out.push_back(t);
      return;
    }
    const std::size_t s = n + (k - 2);
    const std::size_t count = t.edges.size();
    for (std::size_t e = 0; e < count; ++e) {
      const Edge old = t.edges[e];
      t.edges[e] = {old.first, s};
      t.edges.push_back({s, old.second});
      t.edges.push_back({k, s});
      grow(t, k + 1);
      t.edges.pop_back();
      t.edges.pop_back();
      t.edges[e] = old;
    }
  };
  grow(base, 3);
  return out;
}

SteinerTreeResult optimize_topology(const PolytopalNorm& n, const std::vector<Vec>& terminals,
                                    const SteinerTopology& t) {
  if (t.terminals != terminals.size()) throw InputError("topology terminal count does not match the instance");
  validate_topology(t);
  for (const auto& p : terminals)
    if (p.dim() != static_cast<std::size_t>(n.dim())) throw InputError("terminal dimension does not match the norm");

  const std::size_t d = static_cast<std::size_t>(n.dim());
  const std::size_t nt = t.terminals, m = t.steiner;
  SteinerTreeResult result;
  result.topology = t;
  result.terminals = terminals;
  result.level = CertificateLevel::ExactForTopology;

  std::vector<std::size_t> free_edges;
  for (std::size_t e = 0; e < t.edges.size(); ++e)
    if (t.edges[e].first >= nt || t.edges[e].second >= nt) free_edges.push_back(e);

  if (m > 0) {
    const auto& functionals = n.dual_ball().vertices();
    const std::size_t nv = m * d + free_edges.size();
    LpProblem lp;
    lp.num_vars = nv;
    lp.objective = Vec(nv);
    for (std::size_t k = 0; k < free_edges.size(); ++k) lp.objective[m * d + k] = 1;
    for (std::size_t k = 0; k < free_edges.size(); ++k) {
      const auto [a, b] = t.edges[free_edges[k]];
      for (const auto& u : functionals) {
        // <u, x_a - x_b> - t_k <= 0 with terminal coordinates moved to the rhs.
        Vec row(nv);
        Rat rhs = 0;
        auto place = [&](std::size_t slot, int sgn) {
          if (slot < nt) {
            rhs -= sgn * dot(u, terminals[slot]);
          } else {
            const std::size_t base = (slot - nt) * d;
            for (std::size_t i = 0; i < d; ++i) row[base + i] += sgn * u[i];
          }
        };
        place(a, 1);
        place(b, -1);
        row[m * d + k] = -1;
        lp.add_le(std::move(row), std::move(rhs));
      }
    }
    LpSolution sol = lp_solve(lp);
    if (sol.status != LpStatus::Optimal) throw std::logic_error("Steiner topology LP did not reach an optimum");
    for (std::size_t s = 0; s < m; ++s) {
      Vec x(d);
      for (std::size_t i = 0; i < d; ++i) x[i] = sol.point[s * d + i];
      result.steiner_positions.push_back(std::move(x));
    }
  }
  result.length = tree_length(n, result.positions(), t.edges);
  return result;
}

SteinerTreeResult exact_smt(const Instance& inst, unsigned jobs) {
  const std::size_t nt = inst.terminals.size();
  if (nt == 0) throw InputError("an instance needs at least one terminal");
  if (nt > kExactTerminalLimit)
    throw SizeLimit("exact SMT supports at most 7 terminals, got " + std::to_string(nt));
  validate_terminals(inst.norm, inst.terminals);
  if (nt == 1) {
    SteinerTreeResult r;
    r.topology = SteinerTopology{1, 0, {}};
    r.terminals = inst.terminals;
    r.length = 0;
    r.level = CertificateLevel::ExactGlobal;
    return r;
  }
  const auto topologies = enumerate_topologies(nt);
  std::vector<SteinerTreeResult> results(topologies.size());
  detail::parallel_for(topologies.size(), jobs, [&](std::size_t i) {
    results[i] = optimize_topology(inst.norm, inst.terminals, topologies[i]);
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i)
    if (results[i].length < results[best].length) best = i;
  SteinerTreeResult out = std::move(results[best]);
  out.level = CertificateLevel::ExactGlobal;
  return out;
}

StarVerdict star_is_smt(const PolytopalNorm& n, const Vec& center, const std::vector<Vec>& leaves,
                        bool include_center, unsigned jobs) {
  if (leaves.empty()) throw InputError("a star needs at least one leaf");
  for (const auto& p : leaves)
    if (p == center) throw InputError("star leaves must differ from the center");
  const std::size_t terminals = leaves.size() + (include_center ? 1 : 0);
  if (terminals > kExactTerminalLimit)
    throw SizeLimit("star check needs at most 7 terminals, got " + std::to_string(terminals));
  StarVerdict v;
  v.star_length = 0;
  for (const auto& p : leaves) v.star_length += norm_eval(n, p - center);
  Instance inst{n, leaves};
  if (include_center) inst.terminals.push_back(center);
  v.smt = exact_smt(inst, jobs);
  v.is_smt = v.smt.length == v.star_length;
  return v;
}

SteinerTreeResult star_tree(const Instance& inst, const Vec& center) {
  validate_terminals(inst.norm, inst.terminals);
  SteinerTreeResult r;
  r.terminals = inst.terminals;
  r.level = CertificateLevel::Heuristic;
  const std::size_t nt = inst.terminals.size();
  auto it = std::find(inst.terminals.begin(), inst.terminals.end(), center);
  if (it != inst.terminals.end()) {
    const auto c = static_cast<std::size_t>(it - inst.terminals.begin());
    r.topology = SteinerTopology{nt, 0, {}};
    for (std::size_t i = 0; i < nt; ++i)
      if (i != c) r.topology.edges.push_back({c, i});
  } else {
    r.topology = SteinerTopology{nt, 1, {}};
    for (std::size_t i = 0; i < nt; ++i) r.topology.edges.push_back({i, nt});
    r.steiner_positions.push_back(center);
  }
  r.length = tree_length(inst.norm, r.positions(), r.topology.edges);
  return r;
}

SteinerTreeResult minimum_spanning_tree(const Instance& inst) {
  validate_terminals(inst.norm, inst.terminals);
  const std::size_t nt = inst.terminals.size();
  SteinerTreeResult r;
  r.terminals = inst.terminals;
  r.topology = SteinerTopology{nt, 0, {}};
  r.level = CertificateLevel::Heuristic;
  if (nt == 0) return r;
  std::vector<bool> in_tree(nt, false);
  std::vector<Rat> best(nt);
  std::vector<std::size_t> parent(nt, 0);
  in_tree[0] = true;
  for (std::size_t i = 1; i < nt; ++i) best[i] = norm_eval(inst.norm, inst.terminals[i] - inst.terminals[0]);
  for (std::size_t step = 1; step < nt; ++step) {
    std::size_t pick = nt;
    for (std::size_t i = 0; i < nt; ++i)
      if (!in_tree[i] && (pick == nt || best[i] < best[pick])) pick = i;
    in_tree[pick] = true;
    r.topology.edges.push_back({parent[pick], pick});
    for (std::size_t i = 0; i < nt; ++i) {
      if (in_tree[i]) continue;
      Rat dnew = norm_eval(inst.norm, inst.terminals[i] - inst.terminals[pick]);
      if (dnew < best[i]) {
        best[i] = dnew;
        parent[i] = pick;
      }
    }
  }
  r.length = tree_length(inst.norm, r.positions(), r.topology.edges);
  return r;
}

namespace {

/// Removes Steiner slots of degree <= 2 (never lengthens the tree by the
/// triangle inequality) and renumbers the survivors.
SteinerTopology cleanup(std::size_t nt, std::size_t slots, std::vector<Edge> edges) {
  std::vector<bool> alive(slots, true);
  bool changed = true;
  while (changed) {
    changed = false;
    auto adj = adjacency(slots, edges);
    for (std::size_t s = nt; s < slots; ++s) {
      if (!alive[s] || adj[s].size() >= 3) continue;
      std::vector<Edge> kept;
      for (const auto& e : edges)
        if (e.first != s && e.second != s) kept.push_back(e);
      if (adj[s].size() == 2) kept.push_back({adj[s][0], adj[s][1]});
      edges = std::move(kept);
      alive[s] = false;
      changed = true;
      break;
    }
  }
  std::vector<std::size_t> remap(slots);
  std::size_t next = nt;
  for (std::size_t i = 0; i < slots; ++i) remap[i] = i < nt ? i : (alive[i] ? next++ : slots);
  SteinerTopology t{nt, next - nt, {}};
  for (const auto& [a, b] : edges) t.edges.push_back({remap[a], remap[b]});
  return t;
}

class LocalSearch {
 public:
  LocalSearch(const Instance& inst, const ImproveOptions& opt) : inst_(inst), rng_(opt.seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  std::optional<SteinerTopology> propose(const SteinerTreeResult& cur) {
    const auto& t = cur.topology;
    const double r = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
    std::vector<Edge> edges = t.edges;
    std::size_t slots = t.slots();
    if (r < 0.6) {
      if (!regraft(edges, slots)) return std::nullopt;
    } else if (r < 0.85) {
      if (!insert_steiner(cur, edges, slots)) return std::nullopt;
    } else {
      if (!contract(edges, slots, t.terminals)) return std::nullopt;
    }
    return cleanup(t.terminals, slots, std::move(edges));
  }

 private:
  bool regraft(std::vector<Edge>& edges, std::size_t slots) {
    if (edges.empty()) return false;
    const std::size_t e = below(edges.size());
    const auto [x, y] = edges[e];
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
    const std::size_t moved = below(2) == 0 ? x : y;
    const std::size_t partner = moved == x ? y : x;
    auto adj = adjacency(slots, edges);
    std::vector<bool> side(slots, false);
    std::vector<std::size_t> stack{moved};
    side[moved] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : adj[v])
        if (!side[w]) {
          side[w] = true;
          stack.push_back(w);
        }
    }
    std::vector<std::size_t> targets;
    for (std::size_t v = 0; v < slots; ++v)
      if (!side[v] && v != partner) targets.push_back(v);
    if (targets.empty()) return false;
    edges.push_back({moved, targets[below(targets.size())]});
    return true;
  }

  bool insert_steiner(const SteinerTreeResult& cur, std::vector<Edge>& edges, std::size_t& slots) {
    auto adj = adjacency(slots, edges);
    std::vector<std::size_t> candidates;
    for (std::size_t v = 0; v < slots; ++v)
      if (adj[v].size() >= 2) candidates.push_back(v);
    if (candidates.empty()) return false;
    const std::size_t v = candidates[below(candidates.size())];
    const auto pos = cur.positions();
    std::size_t x = 0, y = 0;
    bool found = false;
    for (int attempt = 0; attempt < 6; ++attempt) {
      const std::size_t i = below(adj[v].size());
      std::size_t j = below(adj[v].size() - 1);
      if (j >= i) ++j;
      x = adj[v][i];
      y = adj[v][j];
      Vec lx = pos[x] - pos[v], ly = pos[y] - pos[v];
      if (lx.is_zero() || ly.is_zero()) continue;
      if (!is_absorbing(inst_.norm, {lx, ly})) {
        found = true;
        break;
      }
    }
    (void)found;  // a random pair is used when every sampled angle absorbs
    const std::size_t s = slots++;
    std::erase_if(edges, [&](const Edge& e) {
      return (e.first == v && (e.second == x || e.second == y)) || (e.second == v && (e.first == x || e.first == y));
    });
    edges.push_back({v, s});
    edges.push_back({s, x});
    edges.push_back({s, y});
    return true;
  }

  bool contract(std::vector<Edge>& edges, std::size_t slots, std::size_t nt) {
    if (slots == nt) return false;
    auto adj = adjacency(slots, edges);
    const std::size_t s = nt + below(slots - nt);
    if (adj[s].empty()) return false;
    const std::size_t into = adj[s][below(adj[s].size())];
    std::vector<Edge> out;
    for (const auto& [a, b] : edges) {
      if ((a == s && b == into) || (a == into && b == s)) continue;
      out.push_back({a == s ? into : a, b == s ? into : b});
    }
    edges = std::move(out);
    return true;
  }

  const Instance& inst_;
  std::mt19937_64 rng_;
};

}  // namespace

SteinerTreeResult improve_tree(const Instance& inst, const SteinerTreeResult& seed, const ImproveOptions& options) {
  validate_terminals(inst.norm, inst.terminals);
  if (seed.terminals != inst.terminals) throw InputError("seed tree terminals do not match the instance");
  SteinerTreeResult best = seed;
  best.length = tree_length(inst.norm, seed.positions(), seed.topology.edges);
  best.level = CertificateLevel::Heuristic;
  if (inst.terminals.size() <= 2) return best;

  SteinerTreeResult current = best;
  SteinerTopology seed_topology = cleanup(seed.topology.terminals, seed.topology.slots(), seed.topology.edges);
  if (seed_topology.steiner > 0) {
    SteinerTreeResult opt = optimize_topology(inst.norm, inst.terminals, seed_topology);
    if (opt.length <= current.length) current = std::move(opt);
  }
  if (current.length < best.length) best = current;

  LocalSearch search(inst, options);
  for (std::size_t it = 0; it < options.iterations; ++it) {
    auto proposal = search.propose(current);
    if (!proposal) continue;
    SteinerTreeResult cand = optimize_topology(inst.norm, inst.terminals, *proposal);
    if (cand.length <= current.length) {
      current = std::move(cand);
      if (current.length < best.length) best = current;
    }
  }
  best.level = CertificateLevel::Heuristic;
  return best;
}

ChainReport verify_theorem_chain(const PolytopalNorm& n, const std::vector<Vec>& unit_vectors, unsigned jobs,
                                 std::optional<bool> steiner_antipodal) {
  if (unit_vectors.empty()) throw InputError("the chain check needs at least one vector");
  if (unit_vectors.size() > 6) throw SizeLimit("the chain check supports at most 6 vectors");
  for (const auto& p : unit_vectors) {
    if (p.dim() != static_cast<std::size_t>(n.dim())) throw InputError("vector dimension does not match the norm");
    if (norm_eval(n, p) != 1) throw InputError("vector " + to_string(p) + " is not a unit vector");
  }
  validate_terminals(n, unit_vectors);

  ChainReport r;
  r.steiner_antipodal = steiner_antipodal ? *steiner_antipodal : is_steiner_antipodal(n, jobs).steiner_antipodal;
  const std::size_t k = unit_vectors.size();
  r.star_length = Rat(static_cast<long>(k));
  if (k == 1) {
    r.all_absorbing = r.all_distances_two = r.star_smt_of_leaves = r.star_smt_with_origin = true;
    r.smt_leaves_length = 0;
    r.smt_with_origin_length = 1;
  } else {
    r.all_absorbing = true;
    r.all_distances_two = true;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (r.all_absorbing && !is_absorbing(n, {unit_vectors[i], unit_vectors[j]})) r.all_absorbing = false;
        if (norm_eval(n, unit_vectors[i] - unit_vectors[j]) != 2) r.all_distances_two = false;
      }
    }
    const Vec origin(static_cast<std::size_t>(n.dim()));
    StarVerdict leaves = star_is_smt(n, origin, unit_vectors, false, jobs);
    StarVerdict with_origin = star_is_smt(n, origin, unit_vectors, true, jobs);
    r.star_smt_of_leaves = leaves.is_smt;
    r.star_smt_with_origin = with_origin.is_smt;
    r.smt_leaves_length = leaves.smt.length;
    r.smt_with_origin_length = with_origin.smt.length;
  }
  auto implies = [](bool a, bool b) { return !a || b; };
  r.implications_hold = implies(r.all_distances_two, r.star_smt_of_leaves) &&
                        implies(r.star_smt_of_leaves, r.star_smt_with_origin) &&
                        implies(r.star_smt_with_origin, r.all_absorbing);
  r.equivalence_holds = r.all_absorbing == r.all_distances_two && r.all_distances_two == r.star_smt_of_leaves &&
                        r.star_smt_of_leaves == r.star_smt_with_origin;
  r.ok = r.implications_hold && (!r.steiner_antipodal || r.equivalence_holds);
  return r;
}

PlaneReport verify_plane_theorem(const PolytopalNorm& n, const std::vector<Vec>& points, unsigned jobs) {
  if (n.dim() != 2) throw InputError("the plane check needs a two-dimensional norm");
  if (points.empty()) throw InputError("the plane check needs at least one point");
  for (const auto& p : points) {
    if (p.dim() != 2) throw InputError("points must be two-dimensional");
    if (p.is_zero()) throw InputError("points must differ from the origin");
  }
  PlaneReport r;
  r.all_absorbing = true;
  for (std::size_t i = 0; i < points.size() && r.all_absorbing; ++i)
    for (std::size_t j = i + 1; j < points.size() && r.all_absorbing; ++j)
      r.all_absorbing = is_absorbing(n, {points[i], points[j]});
  StarVerdict v = star_is_smt(n, Vec(2), points, true, jobs);
  r.star_is_smt = v.is_smt;
  r.star_length = v.star_length;
  r.smt_length = v.smt.length;
  r.agree = r.all_absorbing == r.star_is_smt;
  return r;
}

}  // namespace minkowski
