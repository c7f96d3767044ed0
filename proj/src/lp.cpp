#include "minkowski/lp.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace minkowski {

namespace {

thread_local std::size_t g_pivots = 0;

/// Dense simplex tableau for  min <cost, y>,  M y = h,  y >= 0,  h >= 0.
/// Columns: [0, k) structural, [k, k + rows) artificial, last column rhs.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t structural)
      : rows_(rows), k_(structural), width_(structural + rows + 1), cells_(rows * width_), obj_(width_),
        basis_(rows) {
    for (std::size_t i = 0; i < rows_; ++i) {
      at(i, k_ + i) = 1;
      basis_[i] = k_ + i;
    }
  }

  Rat& at(std::size_t r, std::size_t c) { return cells_[r * width_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return cells_[r * width_ + c]; }
  Rat& rhs(std::size_t r) { return at(r, width_ - 1); }
  std::size_t rows() const { return rows_; }
  std::size_t structural() const { return k_; }
  bool is_artificial(std::size_t col) const { return col >= k_ && col < k_ + rows_; }
  std::size_t basic(std::size_t r) const { return basis_[r]; }
  Rat& reduced_cost(std::size_t c) { return obj_[c]; }

  /// Sets the objective row from a cost vector over all non-rhs columns.
  void set_costs(const std::vector<Rat>& cost) {
    for (std::size_t c = 0; c < width_; ++c) obj_[c] = c + 1 < width_ ? cost[c] : Rat(0);
    mpq_class tmp;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rat& cb = cost[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t c = 0; c < width_; ++c) {
        const Rat& v = at(r, c);
        if (v == 0) continue;
        mpq_mul(tmp.get_mpq_t(), cb.get_mpq_t(), v.get_mpq_t());
        mpq_sub(obj_[c].get_mpq_t(), obj_[c].get_mpq_t(), tmp.get_mpq_t());
      }
    }
  }

  /// Current objective value (the rhs entry of the objective row holds its negation).
  Rat objective_value() const { return -obj_[width_ - 1]; }

  void pivot(std::size_t r, std::size_t c) {
    ++g_pivots;
    const Rat piv = at(r, c);
    nz_.clear();
    for (std::size_t j = 0; j < width_; ++j) {
      Rat& v = at(r, j);
      if (v == 0) continue;
      mpq_div(v.get_mpq_t(), v.get_mpq_t(), piv.get_mpq_t());
      nz_.push_back(j);
    }
    mpq_class f, tmp;
    auto eliminate = [&](Rat* row) {
      if (row[c] == 0) return;
      f = row[c];
      for (std::size_t j : nz_) {
        mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), cells_[r * width_ + j].get_mpq_t());
        mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), tmp.get_mpq_t());
      }
    };
    for (std::size_t i = 0; i < rows_; ++i)
      if (i != r) eliminate(&cells_[i * width_]);
    eliminate(obj_.data());
    basis_[r] = c;
  }

  enum class Outcome { Optimal, Unbounded };

  /// Bland's rule: lowest-index improving column; ratio ties go to the
  /// lowest-index basic variable.
  Outcome run(bool allow_artificial_entry) {
    while (true) {
      std::size_t enter = width_;
      const std::size_t limit = allow_artificial_entry ? k_ + rows_ : k_;
      for (std::size_t c = 0; c < limit; ++c) {
        if (obj_[c] < 0) {
          enter = c;
          break;
        }
      }
      if (enter == width_) return Outcome::Optimal;
      std::size_t leave = rows_;
      Rat best;
      Rat ratio;
      for (std::size_t r = 0; r < rows_; ++r) {
        const Rat& a = at(r, enter);
        if (a <= 0) continue;
        ratio = rhs(r) / a;
        if (leave == rows_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == rows_) return Outcome::Unbounded;
      pivot(leave, enter);
    }
  }

 private:
  std::size_t rows_, k_, width_;
  std::vector<Rat> cells_;
  std::vector<Rat> obj_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> nz_;
};

enum class DualOutcome { Optimal, Infeasible, Unbounded };

struct DualResult {
  DualOutcome outcome;
  Vec multipliers;  // primal point when Optimal
};

/// Solves min <b, y>, A^T y = -c, y >= 0 where equality rows of the primal
/// contribute a +/- column pair.
DualResult solve_dual(const LpProblem& p, const Vec& objective) {
  const std::size_t n = p.num_vars;
  std::vector<std::size_t> col_row;
  std::vector<int> col_sign;
  for (std::size_t r = 0; r < p.constraints.size(); ++r) {
    col_row.push_back(r);
    col_sign.push_back(1);
    if (p.constraints[r].relation == Relation::Equal) {
      col_row.push_back(r);
      col_sign.push_back(-1);
    }
  }
  const std::size_t k = col_row.size();
  Tableau t(n, k);
  std::vector<int> row_sign(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    Rat h = -objective[i];
    if (h < 0) row_sign[i] = -1;
    t.rhs(i) = row_sign[i] * h;
    for (std::size_t j = 0; j < k; ++j) {
      const Rat& a = p.constraints[col_row[j]].normal[i];
      if (a != 0) t.at(i, j) = (row_sign[i] * col_sign[j]) * a;
    }
  }

  std::vector<Rat> cost(k + n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) cost[k + i] = 1;
  t.set_costs(cost);
  t.run(false);
  if (t.objective_value() > 0) return {DualOutcome::Infeasible, {}};

  for (std::size_t r = 0; r < n; ++r) {
    if (!t.is_artificial(t.basic(r))) continue;
    for (std::size_t c = 0; c < k; ++c) {
      if (t.at(r, c) != 0) {
        t.pivot(r, c);
        break;
      }
    }
  }

  for (std::size_t j = 0; j < k; ++j) cost[j] = col_sign[j] * p.constraints[col_row[j]].rhs;
  for (std::size_t i = 0; i < n; ++i) cost[k + i] = 0;
  t.set_costs(cost);
  if (t.run(false) == Tableau::Outcome::Unbounded) return {DualOutcome::Unbounded, {}};

  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -(row_sign[i] * t.reduced_cost(k + i));
  return {DualOutcome::Optimal, std::move(x)};
}

void validate(const LpProblem& p) {
  if (p.objective.dim() != p.num_vars)
    throw InputError("LP objective has " + std::to_string(p.objective.dim()) + " entries, expected " +
                     std::to_string(p.num_vars));
  for (std::size_t r = 0; r < p.constraints.size(); ++r) {
    if (p.constraints[r].normal.dim() != p.num_vars)
      throw InputError("LP constraint " + std::to_string(r) + " has " +
                       std::to_string(p.constraints[r].normal.dim()) + " coefficients, expected " +
                       std::to_string(p.num_vars));
  }
}

bool satisfies(const LpProblem& p, const Vec& x) {
  for (const auto& c : p.constraints) {
    Rat lhs = dot(c.normal, x);
    if (c.relation == Relation::Equal ? lhs != c.rhs : lhs > c.rhs) return false;
  }
  return true;
}

}  // namespace

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "Optimal";
    case LpStatus::Infeasible: return "Infeasible";
    case LpStatus::Unbounded: return "Unbounded";
  }
  return "?";
}

LpSolution lp_solve(const LpProblem& problem) {
  validate(problem);
  if (problem.num_vars == 0) {
    if (!satisfies(problem, Vec())) return {LpStatus::Infeasible, {}, {}};
    return {LpStatus::Optimal, Vec(), Rat(0)};
  }

  DualResult dual = solve_dual(problem, problem.objective);
  switch (dual.outcome) {
    case DualOutcome::Unbounded:
      return {LpStatus::Infeasible, {}, {}};
    case DualOutcome::Infeasible: {
      // Primal is either infeasible or unbounded; decide with a zero objective.
      DualResult feas = solve_dual(problem, Vec(problem.num_vars));
      if (feas.outcome == DualOutcome::Optimal) return {LpStatus::Unbounded, {}, {}};
      return {LpStatus::Infeasible, {}, {}};
    }
    case DualOutcome::Optimal:
      break;
  }
  if (!satisfies(problem, dual.multipliers))
    throw std::logic_error("lp_solve: recovered primal point violates a constraint");
  Rat value = dot(problem.objective, dual.multipliers);
  return {LpStatus::Optimal, std::move(dual.multipliers), std::move(value)};
}

std::size_t lp_pivot_count() { return g_pivots; }

}  // namespace minkowski
