#pragma once

#include <cstddef>
#include <vector>

#include "minkowski/exactgeom.hpp"

namespace minkowski {

enum class Relation { LessEqual, Equal };

struct LpConstraint {
  Vec normal;
  Relation relation = Relation::LessEqual;
  Rat rhs;
};

/// minimize <objective, x> subject to the constraints; every variable is free
/// (sign restrictions are ordinary constraints).
struct LpProblem {
  std::size_t num_vars = 0;
  Vec objective;
  std::vector<LpConstraint> constraints;

  void add_le(Vec normal, Rat rhs) { constraints.push_back({std::move(normal), Relation::LessEqual, std::move(rhs)}); }
  void add_eq(Vec normal, Rat rhs) { constraints.push_back({std::move(normal), Relation::Equal, std::move(rhs)}); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus s);

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Vec point;  // set when Optimal
  Rat value;  // set when Optimal
};

/// Exact simplex over the rationals with Bland's anticycling rule.
///
/// The problem is solved through its dual in standard form
/// (min <b, y>, A^T y = -c, y >= 0), which has one row per variable and is
/// therefore small for the tall constraint systems used throughout the
/// library. The primal optimum is recovered from the final simplex
/// multipliers and re-checked against every constraint before returning.
/// Throws InputError on dimension mismatches.
LpSolution lp_solve(const LpProblem& problem);

/// Total number of simplex pivots performed by this thread (diagnostics).
std::size_t lp_pivot_count();

}  // namespace minkowski
