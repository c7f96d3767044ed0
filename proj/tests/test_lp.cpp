#include <doctest.h>

#include <random>

#include "minkowski/lp.hpp"
#include "support.hpp"

using namespace minkowski;

TEST_CASE("lp: small examples") {
  SUBCASE("single lower bound") {
    LpProblem p;
    p.num_vars = 1;
    p.objective = Vec{1};
    p.add_le(Vec{-1}, -1);
    auto s = lp_solve(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.point == Vec{1});
    CHECK(s.value == 1);
  }
  SUBCASE("contradictory bounds") {
    LpProblem p;
    p.num_vars = 1;
    p.objective = Vec{1};
    p.add_le(Vec{1}, 0);
    p.add_le(Vec{-1}, -1);
    CHECK(lp_solve(p).status == LpStatus::Infeasible);
  }
  SUBCASE("separable bounds") {
    LpProblem p;
    p.num_vars = 2;
    p.objective = Vec{1, 1};
    p.add_le(Vec{-1, 0}, Rat(-1, 3));
    p.add_le(Vec{0, -1}, Rat(-1, 6));
    auto s = lp_solve(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.value == Rat(1, 2));
  }
  SUBCASE("unbounded") {
    LpProblem p;
    p.num_vars = 1;
    p.objective = Vec{-1};
    p.add_le(Vec{-1}, 0);
    CHECK(lp_solve(p).status == LpStatus::Unbounded);
  }
  SUBCASE("equality constraints") {
    LpProblem p;
    p.num_vars = 2;
    p.objective = Vec{1, 2};
    p.add_eq(Vec{1, 1}, 3);
    p.add_le(Vec{-1, 0}, 0);
    p.add_le(Vec{0, -1}, 0);
    auto s = lp_solve(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.value == 3);
    CHECK(s.point == Vec{3, 0});
  }
}

namespace {

LpProblem random_lp(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  LpProblem p;
  p.num_vars = n;
  p.objective = support::random_vec(rng, n, 5, 3, false);
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n);
    e[i] = 1;
    p.add_le(e, 10);
    p.add_le(-e, 10);
  }
  for (std::size_t k = 0; k < m; ++k) p.add_le(support::random_vec(rng, n, 4, 2), support::random_rat(rng, 6, 3));
  return p;
}

}  // namespace

TEST_CASE("lp: agrees with brute-force vertex enumeration") {
  std::mt19937_64 rng(7);
  int optimal = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 2);
    LpProblem p = random_lp(rng, n, 3 + static_cast<std::size_t>(trial % 3));
    Rat best;
    const bool feasible = support::lp_brute_force(p, best);
    auto s = lp_solve(p);
    CHECK(feasible == (s.status == LpStatus::Optimal));
    if (feasible && s.status == LpStatus::Optimal) {
      CHECK(s.value == best);
      ++optimal;
    }
  }
  CHECK(optimal > 40);
}

TEST_CASE("lp: scaling the data scales the value") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    LpProblem p = random_lp(rng, 3, 4);
    const Rat s = support::random_positive(rng);
    LpProblem q = p;
    q.objective = s * q.objective;
    for (auto& c : q.constraints) {
      c.normal = s * c.normal;
      c.rhs *= s;
    }
    // Scaling constraints leaves the region unchanged; scaling the objective scales the value.
    auto a = lp_solve(p), b = lp_solve(q);
    REQUIRE(a.status == b.status);
    if (a.status == LpStatus::Optimal) CHECK(b.value == s * a.value);
  }
}
