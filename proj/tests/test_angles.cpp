#include <doctest.h>

#include <random>

#include "minkowski/angles.hpp"
#include "minkowski/error.hpp"
#include "support.hpp"

using namespace minkowski;

TEST_CASE("is_absorbing examples") {
  auto linf = support::linf(2);
  auto r = analyze_angle(linf, {Vec{1, 1}, Vec{-1, 1}});
  CHECK(r.absorbing);
  CHECK(r.face_distance == 0);
  REQUIRE(r.certificate);
  CHECK(certificate_valid(linf, {Vec{1, 1}, Vec{-1, 1}}, *r.certificate));

  auto s = analyze_angle(linf, {Vec{1, 0}, Vec{0, 1}});
  CHECK_FALSE(s.absorbing);
  CHECK(s.face_distance == 2);
  CHECK_FALSE(s.certificate);
  CHECK_FALSE(absorbing_certificate(linf, {Vec{1, 0}, Vec{0, 1}}));

  for (const auto& n : {support::l1(2), support::linf(2), support::hexagon(), support::l1(3)}) {
    Vec a(static_cast<std::size_t>(n.dim()));
    a[0] = 2;
    a[1] = -1;
    auto st = analyze_angle(n, {a, -a});
    CHECK(st.absorbing);
    REQUIRE(st.certificate);
    CHECK(st.certificate->a_star + st.certificate->b_star == Vec(a.dim()));
    CHECK(certificate_valid(n, {a, -a}, *st.certificate));
  }
  CHECK_THROWS_AS((is_absorbing(linf, {Vec{0, 0}, Vec{1, 0}})), InputError);
  CHECK_THROWS_AS((is_absorbing(linf, {Vec{1, 0, 0}, Vec{1, 0, 0}})), InputError);
}

TEST_CASE("absorbing_oracle examples") {
  auto o = absorbing_oracle_detail(support::linf(2), {Vec{1, 0}, Vec{0, 1}});
  CHECK_FALSE(o.absorbing);
  CHECK(o.optimum == Rat(3, 2));
  auto linf_norm = support::linf(2);
  CHECK(norm_eval(linf_norm, Vec{Rat(1, 2), Rat(1, 2)}) + norm_eval(linf_norm, Vec{Rat(-1, 2), Rat(1, 2)}) +
            norm_eval(linf_norm, Vec{Rat(1, 2), Rat(-1, 2)}) ==
        Rat(3, 2));
  auto p = absorbing_oracle_detail(support::l1(2), {Vec{1, 0}, Vec{0, 1}});
  CHECK(p.absorbing);
  CHECK(p.optimum == 2);
  CHECK(absorbing_oracle(support::hexagon(), {Vec{3, 1}, Vec{-3, -1}}));
}

TEST_CASE("angle_contains") {
  AngleQuery q{Vec{1, 0}, Vec{0, 1}};
  CHECK(angle_contains(q, q));
  CHECK(angle_contains(q, {Vec{1, 1}, Vec{1, 2}}));
  CHECK_FALSE(angle_contains({Vec{1, 0}, Vec{1, 1}}, {Vec{0, 1}, Vec{1, 0}}));
  CHECK(angle_contains({Vec{1, 0}, Vec{-1, 0}}, {Vec{1, 1}, Vec{-1, 1}}));
  CHECK_FALSE(angle_contains({Vec{1, 0}, Vec{-1, 0}}, {Vec{1, 1}, Vec{-1, -1}}));
  CHECK_THROWS_AS((angle_contains({Vec{1, 0, 0}, Vec{0, 1, 0}}, q)), InputError);
}

TEST_CASE("face-distance route agrees with direct minimization") {
  std::mt19937_64 rng(23);
  int absorbing = 0, total = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = trial < 30 ? 2 : 3;
    auto n = support::random_ball(rng, d, 2, 4);
    for (int s = 0; s < 5; ++s) {
      AngleQuery q{support::random_vec(rng, d, 5, 2), support::random_vec(rng, d, 5, 2)};
      auto r = analyze_angle(n, q);
      CHECK(r.absorbing == absorbing_oracle(n, q));
      if (r.certificate) CHECK(certificate_valid(n, q, *r.certificate));
      absorbing += r.absorbing;
      ++total;
    }
  }
  CHECK(absorbing > 0);
  CHECK(absorbing < total);
}

TEST_CASE("ray invariance, symmetry and containment") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    auto n = support::random_polygon(rng);
    for (int s = 0; s < 5; ++s) {
      Vec a = support::random_vec(rng, 2, 5, 2), b = support::random_vec(rng, 2, 5, 2);
      const bool base = is_absorbing(n, {a, b});
      CHECK(base == is_absorbing(n, {support::random_positive(rng) * a, support::random_positive(rng) * b}));
      CHECK(base == is_absorbing(n, {b, a}));
      CHECK(base == is_absorbing(n, {-a, -b}));
      Vec c = support::random_positive(rng) * a + support::random_positive(rng) * b;
      if (!c.is_zero() && angle_contains({a, b}, {a, c}) && is_absorbing(n, {a, c})) CHECK(base);
    }
  }
}
