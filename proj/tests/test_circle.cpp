#include "doctest.h"
#include "oracles.hpp"
#include "pseudoarc/circle.hpp"
#include "pseudoarc/errors.hpp"

using namespace pseudoarc;

static std::string kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

TEST_CASE("degree") {
  CHECK(degree(circle_power(2)) == 2);
  CHECK(degree(rogers_tent()) == 0);
  CHECK(rogers_tent().surjective());
  CHECK(degree(compose_circle(circle_power(2), circle_power(3))) == 6);
  CHECK(degree(CircleMap()) == 1);
  CHECK(kind_of([] { CircleMap(PLMap({{Q(0), Q(0)}, {Q(1), Q(1, 2)}})); }) == "RangeViolation");
  CHECK_FALSE(CircleMap(PLMap({{Q(0), Q(0)}, {Q(1, 2), Q(1, 3)}, {Q(1), Q(0)}})).surjective());
  // x -> 2x mod 1
  CircleMap sq = circle_power(2);
  CHECK(sq(Q(3, 4)) == Q(1, 2));
  CHECK(sq.lift_at(Q(7, 4)) == Q(7, 2));
}

TEST_CASE("compose_circle") {
  CircleMap t = rogers_tent();
  CircleMap c = compose_circle(circle_power(2), t);
  CHECK(c.degree() == 0);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    Q x = oracle::rand_q(rng, 97);
    CHECK(c(x) == circle_power(2)(t(x)));
  }
  // lift starts in [0, 1)
  CircleMap r = compose_circle(circle_rotate(circle_power(1), Q(5, 2)), circle_power(3));
  CHECK(r.lift()(Q(0)) == Q(1, 2));
}

TEST_CASE("circle_dist") {
  CircleMap sq = circle_power(2);
  CHECK(circle_dist(sq, sq) == 0);
  CHECK(circle_dist(sq, circle_rotate(sq, Q(1, 4))) == Q(1, 4));
  CHECK(circle_dist(sq, circle_rotate(sq, Q(3, 4))) == Q(1, 4));
  CHECK(circle_dist(sq, circle_rotate(sq, Q(2))) == 0);
  CHECK(circle_dist(circle_power(1), sq) == Q(1, 2));
}

TEST_CASE("degree multiplicativity, random pairs") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 100; ++it) {
    std::int64_t a = static_cast<std::int64_t>(rng() % 7) - 3, b = static_cast<std::int64_t>(rng() % 7) - 3;
    CircleMap f(oracle::random_lift(rng, 3, a)), g(oracle::random_lift(rng, 3, b));
    CircleMap h = compose_circle(f, g);
    CHECK(h.degree() == a * b);
    for (int k = 0; k < 5; ++k) {
      Q x = oracle::rand_q(rng, 89);
      CHECK(h(x) == f(g(x)));
    }
  }
}

TEST_CASE("close_degree_check") {
  CircleMap sq = circle_power(2);
  CircleMap pert(PLMap({{Q(0), Q(0)}, {Q(1, 3), Q(2, 3) + Q(1, 8)}, {Q(1), Q(2)}}));
  auto r = close_degree_check(sq, pert);
  CHECK(r.dist == Q(1, 8));
  CHECK(r.close);
  CHECK(r.ok);
  CHECK(r.deg_a == 2);
  CHECK(r.deg_b == 2);
  auto far = close_degree_check(circle_power(1), sq);
  CHECK(far.dist >= Q(1, 2));
  CHECK_FALSE(far.close);
  CHECK(far.ok);

  // perturbations that may change the degree; close ones never do
  std::mt19937_64 rng(5);
  int close = 0;
  for (int it = 0; it < 500; ++it) {
    std::int64_t d = static_cast<std::int64_t>(rng() % 5) - 2;
    PLMap base = oracle::random_lift(rng, 3, d);
    std::int64_t k = static_cast<std::int64_t>(rng() % 3) - 1;
    std::vector<Point> p;
    for (auto& q : base.points()) {
      Q e = (oracle::rand_q(rng, 16) - Q(1, 2)) * Q(3, 4);
      p.push_back({q.x, q.y + e});
    }
    p.back().y = p.front().y + d + k;
    CircleMap f(base), g{PLMap(p)};
    auto c = close_degree_check(f, g);
    CHECK(c.ok);
    if (c.close) ++close;
  }
  CHECK(close > 100);
}

TEST_CASE("CircularSimplicialMap") {
  CircularSimplicialMap s(4, {0, 1, 2, 3});
  CHECK(s.winding() == 1);
  CHECK(s.domain() == 4);
  CHECK(s(5) == 1);
  CHECK(CircularSimplicialMap(4, {0, 3, 2, 1}).winding() == -1);
  CHECK(CircularSimplicialMap(5, {0, 1, 0}).winding() == 0);
  CHECK(kind_of([] { CircularSimplicialMap(5, {0, 2}); }) == "StepViolation");
  CHECK(kind_of([] { CircularSimplicialMap(5, {0, 1, 2}); }) == "StepViolation");
  CHECK(kind_of([] { CircularSimplicialMap(3, {0, 3}); }) == "RangeViolation");
  CHECK(kind_of([] { CircularSimplicialMap::from_lift(3, {0, 1, 2}); }) == "RangeViolation");
  auto l = CircularSimplicialMap::from_lift(1, {0, 1});
  CHECK(l.winding() == 1);
  CHECK(realize_circle(l).degree() == 1);
  // signed steps add up to n times the winding
  std::mt19937_64 rng(1);
  for (int it = 0; it < 200; ++it) {
    std::int64_t n = 3 + static_cast<std::int64_t>(rng() % 6);
    auto v = oracle::random_cycle(rng, 1 + static_cast<std::int64_t>(rng() % 40), n);
    CircularSimplicialMap c(n, v);
    CHECK(c.lift().back() - c.lift().front() == n * c.winding());
    CHECK(c.values() == v);
    CHECK(realize_circle(c).degree() == c.winding());
  }
}

TEST_CASE("is_circularly_crooked agrees with the arc oracle, m <= 60") {
  std::mt19937_64 rng(17);
  int crooked = 0;
  for (std::int64_t m = 1; m <= 60; ++m)
    for (int it = 0; it < 12; ++it) {
      std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 8);
      auto v = oracle::random_cycle(rng, m, n);
      CircularSimplicialMap s(n, v);
      auto r = is_circularly_crooked(s);
      bool lit = oracle::circular_literal(v, n);
      CHECK(r.crooked == lit);
      if (r.crooked) ++crooked;
      if (!r.crooked) {
        // the reported arc fails on its own
        std::vector<std::int64_t> arc;
        for (std::int64_t t = r.i;; ++t) {
          arc.push_back(v[t % m]);
          if (t % m == r.j && t > r.i) break;
        }
        CHECK(arc.size() < static_cast<size_t>(m) + 1);
      }
    }
  // small crooked generator outputs as well
  for (std::int64_t n = 1; n <= 4; ++n) {
    auto c = crooked_circle_map(n, 1);
    if (c.avatar.domain() <= 60) CHECK(oracle::circular_literal(c.avatar.values(), n));
  }
  CHECK(crooked > 50);
}

TEST_CASE("winding map is not crooked") {
  for (std::int64_t n = 1; n <= 9; ++n) {
    std::int64_t m = 3 * n;
    std::vector<std::int64_t> v;
    for (std::int64_t i = 0; i < m; ++i) v.push_back(i * n / m);
    CircularSimplicialMap s(n, v);
    // in Z_4 the two values at distance 2 share a neighbour
    CHECK(is_circularly_crooked(s).crooked == (n <= 4));
  }
}

TEST_CASE("crooked_circle_map") {
  auto a = crooked_circle_map(1, 1);
  CHECK(a.map.degree() == 1);
  CHECK(is_circularly_crooked(a.avatar).crooked);
  for (std::int64_t d : {1, 3, -1, -2, 0}) {
    auto c = crooked_circle_map(4, d);
    CHECK(c.map.degree() == d);
    CHECK(c.avatar.winding() == d);
    CHECK(is_circularly_crooked(c.avatar).crooked);
    CHECK(c.map.surjective());
  }
  for (std::int64_t n = 2; n <= 8; ++n) {
    auto c = crooked_circle_map(n, 2);
    CHECK(c.map.degree() == 2);
    CHECK(is_circularly_crooked(c.avatar).crooked);
  }
  CHECK(kind_of([] { crooked_circle_map(9, 1, 1000); }) == "TooLarge");
  CHECK(kind_of([] { crooked_circle_map(0, 1); }) == "PreconditionViolated");
}

TEST_CASE("rogers_witness_check, coarse") {
  auto r = rogers_witness_check(64);
  REQUIRE(r.components.size() == 2);
  CHECK(r.components_2x == 2);
  for (auto& c : r.components) {
    CHECK(c.miss_x > 0);
    CHECK(c.miss_y == 0);
  }
  // equality set: two curves, each over a closed half circle
  REQUIRE(r.exact.size() == 2);
  for (auto& c : r.exact) CHECK(c.miss_x == 64 / 2 - 1);
  CHECK(kind_of([] { rogers_witness_check(32); }) == "GridTooCoarse");
}
