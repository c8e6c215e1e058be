#include "doctest.h"
#include "oracles.hpp"
#include "pseudoarc/crooked.hpp"
#include "pseudoarc/errors.hpp"

using namespace pseudoarc;

TEST_CASE("crn") {
  auto ref = oracle::pell_iterative(5000);
  for (int n = 0; n <= 5000; ++n) CHECK(crn(n) == ref[n]);
  CHECK(crn(5) == 29);
  CHECK(crn(24) == 543339720);
  // matrix path agrees with recursion past the table
  Z a = crn(4097), b = crn(4098), c = crn(4099);
  CHECK(c == 2 * b + a);
  for (int n = 2; n < 40; ++n) CHECK(crn(n + 1) > 2 * crn(n));
  CHECK(crn(2) == 2 * crn(1));
}

TEST_CASE("canonical maps") {
  CHECK(canonical_crooked(3).values() == std::vector<std::int64_t>{0, 1, 2, 1, 2, 3});
  std::vector<std::int64_t> fig{0, 1, 2, 1, 2, 3, 2, 1, 2, 3, 2, 3, 4, 3, 2,
                                3, 2, 1, 2, 3, 2, 3, 4, 3, 2, 3, 4, 3, 4, 5};
  CHECK(canonical_crooked(5).values() == fig);
  for (int n = 0; n <= 12; ++n) {
    auto c = canonical_crooked(n);
    CHECK(c.values() == oracle::canonical_recursive(n));
    CHECK(c.domain() == crn_small(n));
    CHECK(c.surjective());
    CHECK(c(0) == 0);
    CHECK(c(c.domain()) == n);
    auto r = canonical_crooked(n, true);
    for (std::int64_t i = 0; i <= c.domain(); ++i) {
      CHECK(eval_point(n, i) == c(i));
      CHECK(eval_point_recursive(n, i) == c(i));
      CHECK(r(i) == c(c.domain() - i));
    }
  }
  CHECK(eval_point(24, 0) == 0);
  CHECK(eval_point(24, crn(24)) == 24);
  std::mt19937_64 rng(24);
  Z top = crn(24);
  gmp_randclass gr(gmp_randinit_default);
  gr.seed(24);
  for (int t = 0; t < 10000; ++t) {
    Z i = gr.get_z_range(top + 1);
    CHECK(eval_point(24, i) == eval_point_recursive(24, i));
  }
  bool threw = false;
  try {
    canonical_crooked(30);
  } catch (const Error& e) {
    threw = e.kind() == "TooLarge";
  }
  CHECK(threw);
  threw = false;
  try {
    eval_point(3, 6);
  } catch (const Error& e) {
    threw = e.kind() == "IndexOutOfRange";
  }
  CHECK(threw);
}

TEST_CASE("is_crooked examples") {
  CHECK(is_crooked(identity_map(2)).crooked);
  auto r = is_crooked(identity_map(3));
  CHECK(!r.crooked);
  CHECK(r.i == 0);
  CHECK(r.j == 3);
  for (int n = 0; n <= 10; ++n) CHECK(is_crooked(canonical_crooked(n)).crooked);
}

TEST_CASE("is_crooked agrees with oracles") {
  for (int n = 0; n <= 5; ++n) CHECK(oracle::crooked_literal(canonical_crooked(n)));
  std::mt19937_64 rng(99);
  int crooked_seen = 0;
  for (int t = 0; t < 600; ++t) {
    std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 6);
    SimplicialMap s = (t % 3 == 0)
        ? compose(canonical_crooked(n), oracle::random_any_surjection(rng, crn_small(n),
                                                                      crn_small(n) + 4))
        : oracle::random_walk(rng, static_cast<std::int64_t>(rng() % 60), n);
    auto r = is_crooked(s);
    CHECK(r.crooked == oracle::crooked_literal(s));
    if (r.crooked) ++crooked_seen;
    else CHECK(!oracle::pair_literal(s, r.i, r.j));
    if (!r.crooked) CHECK(!pair_ok(s, r.i, r.j));
  }
  CHECK(crooked_seen > 100);
}

TEST_CASE("sandwich decider") {
  auto v = eps_crooked_decide(canonical_crooked(5), Q(1, 4));
  CHECK(v.kind == CrookedVerdict::Certified);
  v = eps_crooked_decide(identity_map(3), Q(1, 3));
  CHECK(v.kind == CrookedVerdict::Refuted);
  CHECK(v.i == 0);
  CHECK(v.j == 3);
  // a non-crooked map is refuted on the whole of (0, 3/2n]
  CHECK(eps_crooked_decide(identity_map(3), Q(2, 5)).kind == CrookedVerdict::Refuted);
  v = eps_crooked_decide(identity_map(3), Q(3, 5));
  CHECK(v.kind == CrookedVerdict::Indeterminate);
  CHECK(v.lo == Q(1, 3));
  CHECK(v.hi == Q(1, 2));
  CHECK(eps_crooked_decide(canonical_crooked(5), Q(1, 5)).kind == CrookedVerdict::Indeterminate);
}

TEST_CASE("certificate calculus") {
  auto g = certify_combinatorial("c5", canonical_crooked(5), Q(1, 5) + Q(1, 1000));
  auto gf = propagate_left("c5 o f", g);
  CHECK(gf->eps == g->eps);
  CHECK(replay(*gf) <= gf->eps);

  auto f = certify_canonical("c30", 30, Q(1, 20));
  auto r = propagate_right("tent o c30", modulus(pl_tent()), f);
  CHECK(r->eps == Q(1, 10));
  CHECK(replay(*r) <= r->eps);
  auto r2 = propagate_right("tent o c30", modulus(pl_tent()), f, Q(1, 10));
  CHECK(r2->eps == Q(1, 10));
  bool threw = false;
  try {
    propagate_right("x", modulus(pl_tent()), f, Q(1, 20));
  } catch (const Error& e) {
    threw = e.kind() == "ModulusMismatch";
  }
  CHECK(threw);

  auto f10 = certify_canonical("c11", 11, Q(1, 10));
  auto p = propagate_perturb("g", f10, Q(1, 100));
  CHECK(p->eps == Q(3, 25));
  CHECK(replay(*p) == Q(3, 25));
  threw = false;
  try {
    propagate_perturb("g", f10, Q(1, 50), Q(1, 100));
  } catch (const Error& e) {
    threw = e.kind() == "DistanceTooLarge";
  }
  CHECK(threw);
  threw = false;
  try {
    certify_combinatorial("id3", identity_map(3), Q(1, 2));
  } catch (const Error& e) {
    threw = e.kind() == "NotCrooked";
  }
  CHECK(threw);
}
