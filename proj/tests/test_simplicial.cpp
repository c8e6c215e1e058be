#include "doctest.h"
#include "oracles.hpp"
#include "pseudoarc/errors.hpp"
#include "pseudoarc/simplicial.hpp"

using namespace pseudoarc;

static std::string kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

TEST_CASE("build and breakpoints") {
  auto id = build_simplicial(2, {0, 1, 2});
  CHECK(id.surjective());
  CHECK(id.breakpoints() == std::vector<std::int64_t>{0, 2});
  auto s = build_simplicial(3, {0, 1, 2, 1, 2, 3});
  CHECK(s.surjective());
  CHECK(s.breakpoints() == std::vector<std::int64_t>{0, 2, 3, 5});
  CHECK(kind_of([] { build_simplicial(2, {0, 2}); }) == "StepViolation");
  CHECK(kind_of([] { build_simplicial(2, {0, 1, 2, 3}); }) == "RangeViolation");
  CHECK(!build_simplicial(3, {1, 2}).surjective());
  // plateau points count as breakpoints where the slope changes
  CHECK(build_simplicial(1, {0, 0, 1}).breakpoints() == std::vector<std::int64_t>{0, 1, 2});
}

TEST_CASE("combinators") {
  auto c2 = build_simplicial(2, {0, 1, 2});
  CHECK(compose(c2, reverse_map(2)).values() == std::vector<std::int64_t>{2, 1, 0});
  CHECK(concat(build_simplicial(1, {0, 1}), build_simplicial(1, {1, 0})).values() ==
        std::vector<std::int64_t>{0, 1, 0});
  auto e = include_map(5, 3, 1);
  CHECK(e.codomain() == 5);
  CHECK(e.values() == std::vector<std::int64_t>{1, 2, 3, 4});
  CHECK(kind_of([] { include_map(5, 3, 3); }) == "IncludeOutOfRange");
  CHECK(kind_of([] { concat(build_simplicial(1, {0, 1}), build_simplicial(1, {0, 1})); }) ==
        "ConcatMismatch");
  CHECK(kind_of([] { compose(identity_map(2), identity_map(3)); }) == "DomainMismatch");
  auto c3 = build_simplicial(3, {0, 1, 2, 1, 2, 3});
  CHECK(compose(identity_map(3), c3) == c3);
  CHECK(compose(c3, reverse_map(5)).values() == std::vector<std::int64_t>{3, 2, 1, 2, 1, 0});
}

TEST_CASE("concat identities") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 5);
    auto a = oracle::random_walk(rng, static_cast<std::int64_t>(rng() % 10), n);
    auto b0 = oracle::random_walk(rng, static_cast<std::int64_t>(rng() % 10), n);
    // force b to start where a ends
    std::vector<std::int64_t> bv{a.values().back()};
    for (size_t k = 1; k < b0.values().size(); ++k) {
      std::int64_t step = b0.values()[k] - b0.values()[k - 1];
      std::int64_t x = bv.back() + step;
      if (x < 0 || x > n) x = bv.back();
      bv.push_back(x);
    }
    SimplicialMap b(n, bv);
    auto ab = concat(a, b);
    std::int64_t m = a.domain(), mp = b.domain();
    CHECK(compose(ab, include_map(m + mp, m, 0)) == a);
    CHECK(compose(ab, include_map(m + mp, mp, m)) == b);
    auto tt = oracle::random_walk(rng, n, 1 + static_cast<std::int64_t>(rng() % 4));
    CHECK(compose(tt, ab) == concat(compose(tt, a), compose(tt, b)));
  }
}
