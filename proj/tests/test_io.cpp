#include "doctest.h"
#include "oracles.hpp"
#include "pseudoarc/bm.hpp"
#include "pseudoarc/errors.hpp"
#include "pseudoarc/io.hpp"

using namespace pseudoarc;
using io::json;

// emitted text parses back to the same value
template <class T, class F>
static void round_trip(const T& v, F parse) {
  json j = io::to_json(v);
  auto back = parse(json::parse(j.dump()));
  CHECK(io::to_json(back) == j);
}

TEST_CASE("rationals and maps") {
  CHECK(io::to_json(frac(-3, 6)) == "-1/2");
  CHECK(io::to_json(Q(4)) == "4/1");
  CHECK(io::q_from_json("7/21") == Q(1, 3));
  CHECK_THROWS_AS(io::q_from_json(json(0.5)), Error);
  round_trip(canonical_crooked(4), io::simplicial_from_json);
  CHECK(io::simplicial_from_json(json::parse("[0,1,2,1,2,3]")) == canonical_crooked(3));
  round_trip(pl_tent(), io::pl_from_json);
  CHECK(io::pl_from_text("0,0\n1/2,1\n1,0\n") == pl_tent());
  CHECK(io::pl_from_text(io::to_json(pl_tent()).dump()) == pl_tent());
  round_trip(circle_power(-3), io::circle_from_json);
  round_trip(crooked_circle_map(4, 2).avatar, io::circular_from_json);
}

TEST_CASE("supernaturals") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 300; ++it) {
    auto s = oracle::random_sn(rng, true);
    CHECK(io::supernatural_from_json(json::parse(io::to_json(s).dump())) == s);
  }
  auto s = io::supernatural_from_json(json::parse(R"({"default":"0","exceptions":{"2":"inf","3":"1"}})"));
  CHECK(s == mul(Supernatural::prime_power(2, Exp::infinity()), Supernatural::of(3)));
  CHECK(io::supernatural_from_json(json::parse(R"({"zero":true})")).is_zero());
  CHECK_THROWS_AS(io::supernatural_from_json(json::parse(R"({"exceptions":{"4":"1"}})")), Error);
}

TEST_CASE("certificates") {
  auto c = certify_combinatorial("f", canonical_crooked(4), Q(1, 3));
  auto r = propagate_right("g o f", Modulus{Q(2)}, c, Q(2, 3));
  auto p = propagate_perturb("h", propagate_left("k", r), Q(1, 100));
  auto back = io::certificate_from_json(json::parse(io::to_json(*p).dump()));
  CHECK(io::to_json(*back) == io::to_json(*p));
  CHECK(replay(*back) == replay(*p));
  auto big = certify_canonical("c", Z(1) << 200, Q(1, 7));
  CHECK(replay(*io::certificate_from_json(io::to_json(*big))) == Q(1, 7));
}

TEST_CASE("transcripts") {
  auto S = Supernatural::prime_power(2, Exp::infinity());
  std::vector<Transcript> ts{
      play(BackendKind::IntervalPL, eve_random(), odd_crooked(), 3, {.seed = 5}),
      play(BackendKind::FinSurj, eve_random(), odd_split(), 3, {.seed = 5}),
      play(BackendKind::CirclePL, eve_inject_degree(2, 3), odd_solenoid(S), 3, {.below = S}),
  };
  for (auto& t : ts) {
    json j = io::to_json(t);
    auto back = io::transcript_from_json(json::parse(j.dump()));
    CHECK(io::to_json(back) == j);
    std::vector<std::string> checks{t.backend == BackendKind::IntervalPL ? "crooked_schedule"
                                    : t.backend == BackendKind::FinSurj  ? "splits_every_point"
                                                                         : "type_budget"};
    CHECK(io::to_json(verify_transcript(back, checks)) == io::to_json(verify_transcript(t, checks)));
  }
}
