#include <chrono>

#include "doctest.h"
#include "oracles.hpp"
#include "pseudoarc/bm.hpp"
#include "pseudoarc/errors.hpp"

using namespace pseudoarc;

static const Error* caught(auto&& f, Error& store) {
  try {
    f();
  } catch (const Error& e) {
    store = e;
    return &store;
  }
  return nullptr;
}

// unsplit points by counting preimages under every f_{n,n'} separately
static std::set<std::pair<std::int64_t, std::int64_t>> unsplit_oracle(const Transcript& t) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  const auto M = t.moves.size();
  for (size_t n = 0; n < M; ++n)
    for (std::int64_t x = 0; x < t.sizes[n]; ++x) {
      bool split = false;
      for (size_t n2 = n + 1; n2 <= M && !split; ++n2) {
        std::int64_t cnt = 0;
        for (std::int64_t y = 0; y < t.sizes[n2]; ++y) {
          std::int64_t v = y;
          for (size_t i = n2; i-- > n;) v = t.moves[i].map.fin[static_cast<size_t>(v)];
          cnt += v == x;
        }
        split = cnt >= 2;
      }
      if (!split) out.insert({static_cast<std::int64_t>(n), x});
    }
  return out;
}

TEST_CASE("schedule with Eve playing identity") {
  auto t = play(BackendKind::IntervalPL, eve_identity(), odd_crooked(), 2);
  REQUIRE(t.moves.size() == 4);
  CHECK(*t.moves[0].eps == 1);
  CHECK(*t.moves[1].eps == Q(1, 2));
  CHECK(*t.moves[2].eps == Q(3, 20));
  CHECK(*t.moves[3].eps == Q(3, 40));
  CHECK(t.moves[1].map.canonical_n == 3);
  CHECK(t.moves[3].map.canonical_n == 14);
  CHECK(*t.moves[1].lipschitz == Q(5, 3));
  CHECK(t.moves[0].mover == Mover::Eve);
  CHECK(t.moves[1].mover == Mover::Odd);
  EpsilonSchedule s(Q(1));
  for (auto& mv : t.moves) s.step(mv.lipschitz);
  CHECK(s.replay());
  for (size_t n = 0; n < t.moves.size(); ++n) CHECK(*s.eps()[n] == *t.moves[n].eps);
  // every witness respects its bound
  for (auto& w : s.witnesses()) CHECK(*s.eps()[static_cast<size_t>(w.n)] <= w.delta);
}

TEST_CASE("crooked move at eps = 1/4 is c_5") {
  auto t = play(BackendKind::IntervalPL, eve_identity(), odd_crooked(), 1, {.eps0 = Q(1, 2)});
  CHECK(*t.moves[1].eps == Q(1, 4));
  CHECK(t.moves[1].map.canonical_n == 5);
}

TEST_CASE("six rounds certify every f_{n,n'} with n <= 6") {
  auto t0 = std::chrono::steady_clock::now();
  auto t = play(BackendKind::IntervalPL, eve_identity(), odd_crooked(), 6);
  auto r = verify_transcript(t, {"crooked_schedule"});
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  MESSAGE("six rounds: " << secs << " s");
  CHECK(secs < 120);
  CHECK(r.ok());
  CHECK(r.schedule_ok);
  std::set<std::int64_t> done;
  for (auto& c : r.certificates) {
    done.insert(c.n);
    CHECK(c.eps == *t.moves[static_cast<size_t>(c.n)].eps);
    CHECK(replay(*c.cert) <= c.eps);
    CHECK(c.n2 > c.n);
  }
  for (std::int64_t n = 0; n <= 6; ++n) CHECK(done.count(n));
  // later moves leave the representable range
  CHECK_FALSE(t.moves[8].eps.has_value());
  CHECK_FALSE(t.moves[9].map.resolved);
  CHECK(t.moves[7].map.resolved);
  CHECK(t.moves[7].map.canonical_n > Z(1) << 1000);
}

TEST_CASE("random Eve, interval") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    auto t = play(BackendKind::IntervalPL, eve_random(), odd_crooked(), 3, {.seed = seed});
    auto r = verify_transcript(t, {"crooked_schedule"});
    CHECK(r.ok());
    CHECK(r.certificates.size() >= 4);
    for (auto& c : r.certificates) CHECK(replay(*c.cert) <= c.eps);
  }
}

TEST_CASE("Odd without crooked maps is caught") {
  auto t = play(BackendKind::IntervalPL, eve_identity(), odd_identity(), 3);
  auto r = verify_transcript(t, {"crooked_schedule"});
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.uncertified.empty());
  CHECK(r.certificates.empty());
}

TEST_CASE("invalid moves name the mover") {
  Error e("", "");
  // Eve answers with the wrong codomain
  Strategy bad_eve = [](const Transcript& t, std::int64_t n, std::mt19937_64&) -> MapRef {
    std::int64_t k = n == 0 ? 2 : t.sizes[static_cast<size_t>(n)] + 1;
    std::vector<std::int64_t> v(static_cast<size_t>(k));
    std::iota(v.begin(), v.end(), 0);
    return MapRef::finite(k, v, "bad");
  };
  REQUIRE(caught([&] { play(BackendKind::FinSurj, bad_eve, odd_split(), 3); }, e));
  CHECK(e.kind() == "InvalidMove");
  CHECK(e.data() == std::vector<std::int64_t>{2, 0});
  CHECK(std::string(e.what()).find("Eve") != std::string::npos);
  Strategy bad_odd = [](const Transcript&, std::int64_t, std::mt19937_64&) {
    return MapRef::interval(pl_constant(Q(1, 2)), "bad");
  };
  REQUIRE(caught([&] { play(BackendKind::IntervalPL, eve_identity(), bad_odd, 2); }, e));
  CHECK(e.data() == std::vector<std::int64_t>{1, 1});
  REQUIRE(caught([&] { play(BackendKind::CirclePL, eve_identity(), odd_split(), 1); }, e));
  CHECK(e.kind() == "PreconditionViolated");
}

TEST_CASE("finite surjections") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto t = play(BackendKind::FinSurj, eve_random(), odd_split(), 4, {.seed = seed});
    CHECK(t.sizes[0] <= 4);
    for (size_t n = 0; n < t.moves.size(); ++n) {
      CHECK(*t.moves[n].eps == Q(1, 1u << n));
      if (n % 2 == 0) CHECK(t.sizes[n + 1] <= t.sizes[n] + 3);
    }
    auto r = verify_transcript(t, {"splits_every_point"});
    CHECK(r.ok());
    // Odd only plays bijections
    auto b = play(BackendKind::FinSurj, eve_random(), odd_identity(), 4, {.seed = seed});
    auto rb = verify_transcript(b, {"splits_every_point"});
    std::set<std::pair<std::int64_t, std::int64_t>> got;
    for (auto& u : rb.unsplit) got.insert({u.n, u.x});
    CHECK(got == unsplit_oracle(b));
  }
  auto b = play(BackendKind::FinSurj, eve_identity(), odd_identity(), 3);
  auto rb = verify_transcript(b, {"splits_every_point"});
  CHECK_FALSE(rb.ok());
  CHECK(static_cast<std::int64_t>(rb.unsplit.size()) == 6 * b.sizes[0]);
}

TEST_CASE("zigzag primes") {
  CHECK(zigzag_primes(10) == std::vector<std::uint64_t>{2, 3, 2, 5, 3, 2, 7, 5, 3, 2});
}

TEST_CASE("below 2^inf") {
  auto S = Supernatural::prime_power(2, Exp::infinity());
  PlayConfig cfg{.below = S};
  auto t = play(BackendKind::CirclePL, eve_identity(), odd_solenoid(S, {2}), 6, cfg);
  for (auto& mv : t.moves)
    if (mv.mover == Mover::Odd) CHECK(mv.map.degree() == 2);
  CHECK(t.blame.empty());
  CHECK(verify_transcript(t, {"type_budget"}).ok());

  // Eve injects degree 3 at move 2
  auto u = play(BackendKind::CirclePL, eve_inject_degree(2, 3), odd_solenoid(S), 6, cfg);
  REQUIRE(u.blame.size() == 1);
  CHECK(u.blame[0] == BlameEntry{3, 2, Mover::Eve});
  auto r = verify_transcript(u, {"type_budget"});
  CHECK_FALSE(r.ok());
  CHECK(r.blame == u.blame);
  // zig-zag: Odd stays inside the budget
  for (auto& mv : u.moves)
    if (mv.mover == Mover::Odd) CHECK((mv.map.degree() == 1 || mv.map.degree() == 2));

  // equivalent bound differing at 3 only
  auto S2 = mul(S, Supernatural::of(3));
  REQUIRE(type_equiv(S, S2));
  auto b2 = blame_ledger(u, S2);
  CHECK(b2.empty());
  auto S3 = mul(S, Supernatural::of(5));
  CHECK(blame_ledger(u, S3) == u.blame);

  // degree 0 blames every prime of the universe with a finite budget
  auto z = play(BackendKind::CirclePL, eve_scripted({MapRef::circle_map(rogers_tent(), "tent")}),
                odd_solenoid(S), 2, cfg);
  std::set<std::uint64_t> blamed;
  for (auto& b : z.blame) {
    blamed.insert(b.prime);
    CHECK(b.move == 0);
    CHECK(b.mover == Mover::Eve);
  }
  CHECK(blamed == std::set<std::uint64_t>{3, 5, 7, 11, 13});
}

TEST_CASE("dropping Eve's first move shifts certificates") {
  auto t = play(BackendKind::IntervalPL, eve_identity(), odd_crooked(), 4);
  auto r = verify_transcript(t, {"crooked_schedule"});
  auto d = drop_first(t);
  auto rd = verify_transcript(d, {"crooked_schedule"});
  CHECK(rd.ok());
  for (auto& c : rd.certificates) {
    auto it = std::find_if(r.certificates.begin(), r.certificates.end(),
                           [&](const PairCertificate& o) { return o.n == c.n + 1; });
    REQUIRE(it != r.certificates.end());
    CHECK(it->n2 == c.n2 + 1);
    CHECK(it->eps == c.eps);
  }
  CHECK(rd.certificates.size() + 1 == r.certificates.size());
}

TEST_CASE("Lewis-Minc") {
  auto t0 = std::chrono::steady_clock::now();
  auto s = lewis_minc(3);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  MESSAGE("lewis_minc(3): " << ms << " ms");
  REQUIRE(s.size() == 4);
  CHECK(s[0].m == 1);
  CHECK(s[1].m == 2);
  CHECK(s[2].m == 12);
  CHECK(s[3].m == 543339720);
  for (size_t n = 0; n < s.size(); ++n) {
    CHECK(s[n].eps == frac(1, s[n].m));
    CHECK(replay(*s[n].cert) == s[n].eps);
    if (n + 1 < s.size()) CHECK(*s[n].lipschitz == frac(s[n + 1].m, 2 * s[n].m));
  }
  CHECK(s[0].materialized);
  CHECK_FALSE(s[3].materialized);
  Error e("", "");
  REQUIRE(caught([] { lewis_minc(4); }, e));
  CHECK(e.kind() == "DepthTooLarge");
}

TEST_CASE("epsilon_schedule_step examples") {
  EpsilonSchedule id(Q(1));
  for (int n = 0; n < 10; ++n) id.step(Q(1));
  for (int n = 0; n <= 10; ++n) CHECK(*id.eps()[static_cast<size_t>(n)] == Q(1, 1u << n));
  EpsilonSchedule two(Q(1));
  two.step(Q(2));
  CHECK(*two.eps()[1] == Q(1, 4));
  // non-expansive, discrete: 2^-n
  EpsilonSchedule fin(Q(1));
  for (int n = 0; n < 6; ++n) fin.step(Q(0));
  CHECK(*fin.eps()[6] == Q(1, 64));
  EpsilonSchedule gap(Q(1));
  gap.step(std::nullopt);
  gap.step(Q(1));
  CHECK_FALSE(gap.eps()[2].has_value());
}

TEST_CASE("modulus soundness and precomposition, sampled") {
  std::mt19937_64 rng(31);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto t = play(BackendKind::IntervalPL, eve_random(), odd_identity(), 3, {.seed = seed});
    for (auto& mv : t.moves) {
      const PLMap& f = *mv.map.pl;
      for (int k = 0; k < 50; ++k) {
        Q x = oracle::rand_q(rng, 97), y = oracle::rand_q(rng, 97);
        CHECK(qabs(f(x) - f(y)) <= *mv.lipschitz * qabs(x - y));
      }
    }
    // witnesses replay from the recorded moduli
    EpsilonSchedule s(*t.moves[0].eps);
    for (auto& mv : t.moves) s.step(mv.lipschitz);
    CHECK(s.replay());
    CHECK(s.witnesses().size() == t.witnesses.size());
  }
  // d(g o f, h o f) <= d(g, h)
  for (int it = 0; it < 100; ++it) {
    PLMap f = oracle::random_pl_surjection(rng, 3), g = oracle::random_pl_surjection(rng, 3),
          h = oracle::random_pl_surjection(rng, 3);
    CHECK(sup_dist(compose(g, f), compose(h, f)) <= sup_dist(g, h));
    CircleMap a(oracle::random_lift(rng, 2, 1)), b(oracle::random_lift(rng, 2, 2)), c(oracle::random_lift(rng, 2, -1));
    CHECK(circle_dist(compose_circle(b, a), compose_circle(c, a)) <= circle_dist(b, c));
  }
}

TEST_CASE("solenoid budget and gate") {
  auto S = Supernatural::prime_power(2, Exp{2, false});
  // two degree-2 moves by Eve use up the budget at 2
  auto eve = eve_scripted({MapRef::circle_map(circle_power(2), "power"), MapRef::circle_map(circle_power(2), "power")});
  auto t = play(BackendKind::CirclePL, eve, odd_solenoid(S, {2}), 2, {.below = S});
  CHECK(t.moves[1].map.degree() == 2);
  CHECK(t.moves[3].map.degree() == 1);
  REQUIRE(t.blame.size() == 1);
  CHECK(t.blame[0] == BlameEntry{2, 2, Mover::Eve});
  // S = 2^2, budget already spent by Eve
  auto u = play(BackendKind::CirclePL, eve_scripted({MapRef::circle_map(circle_power(4), "power")}),
                odd_solenoid(S, {2}), 1, {.below = S});
  CHECK(u.moves[1].map.degree() == 1);
  CHECK(u.blame.empty());
  // wrong kind of map in one round
  Error e("", "");
  REQUIRE(caught([] {
    play(BackendKind::IntervalPL, eve_scripted({MapRef::circle_map(CircleMap(), "x")}), odd_crooked(), 1);
  }, e));
  CHECK(e.kind() == "InvalidMove");
  CHECK(e.data() == std::vector<std::int64_t>{0, 0});
}

TEST_CASE("Lewis-Minc k = 2") {
  auto s = lewis_minc(2);
  REQUIRE(s.size() == 3);
  CHECK(s[0].eps == 1);
  CHECK(s[1].eps == Q(1, 2));
  CHECK(s[2].eps == Q(1, 12));
  CHECK(s[0].materialized);
  CHECK(s[1].materialized);
  CHECK_FALSE(s[2].materialized);
  for (int n = 0; n < 2; ++n) CHECK(*s[static_cast<size_t>(n)].lipschitz == s[static_cast<size_t>(n)].eps / (2 * s[static_cast<size_t>(n + 1)].eps));
  CHECK(eval_point(24, crn(24)) == 24);
}
