#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pseudoarc/circle.hpp"
#include "pseudoarc/crooked.hpp"
#include "pseudoarc/plmap.hpp"
#include "pseudoarc/types.hpp"

namespace pseudoarc {

enum class Mover { Eve, Odd };
enum class BackendKind { IntervalPL, FinSurj, CirclePL };

const char* mover_name(Mover m);
const char* backend_name(BackendKind b);
BackendKind parse_backend(const std::string& s);

// One move f_n : X_{n+1} -> X_n.
struct MapRef {
  enum Kind { PL, Canonical, Fin, Circle } kind = PL;
  std::string rule;  // strategy tag
  std::optional<PLMap> pl;
  // realization of c_N; unresolved when N was beyond the representable range
  Z canonical_n = 0;
  bool resolved = true;
  // surjection {0..size-1} -> {0..fin_codomain-1}
  std::vector<std::int64_t> fin;
  std::int64_t fin_codomain = 0;
  std::optional<CircleMap> circle;
  std::int64_t circle_order = 0;  // order of a generated crooked circle map, 0 otherwise

  static MapRef interval(PLMap f, std::string rule);
  static MapRef canonical(Z n, std::string rule);
  static MapRef unresolved_canonical(std::string rule);
  static MapRef finite(std::int64_t codomain, std::vector<std::int64_t> v, std::string rule);
  static MapRef circle_map(CircleMap c, std::string rule, std::int64_t order = 0);

  std::string describe() const;
  std::int64_t degree() const;  // circle maps only
};

struct ScheduleWitness {
  std::int64_t k, n;
  Q target;     // eps_k / 2^(n-k)
  Q lipschitz;  // product bound for f_{k,n}; 0 marks a discrete domain
  Q delta;
};

// eps_0, eps_1, ... with the moduli of the maps played so far
class EpsilonSchedule {
 public:
  explicit EpsilonSchedule(Q eps0 = Q(1));
  // record f_n with its Lipschitz bound (absent when not representable), compute eps_{n+1}
  void step(const std::optional<Q>& lipschitz);
  const std::vector<std::optional<Q>>& eps() const { return eps_; }
  const std::vector<std::optional<Q>>& lipschitz() const { return lip_; }
  const std::vector<ScheduleWitness>& witnesses() const { return wit_; }
  // re-derive every eps from the recorded moduli
  bool replay() const;

 private:
  std::vector<std::optional<Q>> eps_, lip_;
  std::vector<ScheduleWitness> wit_;
};

struct Move {
  Mover mover;
  MapRef map;
  std::optional<Q> eps;        // eps_n of the schedule
  std::optional<Q> lipschitz;  // of f_n
};

struct BlameEntry {
  std::uint64_t prime;
  std::int64_t move;
  Mover mover;
  bool operator==(const BlameEntry& o) const {
    return prime == o.prime && move == o.move && mover == o.mover;
  }
};

struct Transcript {
  BackendKind backend = BackendKind::IntervalPL;
  std::uint64_t seed = 0;
  std::vector<Move> moves;
  std::vector<ScheduleWitness> witnesses;
  std::optional<Supernatural> below;  // BM below S
  std::vector<std::uint64_t> universe;
  std::vector<BlameEntry> blame;
  std::vector<std::int64_t> sizes;  // FinSurj: |X_n|
};

using Strategy = std::function<MapRef(const Transcript&, std::int64_t n, std::mt19937_64& rng)>;

struct PlayConfig {
  std::uint64_t seed = 0;
  Q eps0 = Q(1);
  std::optional<Supernatural> below;
  std::vector<std::uint64_t> universe{2, 3, 5, 7, 11, 13};
  // largest N whose Lipschitz constant crn(N)/N is computed
  std::int64_t lipschitz_order_limit = 1'000'000;
  std::int64_t first_size_max = 4;  // FinSurj: |X_0| <= this
};

Transcript play(BackendKind backend, const Strategy& eve, const Strategy& odd, std::int64_t rounds,
                const PlayConfig& config = {});

// Eve
Strategy eve_identity();
Strategy eve_random();  // random PL surjection / finite surjection / circle map of degree 1
// circle backend: identity except a power map of degree d at move k
Strategy eve_inject_degree(std::int64_t move, std::int64_t d);
Strategy eve_scripted(std::vector<MapRef> moves);
// Odd
Strategy odd_identity();
Strategy odd_crooked();
Strategy odd_split();
Strategy odd_solenoid(Supernatural S, std::vector<std::uint64_t> enumeration = {},
                      std::int64_t order = 4);
Strategy odd_strategy(const std::string& kind);

// 2,3,2,5,3,2,7,5,3,2,... (first `count` terms)
std::vector<std::uint64_t> zigzag_primes(std::int64_t count);

struct PairCertificate {
  std::int64_t n, n2;  // certificate for f_{n,n2}
  Q eps;
  CertPtr cert;
};
struct SplitViolation {
  std::int64_t n, x;
};
struct VerifyReport {
  std::vector<PairCertificate> certificates;
  std::vector<std::int64_t> uncertified;  // scheduled n without a certificate
  std::vector<std::int64_t> skipped;      // n beyond the representable horizon
  std::vector<SplitViolation> unsplit;
  std::vector<BlameEntry> blame;
  std::vector<std::string> violations;
  bool schedule_ok = true;
  bool ok() const { return violations.empty(); }
};

VerifyReport verify_transcript(const Transcript& t, const std::vector<std::string>& checks);
// recomputes the per-prime blame from the degrees against S
std::vector<BlameEntry> blame_ledger(const Transcript& t, const Supernatural& S);
// the transcript without its first move (schedule shifted)
Transcript drop_first(const Transcript& t);

struct LewisMincStep {
  Z m;
  Q eps;
  Z order;  // f_n = realize(c_order), order = 2 m_n
  std::optional<Q> lipschitz;  // m_{n+1} / (2 m_n) when m_{n+1} is known
  CertPtr cert;
  bool materialized;
};
std::vector<LewisMincStep> lewis_minc(std::int64_t k, std::int64_t max_depth = 3,
                                      std::int64_t bound = kDefaultMaterializeBound);

}  // namespace pseudoarc
