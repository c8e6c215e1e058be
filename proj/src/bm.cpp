#include "pseudoarc/bm.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include "pseudoarc/errors.hpp"

namespace pseudoarc {

const char* mover_name(Mover m) { return m == Mover::Eve ? "Eve" : "Odd"; }

const char* backend_name(BackendKind b) {
  switch (b) {
    case BackendKind::IntervalPL:
      return "interval";
    case BackendKind::FinSurj:
      return "finsurj";
    case BackendKind::CirclePL:
      return "circle";
  }
  return "?";
}

BackendKind parse_backend(const std::string& s) {
  if (s == "interval") return BackendKind::IntervalPL;
  if (s == "finsurj") return BackendKind::FinSurj;
  if (s == "circle") return BackendKind::CirclePL;
  throw Error("PreconditionViolated", "unknown backend " + s);
}

MapRef MapRef::interval(PLMap f, std::string rule) {
  MapRef m;
  m.kind = PL;
  m.pl = std::move(f);
  m.rule = std::move(rule);
  return m;
}

MapRef MapRef::canonical(Z n, std::string rule) {
  MapRef m;
  m.kind = Canonical;
  m.canonical_n = std::move(n);
  m.rule = std::move(rule);
  return m;
}

MapRef MapRef::unresolved_canonical(std::string rule) {
  MapRef m;
  m.kind = Canonical;
  m.resolved = false;
  m.rule = std::move(rule);
  return m;
}

MapRef MapRef::finite(std::int64_t codomain, std::vector<std::int64_t> v, std::string rule) {
  MapRef m;
  m.kind = Fin;
  m.fin_codomain = codomain;
  m.fin = std::move(v);
  m.rule = std::move(rule);
  return m;
}

MapRef MapRef::circle_map(CircleMap c, std::string rule, std::int64_t order) {
  MapRef m;
  m.kind = Circle;
  m.circle = std::move(c);
  m.rule = std::move(rule);
  m.circle_order = order;
  return m;
}

std::int64_t MapRef::degree() const {
  if (kind != Circle || !circle) throw Error("PreconditionViolated", "degree of a non-circle move");
  return circle->degree();
}

std::string MapRef::describe() const {
  std::ostringstream os;
  switch (kind) {
    case PL:
      os << rule << ":pl[" << pl->points().size() << "]";
      break;
    case Canonical:
      if (!resolved)
        os << rule << ":canonical(unresolved)";
      else if (canonical_n.get_str().size() > 24)
        os << rule << ":canonical(N~1e" << canonical_n.get_str().size() - 1 << ")";
      else
        os << rule << ":canonical(" << canonical_n.get_str() << ")";
      break;
    case Fin:
      os << rule << ":fin[" << fin.size() << "->" << fin_codomain << "]";
      break;
    case Circle:
      os << rule << ":circle(deg " << circle->degree() << ")";
      break;
  }
  return os.str();
}

// ---- schedule ----

EpsilonSchedule::EpsilonSchedule(Q eps0) {
  if (!(eps0 > 0)) throw Error("ScheduleExhausted", "eps_0 must be positive");
  eps_.push_back(eps0);
}

void EpsilonSchedule::step(const std::optional<Q>& lipschitz) {
  lip_.push_back(lipschitz);
  const auto n = static_cast<std::int64_t>(lip_.size()) - 1;
  const auto& last = eps_.back();
  if (!last || !lipschitz) {
    eps_.push_back(std::nullopt);
    return;
  }
  Q best = *last / 2;
  Q prod = 1;
  bool discrete = false;
  for (std::int64_t k = n; k >= 0; --k) {
    const auto& L = lip_[static_cast<size_t>(k)];
    const auto& ek = eps_[static_cast<size_t>(k)];
    if (!L || !ek) break;
    if (*L == 0) discrete = true;
    prod *= *L;
    Q target = *ek;
    mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), static_cast<mp_bitcnt_t>(n + 1 - k));
    Modulus m{discrete ? Q(0) : prod};
    Q d = m.delta(target);
    wit_.push_back({k, n + 1, target, m.lipschitz, d});
    if (d < best) best = d;
  }
  if (!(best > 0)) throw Error("ScheduleExhausted", "epsilon update failed at " + std::to_string(n + 1));
  eps_.push_back(best);
}

bool EpsilonSchedule::replay() const {
  if (eps_.empty() || !eps_[0]) return false;
  EpsilonSchedule s(*eps_[0]);
  for (auto& L : lip_) s.step(L);
  return s.eps_ == eps_;
}

// ---- play ----

namespace {

std::string subj(std::int64_t n, std::int64_t n2) {
  return "f_{" + std::to_string(n) + "," + std::to_string(n2) + "}";
}

[[noreturn]] void invalid(std::int64_t n, Mover who, const std::string& why) {
  throw Error("InvalidMove", "move " + std::to_string(n) + " by " + mover_name(who) + ": " + why,
              {n, who == Mover::Eve ? 0 : 1});
}

std::optional<Q> lipschitz_of(const MapRef& m, std::int64_t order_limit) {
  switch (m.kind) {
    case MapRef::PL:
      return modulus(*m.pl).lipschitz;
    case MapRef::Canonical:
      if (!m.resolved || m.canonical_n > order_limit) return std::nullopt;
      return frac(crn(m.canonical_n.get_ui()), m.canonical_n);
    case MapRef::Fin:
      return Q(0);  // discrete domain
    case MapRef::Circle:
      return modulus(m.circle->lift()).lipschitz;
  }
  return std::nullopt;
}

void validate(BackendKind b, const Transcript& t, const MapRef& m, std::int64_t n, Mover who) {
  switch (b) {
    case BackendKind::IntervalPL:
      if (m.kind == MapRef::Canonical) {
        if (m.resolved && m.canonical_n < 1) invalid(n, who, "canonical order < 1");
        return;
      }
      if (m.kind != MapRef::PL || !m.pl) invalid(n, who, "not an interval map");
      if (!m.pl->is_interval_map() || !m.pl->surjective()) invalid(n, who, "not a surjection of [0,1]");
      return;
    case BackendKind::FinSurj: {
      if (m.kind != MapRef::Fin) invalid(n, who, "not a finite map");
      if (m.fin.empty() || m.fin_codomain < 1) invalid(n, who, "empty set");
      if (n > 0 && m.fin_codomain != t.sizes[static_cast<size_t>(n)])
        invalid(n, who, "codomain has " + std::to_string(m.fin_codomain) + " points, X_" +
                            std::to_string(n) + " has " + std::to_string(t.sizes[static_cast<size_t>(n)]));
      std::vector<char> hit(static_cast<size_t>(m.fin_codomain), 0);
      for (auto v : m.fin) {
        if (v < 0 || v >= m.fin_codomain) invalid(n, who, "value out of range");
        hit[static_cast<size_t>(v)] = 1;
      }
      if (std::find(hit.begin(), hit.end(), 0) != hit.end()) invalid(n, who, "not surjective");
      return;
    }
    case BackendKind::CirclePL:
      if (m.kind != MapRef::Circle || !m.circle) invalid(n, who, "not a circle map");
      if (!m.circle->surjective()) invalid(n, who, "not surjective");
      return;
  }
}

// v_p(|d|), infinite for d = 0
Exp valuation(std::int64_t d, std::uint64_t p) {
  if (d == 0) return Exp::infinity();
  auto a = static_cast<std::uint64_t>(std::llabs(d));
  std::uint64_t k = 0;
  while (a % p == 0) {
    a /= p;
    ++k;
  }
  return {k, false};
}

Exp running_exponent(const Transcript& t, std::uint64_t p) {
  Exp e;
  for (auto& mv : t.moves) e = e + valuation(mv.map.degree(), p);
  return e;
}

std::vector<std::int64_t> random_surjection(std::mt19937_64& rng, std::int64_t codomain,
                                            std::int64_t size) {
  std::vector<std::int64_t> v(static_cast<size_t>(size));
  std::iota(v.begin(), v.begin() + codomain, 0);
  for (auto i = codomain; i < size; ++i)
    v[static_cast<size_t>(i)] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(codomain));
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

PLMap random_interval_surjection(std::mt19937_64& rng) {
  const int k = 2 + static_cast<int>(rng() % 4);
  std::vector<std::int64_t> xs;
  while (static_cast<int>(xs.size()) < k) {
    std::int64_t x = 1 + static_cast<std::int64_t>(rng() % 15);
    if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  std::vector<std::int64_t> ys(static_cast<size_t>(k + 2));
  for (auto& y : ys) y = static_cast<std::int64_t>(rng() % 9);
  // force both ends of the range
  ys[rng() % ys.size()] = 0;
  size_t top = rng() % ys.size();
  while (ys[top] == 0) top = rng() % ys.size();
  ys[top] = 8;
  if (std::find(ys.begin(), ys.end(), 0) == ys.end()) ys[top == 0 ? 1 : 0] = 0;
  std::vector<Point> pts{{Q(0), frac(ys[0], 8)}};
  for (int i = 0; i < k; ++i) pts.push_back({frac(xs[static_cast<size_t>(i)], 16), frac(ys[static_cast<size_t>(i + 1)], 8)});
  pts.push_back({Q(1), frac(ys.back(), 8)});
  return PLMap(pts);
}

CircleMap random_degree_one(std::mt19937_64& rng) {
  const int k = 1 + static_cast<int>(rng() % 4);
  std::vector<std::int64_t> xs;
  while (static_cast<int>(xs.size()) < k) {
    std::int64_t x = 1 + static_cast<std::int64_t>(rng() % 15);
    if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  Q y0 = frac(static_cast<std::int64_t>(rng() % 8), 8);
  std::vector<Point> pts{{Q(0), y0}};
  for (auto x : xs)
    pts.push_back({frac(x, 16), Q(y0 + frac(x, 16) + frac(static_cast<std::int64_t>(rng() % 9) - 4, 16))});
  pts.push_back({Q(1), Q(y0 + 1)});
  return CircleMap(PLMap(pts));
}

}  // namespace

Transcript play(BackendKind backend, const Strategy& eve, const Strategy& odd, std::int64_t rounds,
                const PlayConfig& config) {
  if (rounds < 0) throw Error("PreconditionViolated", "rounds must be >= 0");
  Transcript t;
  t.backend = backend;
  t.seed = config.seed;
  t.below = config.below;
  t.universe = config.universe;
  std::mt19937_64 rng(config.seed);
  EpsilonSchedule sched(config.eps0);
  if (backend == BackendKind::FinSurj) sched = EpsilonSchedule(Q(1));
  for (std::int64_t n = 0; n < 2 * rounds; ++n) {
    Mover who = n % 2 == 0 ? Mover::Eve : Mover::Odd;
    MapRef m = who == Mover::Eve ? eve(t, n, rng) : odd(t, n, rng);
    validate(backend, t, m, n, who);
    if (backend == BackendKind::FinSurj) {
      if (n == 0) t.sizes.push_back(m.fin_codomain);
      t.sizes.push_back(static_cast<std::int64_t>(m.fin.size()));
    }
    auto L = lipschitz_of(m, config.lipschitz_order_limit);
    t.moves.push_back({who, std::move(m), sched.eps()[static_cast<size_t>(n)], L});
    sched.step(L);
  }
  t.witnesses = sched.witnesses();
  if (t.below && backend == BackendKind::CirclePL) t.blame = blame_ledger(t, *t.below);
  return t;
}

// ---- strategies ----

Strategy eve_identity() {
  return [](const Transcript& t, std::int64_t n, std::mt19937_64& rng) -> MapRef {
    switch (t.backend) {
      case BackendKind::IntervalPL:
        return MapRef::interval(pl_identity(), "identity");
      case BackendKind::FinSurj: {
        std::int64_t k = n == 0 ? 1 + static_cast<std::int64_t>(rng() % 4) : t.sizes[static_cast<size_t>(n)];
        std::vector<std::int64_t> v(static_cast<size_t>(k));
        std::iota(v.begin(), v.end(), 0);
        return MapRef::finite(k, v, "identity");
      }
      case BackendKind::CirclePL:
        return MapRef::circle_map(CircleMap(), "identity");
    }
    throw Error("PreconditionViolated", "backend");
  };
}

Strategy eve_random() {
  return [](const Transcript& t, std::int64_t n, std::mt19937_64& rng) -> MapRef {
    switch (t.backend) {
      case BackendKind::IntervalPL:
        return MapRef::interval(random_interval_surjection(rng), "random");
      case BackendKind::FinSurj: {
        std::int64_t k = n == 0 ? 1 + static_cast<std::int64_t>(rng() % 4) : t.sizes[static_cast<size_t>(n)];
        std::int64_t size = k + static_cast<std::int64_t>(rng() % 4);
        return MapRef::finite(k, random_surjection(rng, k, size), "random");
      }
      case BackendKind::CirclePL:
        return MapRef::circle_map(random_degree_one(rng), "random");
    }
    throw Error("PreconditionViolated", "backend");
  };
}

Strategy eve_inject_degree(std::int64_t move, std::int64_t d) {
  auto id = eve_identity();
  return [=](const Transcript& t, std::int64_t n, std::mt19937_64& rng) -> MapRef {
    if (n == move) return MapRef::circle_map(circle_power(d), "power");
    return id(t, n, rng);
  };
}

Strategy eve_scripted(std::vector<MapRef> moves) {
  auto id = eve_identity();
  return [=](const Transcript& t, std::int64_t n, std::mt19937_64& rng) -> MapRef {
    auto k = static_cast<size_t>(n / 2);
    if (k < moves.size()) return moves[k];
    return id(t, n, rng);
  };
}

Strategy odd_identity() { return eve_identity(); }

Strategy odd_crooked() {
  return [](const Transcript& t, std::int64_t n, std::mt19937_64&) -> MapRef {
    if (t.backend == BackendKind::CirclePL)
      return MapRef::circle_map(crooked_circle_map(4, 1).map, "crooked", 4);
    if (t.backend != BackendKind::IntervalPL)
      throw Error("PreconditionViolated", "crooked strategy needs the interval or circle backend");
    // eps_n from the schedule as recorded so far
    EpsilonSchedule s(t.moves.empty() ? Q(1) : *t.moves[0].eps);
    for (auto& mv : t.moves) s.step(mv.lipschitz);
    const auto& e = s.eps()[static_cast<size_t>(n)];
    if (!e) return MapRef::unresolved_canonical("crooked");
    // least N with 1/N < eps
    Z N = floor_q(Q(1) / *e) + 1;
    return MapRef::canonical(N, "crooked");
  };
}

Strategy odd_split() {
  return [](const Transcript& t, std::int64_t n, std::mt19937_64&) -> MapRef {
    if (t.backend != BackendKind::FinSurj)
      throw Error("PreconditionViolated", "split strategy needs the finsurj backend");
    std::int64_t k = t.sizes[static_cast<size_t>(n)];
    std::vector<std::int64_t> v(static_cast<size_t>(2 * k));
    for (std::int64_t i = 0; i < 2 * k; ++i) v[static_cast<size_t>(i)] = i / 2;
    return MapRef::finite(k, v, "split");
  };
}

std::vector<std::uint64_t> zigzag_primes(std::int64_t count) {
  std::vector<std::uint64_t> primes, out;
  std::uint64_t c = 1;
  while (static_cast<std::int64_t>(out.size()) < count) {
    do ++c;
    while (!is_prime(c));
    primes.push_back(c);
    for (auto it = primes.rbegin(); it != primes.rend() && static_cast<std::int64_t>(out.size()) < count; ++it)
      out.push_back(*it);
  }
  return out;
}

Strategy odd_solenoid(Supernatural S, std::vector<std::uint64_t> enumeration, std::int64_t order) {
  return [=](const Transcript& t, std::int64_t n, std::mt19937_64&) -> MapRef {
    if (t.backend != BackendKind::CirclePL)
      throw Error("PreconditionViolated", "solenoid strategy needs the circle backend");
    auto k = static_cast<size_t>(n / 2);
    std::uint64_t p = enumeration.empty() ? zigzag_primes(static_cast<std::int64_t>(k) + 1)[k]
                                          : enumeration[k % enumeration.size()];
    Exp e = running_exponent(t, p), s = S.at(p);
    bool room = e <= s && !(e == s);
    std::int64_t d = room ? static_cast<std::int64_t>(p) : 1;
    return MapRef::circle_map(crooked_circle_map(order, d).map, "solenoid", order);
  };
}

Strategy odd_strategy(const std::string& kind) {
  if (kind == "identity") return odd_identity();
  if (kind == "crooked") return odd_crooked();
  if (kind == "split") return odd_split();
  throw Error("PreconditionViolated", "unknown strategy " + kind);
}

// ---- verification ----

std::vector<BlameEntry> blame_ledger(const Transcript& t, const Supernatural& S) {
  std::set<std::uint64_t> primes(t.universe.begin(), t.universe.end());
  for (auto& mv : t.moves) {
    auto d = mv.map.degree();
    if (d != 0)
      for (auto [p, e] : factorize_int(static_cast<std::uint64_t>(std::llabs(d)))) primes.insert(p);
  }
  std::vector<BlameEntry> out;
  for (auto p : primes) {
    Exp e, s = S.at(p);
    for (size_t n = 0; n < t.moves.size(); ++n) {
      Exp next = e + valuation(t.moves[n].map.degree(), p);
      if (!(next <= s)) {
        out.push_back({p, static_cast<std::int64_t>(n), t.moves[n].mover});
        break;
      }
      e = next;
    }
  }
  return out;
}

namespace {

CertPtr certify_move(const MapRef& m, std::int64_t n, const Q& eps) {
  std::int64_t len = m.canonical_n <= 64 ? crn_small(m.canonical_n.get_ui()) : -1;
  if (len >= 0 && len <= 100'000)
    return certify_combinatorial(subj(n, n + 1), canonical_crooked(m.canonical_n.get_si()), eps);
  return certify_canonical(subj(n, n + 1), m.canonical_n, eps);
}

void check_crooked_schedule(const Transcript& t, VerifyReport& r) {
  const auto M = static_cast<std::int64_t>(t.moves.size());
  for (std::int64_t n = 0; n < M; ++n) {
    const auto& en = t.moves[static_cast<size_t>(n)].eps;
    if (!en) {
      r.skipped.push_back(n);
      continue;
    }
    // first resolved crooked move at or after n
    std::int64_t j = n;
    while (j < M && !(t.moves[static_cast<size_t>(j)].map.kind == MapRef::Canonical &&
                      t.moves[static_cast<size_t>(j)].map.resolved && t.moves[static_cast<size_t>(j)].eps))
      ++j;
    if (j == M) {
      // the play ended (or left the representable range) before a crooked move
      bool horizon = std::any_of(t.moves.begin() + n, t.moves.end(), [](const Move& mv) {
        return mv.map.kind == MapRef::Canonical && !mv.map.resolved;
      });
      bool later = n > 0 && n >= M - 1;
      if (horizon || later)
        r.skipped.push_back(n);
      else
        r.uncertified.push_back(n);
      continue;
    }
    try {
      const auto& mj = t.moves[static_cast<size_t>(j)];
      CertPtr c = certify_move(mj.map, j, *mj.eps);
      if (j > n) {
        Q P = 1;
        bool known = true;
        for (auto i = n; i < j; ++i) {
          const auto& L = t.moves[static_cast<size_t>(i)].lipschitz;
          if (!L) known = false;
          else P *= *L;
        }
        if (!known) {
          r.skipped.push_back(n);
          continue;
        }
        c = propagate_right(subj(n, j + 1), Modulus{P}, c, *en);
      }
      replay(*c);
      r.certificates.push_back({n, j + 1, c->eps, c});
    } catch (const Error&) {
      r.uncertified.push_back(n);
    }
  }
  for (auto n : r.uncertified) r.violations.push_back("no crookedness certificate for " + subj(n, n + 1) + " onward");
}

void check_schedule(const Transcript& t, VerifyReport& r) {
  // stored eps_{n+1} must be within every recorded bound
  std::vector<std::optional<Q>> eps, lip;
  for (auto& mv : t.moves) {
    eps.push_back(mv.eps);
    lip.push_back(mv.lipschitz);
  }
  for (size_t n = 0; n + 1 < eps.size(); ++n) {
    if (!eps[n + 1]) continue;
    if (!eps[n] || !lip[n]) {
      r.schedule_ok = false;
      continue;
    }
    Q best = *eps[n] / 2, prod = 1;
    bool discrete = false;
    for (auto k = static_cast<std::int64_t>(n); k >= 0; --k) {
      const auto& L = lip[static_cast<size_t>(k)];
      const auto& ek = eps[static_cast<size_t>(k)];
      if (!L || !ek) break;
      if (*L == 0) discrete = true;
      prod *= *L;
      Q target = *ek;
      mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), static_cast<mp_bitcnt_t>(n + 1 - static_cast<size_t>(k)));
      Q d = Modulus{discrete ? Q(0) : prod}.delta(target);
      if (d < best) best = d;
    }
    if (*eps[n + 1] > best) r.schedule_ok = false;
  }
  if (!r.schedule_ok) r.violations.push_back("epsilon schedule not respected");
}

void check_splits(const Transcript& t, VerifyReport& r) {
  if (t.backend != BackendKind::FinSurj) {
    r.violations.push_back("splits_every_point needs the finsurj backend");
    return;
  }
  const auto M = t.moves.size();
  for (size_t n = 0; n < M; ++n) {
    // f_{n,M} : X_M -> X_n
    std::vector<std::int64_t> g(static_cast<size_t>(t.sizes[M]));
    std::iota(g.begin(), g.end(), 0);
    for (size_t i = M; i-- > n;)
      for (auto& v : g) v = t.moves[i].map.fin[static_cast<size_t>(v)];
    std::vector<std::int64_t> count(static_cast<size_t>(t.sizes[n]), 0);
    for (auto v : g) ++count[static_cast<size_t>(v)];
    for (size_t x = 0; x < count.size(); ++x)
      if (count[x] < 2) r.unsplit.push_back({static_cast<std::int64_t>(n), static_cast<std::int64_t>(x)});
  }
  if (!r.unsplit.empty())
    r.violations.push_back(std::to_string(r.unsplit.size()) + " points never split");
}

}  // namespace

VerifyReport verify_transcript(const Transcript& t, const std::vector<std::string>& checks) {
  VerifyReport r;
  for (auto& c : checks) {
    if (c == "crooked_schedule") {
      if (t.backend != BackendKind::IntervalPL) {
        r.violations.push_back("crooked_schedule needs the interval backend");
        continue;
      }
      check_schedule(t, r);
      check_crooked_schedule(t, r);
    } else if (c == "splits_every_point") {
      check_splits(t, r);
    } else if (c == "type_budget") {
      if (!t.below || t.backend != BackendKind::CirclePL) {
        r.violations.push_back("type_budget needs a circle transcript with a bound S");
        continue;
      }
      r.blame = blame_ledger(t, *t.below);
      for (auto& b : r.blame)
        r.violations.push_back("prime " + std::to_string(b.prime) + " over budget at move " +
                               std::to_string(b.move) + " (" + mover_name(b.mover) + ")");
    } else {
      throw Error("PreconditionViolated", "unknown check " + c);
    }
  }
  return r;
}

Transcript drop_first(const Transcript& t) {
  if (t.moves.empty()) throw Error("PreconditionViolated", "empty transcript");
  Transcript r = t;
  r.moves.erase(r.moves.begin());
  r.witnesses.clear();
  for (auto w : t.witnesses)
    if (w.k > 0) {
      --w.k;
      --w.n;
      r.witnesses.push_back(w);
    }
  if (!r.sizes.empty()) r.sizes.erase(r.sizes.begin());
  if (r.below && r.backend == BackendKind::CirclePL) r.blame = blame_ledger(r, *r.below);
  return r;
}

// ---- Lewis-Minc ----

std::vector<LewisMincStep> lewis_minc(std::int64_t k, std::int64_t max_depth, std::int64_t bound) {
  if (k < 0) throw Error("PreconditionViolated", "depth must be >= 0");
  if (k > max_depth) throw Error("DepthTooLarge", "depth " + std::to_string(k) + " exceeds " + std::to_string(max_depth));
  std::vector<Z> m{Z(1)};
  // one extra term for the Lipschitz constant of the last map, when affordable
  for (std::int64_t n = 0; n <= k; ++n) {
    Z order = 2 * m.back();
    if (order > 1'000'000) break;
    m.push_back(crn(order.get_ui()));
  }
  std::vector<LewisMincStep> out;
  for (std::int64_t n = 0; n <= k; ++n) {
    LewisMincStep s;
    s.m = m[static_cast<size_t>(n)];
    s.eps = frac(1, s.m);
    s.order = 2 * s.m;
    if (static_cast<size_t>(n + 1) < m.size()) s.lipschitz = frac(m[static_cast<size_t>(n + 1)], s.order);
    std::int64_t len = s.order <= 64 ? crn_small(s.order.get_ui()) : -1;
    s.materialized = len >= 0 && len <= bound;
    std::string name = "f_" + std::to_string(n);
    s.cert = s.materialized ? certify_combinatorial(name, canonical_crooked(s.order.get_si()), s.eps)
                            : certify_canonical(name, s.order, s.eps);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace pseudoarc
