#include "pseudoarc/factorization.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <tuple>

#include "pseudoarc/errors.hpp"

namespace pseudoarc {

namespace {

using Vec = std::vector<std::int64_t>;
using NodePtr = std::shared_ptr<const SymMap::Node>;

std::int64_t crn64(std::int64_t n) {
  std::int64_t v = crn_small(static_cast<std::uint64_t>(n));
  if (v < 0) throw Error("TooLarge", "crn(" + std::to_string(n) + ") exceeds 64 bits");
  return v;
}

void check_cofactor_pre(const SimplicialMap& s) {
  const std::int64_t m = s.domain(), n = s.codomain();
  if (!s.surjective()) throw Error("PreconditionViolated", "s is not surjective");
  if (s(0) != 0 || s(m) != n)
    throw Error("PreconditionViolated", "need s(0) = 0 and s(m) = n", {0, m});
  std::map<std::int64_t, std::int64_t> seen;
  for (std::int64_t b : s.breakpoints()) {
    auto [it, fresh] = seen.emplace(s(b), b);
    if (!fresh)
      throw Error("PreconditionViolated",
                  "break-points " + std::to_string(it->second) + " and " + std::to_string(b) +
                      " share value " + std::to_string(s(b)),
                  {it->second, b});
  }
}

}  // namespace

SymMap cofactor_symbolic(const SimplicialMap& s) {
  check_cofactor_pre(s);
  const std::int64_t m = s.domain();
  std::map<std::tuple<std::int64_t, std::int64_t, int>, NodePtr> memo;
  // P(a, b, dir): read s from a towards b, minimum at a and maximum at b.
  // Result maps I_crn(r) to absolute positions in I_m.
  std::function<NodePtr(std::int64_t, std::int64_t, int)> P = [&](std::int64_t a, std::int64_t b,
                                                                  int dir) -> NodePtr {
    auto key = std::make_tuple(a, b, dir);
    if (auto f = memo.find(key); f != memo.end()) return f->second;
    const std::int64_t L = (b - a) * dir;
    const std::int64_t lo = s(a), r = s(b) - lo;
    auto u = [&](std::int64_t t) { return s(a + dir * t) - lo; };
    NodePtr out;
    if (r == 0) {
      out = sym_leaf(m, {a});
    } else if (r == 1) {
      if (L != 1) throw Error("IncoherentData", "cofactor base case with long domain");
      out = sym_leaf(m, {a, b});
    } else {
      std::int64_t b1 = L - 1, b2 = 1;
      for (std::int64_t t = 0; t < L - 1; ++t)
        if (u(t) == r - 1) {
          b1 = t;
          break;
        }
      for (std::int64_t t = 2; t <= L; ++t)
        if (u(t) == 1) {
          b2 = t;
          break;
        }
      std::vector<SymMap::Part> parts;
      parts.push_back({P(a, a + dir * b1, dir), false, 1, Z(0)});
      if (b1 <= b2)
        parts.push_back({P(a + dir * b2, a + dir * b1, -dir), true, 1, Z(0)});
      else
        parts.push_back({P(a + dir * b2, a + dir * b1, dir), true, 1, Z(0)});
      parts.push_back({P(a + dir * b2, b, dir), false, 1, Z(0)});
      out = sym_concat(std::move(parts), Z(m));
    }
    memo[key] = out;
    return out;
  };
  return SymMap(P(0, m, 1));
}

SimplicialMap cofactor_to_canonical(const SimplicialMap& s, std::int64_t bound) {
  SymMap w = cofactor_symbolic(s);
  SimplicialMap sp = w.materialize(bound);
  if (compose(s, sp) != canonical_crooked(s.codomain(), false, bound))
    throw Error("IncoherentData", "cofactor failed self-verification");
  return sp;
}

namespace {

Vec ftc_general(const Vec& v, std::int64_t n);

// unique minimum 0 at the start, unique maximum n at the end
Vec ftc_special(const Vec& w, std::int64_t n) {
  const auto m = static_cast<std::int64_t>(w.size()) - 1;
  std::int64_t b1 = -1, b2 = -1;
  for (std::int64_t i = 0; i <= m; ++i)
    if (w[static_cast<size_t>(i)] == n - 1) {
      b1 = i;
      break;
    }
  for (std::int64_t i = m; i >= 0; --i)
    if (w[static_cast<size_t>(i)] == 1) {
      b2 = i;
      break;
    }
  if (b1 < 0 || b2 < 0 || b1 > b2) throw Error("IncoherentData", "sweep is not crooked");
  auto sub = [&](std::int64_t a, std::int64_t b, std::int64_t d) {
    Vec out(w.begin() + a, w.begin() + b + 1);
    for (auto& x : out) x -= d;
    return out;
  };
  Vec p0 = ftc_general(sub(0, b1, 0), n - 1);
  Vec p1 = ftc_general(sub(b1, b2, 1), n - 2);
  Vec p2 = ftc_general(sub(b2, m, 1), n - 1);
  const std::int64_t c1 = crn64(n - 1), c2 = crn64(n - 2), c = crn64(n);
  Vec out(static_cast<size_t>(m + 1));
  for (std::int64_t i = 0; i <= b1; ++i) out[static_cast<size_t>(i)] = p0[static_cast<size_t>(i)];
  for (std::int64_t i = 0; i <= b2 - b1; ++i)
    out[static_cast<size_t>(b1 + i)] = c1 + c2 - p1[static_cast<size_t>(i)];
  for (std::int64_t i = 0; i <= m - b2; ++i)
    out[static_cast<size_t>(b2 + i)] = c - c1 + p2[static_cast<size_t>(i)];
  return out;
}

Vec ftc_general(const Vec& v, std::int64_t n) {
  const auto m = static_cast<std::int64_t>(v.size()) - 1;
  if (n == 0) return Vec(v.size(), 0);
  if (n == 1) return v;
  const std::int64_t c = crn64(n);
  std::vector<std::int64_t> E;
  for (std::int64_t i = 0; i <= m; ++i) {
    auto x = v[static_cast<size_t>(i)];
    if (x == 0 || x == n) E.push_back(i);
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> sweeps;
  for (size_t t = 0; t + 1 < E.size(); ++t)
    if (v[static_cast<size_t>(E[t])] != v[static_cast<size_t>(E[t + 1])])
      sweeps.emplace_back(E[t], E[t + 1]);
  if (sweeps.empty()) throw Error("IncoherentData", "surjection without a full sweep");
  Vec out(v.size());
  // piece between two points of the same extreme value (or an end of the domain)
  auto fill = [&](std::int64_t lo, std::int64_t hi, std::int64_t anchor) {
    if (lo >= hi) {
      out[static_cast<size_t>(lo)] = anchor == 0 ? 0 : c;
      return;
    }
    Vec w(v.begin() + lo, v.begin() + hi + 1);
    if (anchor == 0) {
      std::int64_t np = *std::max_element(w.begin(), w.end());
      Vec t = ftc_general(w, np);
      for (size_t i = 0; i < t.size(); ++i) out[static_cast<size_t>(lo) + i] = t[i];
    } else {
      std::int64_t vmin = *std::min_element(w.begin(), w.end());
      std::int64_t np = n - vmin;
      for (auto& x : w) x -= vmin;
      Vec t = ftc_general(w, np);
      std::int64_t base = c - crn64(np);
      for (size_t i = 0; i < t.size(); ++i) out[static_cast<size_t>(lo) + i] = base + t[i];
    }
  };
  fill(0, sweeps.front().first, v[static_cast<size_t>(sweeps.front().first)]);
  for (size_t t = 0; t < sweeps.size(); ++t) {
    auto [a, b] = sweeps[t];
    Vec w(v.begin() + a, v.begin() + b + 1);
    if (w.front() == 0) {
      Vec p = ftc_special(w, n);
      for (size_t i = 0; i < p.size(); ++i) out[static_cast<size_t>(a) + i] = p[i];
    } else {
      std::reverse(w.begin(), w.end());
      Vec p = ftc_special(w, n);
      for (size_t i = 0; i < p.size(); ++i) out[static_cast<size_t>(b) - i] = p[i];
    }
    if (t + 1 < sweeps.size()) fill(b, sweeps[t + 1].first, v[static_cast<size_t>(b)]);
  }
  fill(sweeps.back().second, m, v[static_cast<size_t>(sweeps.back().second)]);
  return out;
}

}  // namespace

SimplicialMap factor_through_canonical(const SimplicialMap& s) {
  if (!s.surjective()) throw Error("NotSurjective", "factor_through_canonical needs a surjection");
  auto r = is_crooked(s);
  if (!r.crooked)
    throw Error("NotCrooked",
                "pair (" + std::to_string(r.i) + "," + std::to_string(r.j) + ") fails", {r.i, r.j});
  const std::int64_t n = s.codomain();
  Vec out = ftc_general(s.values(), n);
  SimplicialMap sp(crn64(n), std::move(out));
  if (compose(canonical_crooked(n), sp) != s)
    throw Error("IncoherentData", "factor_through_canonical failed self-verification");
  return sp;
}

SimplicialMap simplicial_approximate(const PLMap& f, std::int64_t n, const Q& eps,
                                     std::int64_t bound) {
  if (n < 1) throw Error("DegenerateCodomain", "n must be positive");
  if (!(eps > frac(1, 2 * n))) throw Error("EpsilonTooSmall", "need eps > 1/(2n)");
  if (!f.is_interval_map()) throw Error("RangeViolation", "f leaves [0,1]");
  const Q L = modulus(f).lipschitz;
  // grid containing every breakpoint, fine enough that a cell moves f by <= 1/n
  Z D = 1;
  for (auto& p : f.points()) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), p.x.get_den_mpz_t());
  Z k = ceil_q(L * n / Q(D));
  if (k < 1) k = 1;
  Z m = D * k;
  auto build = [&](const Z& mm) {
    Vec v;
    std::int64_t M = mm.get_si();
    v.reserve(static_cast<size_t>(M + 1));
    const auto& pts = f.points();
    size_t seg = 1;
    for (std::int64_t i = 0; i <= M; ++i) {
      Q x = frac(i, M);
      while (seg + 1 < pts.size() && pts[seg].x < x) ++seg;
      const Point& a = pts[seg - 1];
      const Point& b = pts[seg];
      Q y = a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
      Q t = y * n - Q(1, 2);
      v.push_back(ceil_q(t).get_si());
    }
    return v;
  };
  if (m <= bound) {
    SimplicialMap s(n, build(m));
    if (sup_dist(realize(s), f) < eps) return s;
  }
  // breakpoints off a small common grid: uniform grid, refine until the bound holds
  Q margin = eps - frac(1, 2 * n);
  Z mm = ceil_q(L / qmin(margin, frac(1, n))) + 1;
  for (int tries = 0; tries < 40; ++tries) {
    if (mm > bound) break;
    Vec v = build(mm);
    bool ok = true;
    for (size_t i = 1; i < v.size() && ok; ++i) ok = std::abs(v[i] - v[i - 1]) <= 1;
    if (ok) {
      SimplicialMap s(n, std::move(v));
      if (sup_dist(realize(s), f) < eps) return s;
    }
    mm *= 2;
  }
  throw Error("TooLarge", "simplicial approximation grid exceeds the materialization bound");
}

PLMap endpoint_fixer(const PLMap& g) {
  std::vector<Q> A, B;
  for (auto& p : g.points()) {
    if (p.y == 0) A.push_back(p.x);
    if (p.y == 1) B.push_back(p.x);
  }
  if (A.empty() || B.empty()) throw Error("NotSurjective", "g misses 0 or 1");
  std::vector<Q> best;
  Q best_len;
  for (auto& xa : A)
    for (auto& xb : B) {
      std::vector<Q> w = xa < xb ? std::vector<Q>{xa, Q(0), Q(1), xb}
                                 : std::vector<Q>{xa, Q(1), Q(0), xb};
      w.erase(std::unique(w.begin(), w.end()), w.end());
      Q len = 0;
      for (size_t i = 1; i < w.size(); ++i) len += qabs(w[i] - w[i - 1]);
      if (best.empty() || w.size() < best.size() || (w.size() == best.size() && len < best_len)) {
        best = w;
        best_len = len;
      }
    }
  std::vector<Point> pts;
  Q acc = 0;
  pts.push_back({Q(0), best[0]});
  for (size_t i = 1; i < best.size(); ++i) {
    acc += qabs(best[i] - best[i - 1]);
    pts.push_back({acc / best_len, best[i]});
  }
  pts.back().x = 1;
  return PLMap(std::move(pts));
}

std::optional<CrookedApprox> crooked_approximate_at(const PLMap& g, std::int64_t n) {
  if (!g.surjective()) throw Error("NotSurjective", "g must be surjective");
  if (n < 1) return std::nullopt;
  PLMap g0 = endpoint_fixer(g);
  PLMap h = compose(g, g0);
  const auto& p = h.points();
  const size_t k = p.size() - 1;
  // extrema: start of a non-flat segment whose direction differs from the last one
  std::vector<int> dir(k);
  for (size_t i = 0; i < k; ++i) dir[i] = p[i + 1].y > p[i].y ? 1 : (p[i + 1].y < p[i].y ? -1 : 0);
  std::vector<size_t> ext{0};
  int last = 0;
  for (size_t i = 0; i < k; ++i) {
    if (dir[i] == 0) continue;
    if (last != 0 && dir[i] != last) ext.push_back(i);
    last = dir[i];
  }
  ext.push_back(k);
  // distinct levels for interior extrema, nearest first, inside [1, n-1]
  std::vector<size_t> order(ext.begin() + 1, ext.end() - 1);
  const std::int64_t T = static_cast<std::int64_t>(order.size());
  if (T > n - 1) return std::nullopt;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return p[a].y < p[b].y || (p[a].y == p[b].y && a < b); });
  auto rnd = [&](const Q& y) { return ceil_q(y * n - Q(1, 2)).get_si(); };
  std::vector<std::int64_t> lev(order.size());
  for (size_t t = 0; t < order.size(); ++t) {
    std::int64_t want = std::max<std::int64_t>(1, rnd(p[order[t]].y));
    lev[t] = t == 0 ? want : std::max(want, lev[t - 1] + 1);
  }
  for (size_t t = order.size(); t-- > 0;) {
    std::int64_t cap = t + 1 == order.size() ? n - 1 : lev[t + 1] - 1;
    lev[t] = std::min(lev[t], cap);
  }
  std::map<size_t, std::int64_t> J{{0, 0}, {k, n}};
  for (size_t t = 0; t < order.size(); ++t) J[order[t]] = lev[t];
  // extrema must still alternate
  for (size_t e = 1; e + 1 < ext.size(); ++e) {
    std::int64_t a = J[ext[e - 1]], b = J[ext[e]], c = J[ext[e + 1]];
    if (!((b > a && b > c) || (b < a && b < c))) return std::nullopt;
  }
  // monotone runs: keep interior points that stay strictly inside the run
  std::vector<std::pair<size_t, std::int64_t>> kept;
  for (size_t e = 0; e + 1 < ext.size(); ++e) {
    size_t a = ext[e], b = ext[e + 1];
    std::int64_t ja = J[a], jb = J[b];
    kept.emplace_back(a, ja);
    std::int64_t prev = ja;
    for (size_t i = a + 1; i < b; ++i) {
      std::int64_t j = rnd(p[i].y);
      // overshoot past the shifted extremum level: stop one short of it
      j = jb > ja ? std::min(j, jb - 1) : std::max(j, jb + 1);
      bool ok = jb > ja ? (j > prev && j < jb) : (j < prev && j > jb);
      if (ok) {
        kept.emplace_back(i, j);
        prev = j;
      }
    }
  }
  kept.emplace_back(k, n);
  std::vector<Point> hh;
  for (auto& [i, j] : kept) hh.push_back({p[i].x, frac(j, n)});
  PLMap hhat(hh);
  // s from the snapped path at unit speed, h' its reparametrization
  Vec sv{0};
  std::vector<Point> hp{{Q(0), Q(0)}};
  std::int64_t mtot = 0;
  for (size_t t = 1; t < kept.size(); ++t) mtot += std::abs(kept[t].second - kept[t - 1].second);
  std::int64_t acc = 0;
  for (size_t t = 1; t < kept.size(); ++t) {
    std::int64_t from = kept[t - 1].second, to = kept[t].second;
    std::int64_t st = to > from ? 1 : -1;
    for (std::int64_t v = from + st;; v += st) {
      sv.push_back(v);
      if (v == to) break;
    }
    acc += std::abs(to - from);
    hp.push_back({frac(acc, mtot), p[kept[t].first].x});
  }
  SimplicialMap s(n, sv);
  PLMap hprime(hp);
  SymMap sp = cofactor_symbolic(s);
  CrookedApprox out;
  out.n = n;
  out.gp = MapChain({compose(g0, hprime), sp});
  out.dist = sup_dist(h, hhat);
  out.h = h;
  out.hhat = hhat;
  return out;
}

CrookedApprox crooked_approximate(const PLMap& g, const Q& eps, std::int64_t max_n) {
  if (!g.surjective()) throw Error("NotSurjective", "g must be surjective");
  for (std::int64_t n = 1; n <= max_n; ++n) {
    auto a = crooked_approximate_at(g, n);
    if (a && a->dist < eps) return *a;
  }
  throw Error("TooLarge", "no grid order up to " + std::to_string(max_n) + " reaches eps");
}

FactorizeResult crooked_factorize(const PLMap& g, const Q& eps, std::int64_t max_n) {
  if (!g.surjective()) throw Error("NotSurjective", "g must be surjective");
  if (!(eps > 0)) throw Error("EpsilonTooSmall", "eps must be positive");
  for (std::int64_t n = 1; n <= max_n; ++n) {
    auto a = crooked_approximate_at(g, n);
    if (!a) continue;
    Q inner = frac(33, 64 * n);
    if (a->dist + inner > eps) continue;
    FactorizeResult R;
    R.n = n;
    R.eps = eps;
    R.eps_inner = inner;
    // largest delta with delta <= 2 (3/(4n) - inner)
    R.delta = 2 * (frac(3, 4 * n) - inner);
    R.approx = *a;
    PLMap gcopy = g;
    CrookedApprox ap = *a;
    Q delta = R.delta;
    R.resolve = [gcopy, ap, delta, inner, eps, n](const FInput& f) -> Resolution {
      if (f.cert_eps > delta)
        throw Error("CertificateTooWeak",
                    "certificate " + qstr(f.cert_eps) + " exceeds delta " + qstr(delta));
      std::vector<MapChain::Stage> st = ap.gp.stages();
      Resolution res;
      std::optional<PLMap> fmap;
      if (f.canonical_n) {
        std::int64_t N = *f.canonical_n;
        if (!(frac(1, N) < f.cert_eps))
          throw Error("CertificateTooWeak", "canonical order too small for its certificate");
        st.push_back(canonical_lift(N, n));
        Q dq = 0;
        for (std::int64_t j = 0; j <= N; ++j)
          dq = qmax(dq, qabs(frac(round_level(j, n, N), n) - frac(j, N)));
        res.part_f = dq;
        std::int64_t len = crn_small(static_cast<std::uint64_t>(N));
        if (len >= 0 && len < 200'000) fmap = realize(canonical_crooked(N));
      } else {
        if (!f.map) throw Error("PreconditionViolated", "resolver needs a map");
        SimplicialMap s = simplicial_approximate(*f.map, n, inner);
        if (!s.surjective()) throw Error("IncoherentData", "approximation not surjective");
        auto r = is_crooked(s);
        if (!r.crooked)
          throw Error("IncoherentData", "certified map approximated by a non-crooked map",
                      {r.i, r.j});
        st.push_back(SymMap::from(factor_through_canonical(s)));
        res.part_f = sup_dist(realize(s), *f.map);
        fmap = f.map;
      }
      res.part_g = ap.dist;
      res.bound = res.part_f + res.part_g;
      res.h = MapChain(st);
      if (!(res.bound < eps)) throw Error("IncoherentData", "resolver bound not below eps");
      if (fmap) {
        if (auto hm = res.h.materialize()) {
          Q d = sup_dist(*fmap, compose(gcopy, *hm));
          if (d > res.bound) throw Error("IncoherentData", "exact distance above bound");
          res.exact = d;
        }
      }
      return res;
    };
    return R;
  }
  throw Error("TooLarge", "no grid order up to " + std::to_string(max_n) + " fits eps");
}

Amalgam amalgamate_interval(const PLMap& f, const PLMap& g, const Q& eps) {
  if (!f.surjective() || !g.surjective()) throw Error("NotSurjective", "f and g must be onto");
  if (!(eps > 0)) throw Error("EpsilonTooSmall", "eps must be positive");
  PLMap uf = endpoint_fixer(f), ug = endpoint_fixer(g);
  PLMap F = compose(f, uf), G = compose(g, ug);
  Q LF = modulus(F).lipschitz, LG = modulus(G).lipschitz;
  std::int64_t K = ceil_q(2 * (LF + LG) / eps).get_si() + 1;
  for (; K <= 8192; K *= 2) {
    Q margin = eps - (LF + LG) / Q(K);
    if (!(margin > 0)) continue;
    std::vector<Q> fv(static_cast<size_t>(K + 1)), gv(static_cast<size_t>(K + 1));
    for (std::int64_t a = 0; a <= K; ++a) {
      fv[static_cast<size_t>(a)] = F(frac(a, K));
      gv[static_cast<size_t>(a)] = G(frac(a, K));
    }
    const auto W = static_cast<size_t>(K + 1);
    auto ok = [&](size_t a, size_t b) { return qabs(fv[a] - gv[b]) < margin; };
    std::vector<std::int64_t> parent(W * W, -1);
    std::deque<size_t> dq{0};
    parent[0] = 0;
    const int da[8] = {1, 1, 0, -1, 1, -1, 0, -1}, db[8] = {1, 0, 1, 1, -1, 0, -1, -1};
    while (!dq.empty() && parent[W * W - 1] < 0) {
      size_t cur = dq.front();
      dq.pop_front();
      auto a = static_cast<std::int64_t>(cur / W), b = static_cast<std::int64_t>(cur % W);
      for (int d = 0; d < 8; ++d) {
        std::int64_t na = a + da[d], nb = b + db[d];
        if (na < 0 || nb < 0 || na > K || nb > K) continue;
        size_t nx = static_cast<size_t>(na) * W + static_cast<size_t>(nb);
        if (parent[nx] >= 0 || !ok(static_cast<size_t>(na), static_cast<size_t>(nb))) continue;
        parent[nx] = static_cast<std::int64_t>(cur);
        dq.push_back(nx);
      }
    }
    if (parent[W * W - 1] < 0) continue;
    std::vector<size_t> path{W * W - 1};
    while (path.back() != 0) path.push_back(static_cast<size_t>(parent[path.back()]));
    std::reverse(path.begin(), path.end());
    const auto len = static_cast<std::int64_t>(path.size()) - 1;
    std::vector<Point> pp, qq;
    for (std::int64_t t = 0; t <= len; ++t) {
      size_t c = path[static_cast<size_t>(t)];
      pp.push_back({frac(t, len), frac(static_cast<std::int64_t>(c / W), K)});
      qq.push_back({frac(t, len), frac(static_cast<std::int64_t>(c % W), K)});
    }
    Amalgam out{compose(uf, PLMap(pp)), compose(ug, PLMap(qq)), Q(0), K};
    out.dist = sup_dist(compose(f, out.fp), compose(g, out.gp));
    if (out.dist < eps) return out;
  }
  throw Error("TooLarge", "amalgamation grid exceeded");
}

}  // namespace pseudoarc
