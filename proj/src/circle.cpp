#include "pseudoarc/circle.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>

#include "pseudoarc/crooked.hpp"
#include "pseudoarc/errors.hpp"

namespace pseudoarc {

namespace {

std::int64_t offset_of(const PLMap& lift) {
  Q off = lift.points().back().y - lift.points().front().y;
  if (off.get_den() != 1) throw Error("RangeViolation", "lift offset " + qstr(off) + " is not an integer");
  if (!off.get_num().fits_slong_p()) throw Error("RangeViolation", "degree too large");
  return off.get_num().get_si();
}

std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

std::int64_t cyc(std::int64_t a, std::int64_t b, std::int64_t n) {
  std::int64_t d = mod(a - b, n);
  return std::min(d, n - d);
}

}  // namespace

CircleMap::CircleMap() : lift_(pl_identity()), deg_(1) {}

CircleMap::CircleMap(PLMap lift) : lift_(std::move(lift)), deg_(offset_of(lift_)) {}

Q CircleMap::lift_at(const Q& x) const {
  Z k = floor_q(x);
  Q r = x - k;
  return lift_(r) + Q(k * deg_);
}

Q CircleMap::operator()(const Q& x) const {
  Q v = lift_at(x);
  return v - floor_q(v);
}

bool CircleMap::surjective() const {
  return deg_ != 0 || lift_.max_value() - lift_.min_value() >= 1;
}

CircleMap circle_power(std::int64_t d) {
  return CircleMap(PLMap({{Q(0), Q(0)}, {Q(1), Q(d)}}));
}

CircleMap circle_rotate(const CircleMap& c, const Q& turns) {
  std::vector<Point> p = c.lift().points();
  for (auto& q : p) q.y += turns;
  return CircleMap(PLMap(std::move(p)));
}

CircleMap rogers_tent() { return CircleMap(pl_tent()); }

std::int64_t degree(const CircleMap& c) { return c.degree(); }

CircleMap compose_circle(const CircleMap& outer, const CircleMap& inner) {
  const auto& ip = inner.lift().points();
  std::vector<Q> ox;
  for (auto& p : outer.lift().points())
    if (p.x < 1) ox.push_back(p.x);
  std::vector<Point> out;
  out.push_back({ip[0].x, outer.lift_at(ip[0].y)});
  for (size_t k = 1; k < ip.size(); ++k) {
    const Point& a = ip[k - 1];
    const Point& b = ip[k];
    std::vector<Q> xs;
    if (a.y != b.y) {
      Q lo = qmin(a.y, b.y), hi = qmax(a.y, b.y);
      for (Z t = floor_q(lo); t <= floor_q(hi); ++t)
        for (auto& o : ox) {
          Q y = Q(t) + o;
          if (lo < y && y < hi) xs.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
        }
      std::sort(xs.begin(), xs.end());
    }
    for (auto& x : xs) out.push_back({x, outer.lift_at(inner.lift()(x))});
    out.push_back({b.x, outer.lift_at(b.y)});
  }
  Z shift = floor_q(out[0].y);
  for (auto& p : out) p.y -= shift;
  return CircleMap(PLMap(std::move(out)));
}

Q circle_gap(const Q& a, const Q& b) {
  Q t = a - b;
  t -= floor_q(t);
  return qmin(t, 1 - t);
}

Q circle_dist(const CircleMap& f, const CircleMap& g) {
  const auto& a = f.lift().points();
  const auto& b = g.lift().points();
  std::vector<Q> xs;
  for (auto& p : a) xs.push_back(p.x);
  for (auto& p : b) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  const Q half(1, 2);
  Q best(0), prev;
  for (size_t k = 0; k < xs.size(); ++k) {
    Q d = f.lift()(xs[k]) - g.lift()(xs[k]);
    best = qmax(best, circle_gap(d, Q(0)));
    if (k > 0) {
      // linear in between: a half-integer crossing reaches 1/2
      Q lo = qmin(prev, d), hi = qmax(prev, d);
      if (floor_q(hi - half) >= ceil_q(lo - half)) return half;
    }
    prev = d;
  }
  return best;
}

DegreeCheck close_degree_check(const CircleMap& a, const CircleMap& b) {
  DegreeCheck r{circle_dist(a, b), a.degree(), b.degree(), false, true};
  r.close = r.dist < Q(1, 2);
  r.ok = !r.close || r.deg_a == r.deg_b;
  return r;
}

CircularSimplicialMap::CircularSimplicialMap(std::int64_t n, const std::vector<std::int64_t>& v) {
  if (n < 1) throw Error("RangeViolation", "codomain order must be >= 1");
  if (v.empty()) throw Error("RangeViolation", "empty circular map");
  const std::int64_t m = static_cast<std::int64_t>(v.size());
  n_ = n;
  lift_.reserve(v.size() + 1);
  for (std::int64_t i = 0; i < m; ++i)
    if (v[i] < 0 || v[i] >= n) throw Error("RangeViolation", "value outside Z_n", {i, v[i]});
  lift_.push_back(v[0]);
  for (std::int64_t i = 0; i < m; ++i) {
    std::int64_t d = mod(v[(i + 1) % m] - v[i], n);
    if (2 * d > n) d -= n;
    if (d < -1 || d > 1) throw Error("StepViolation", "cyclic step larger than 1", {i});
    lift_.push_back(lift_.back() + d);
  }
  w_ = (lift_.back() - lift_.front()) / n;
}

CircularSimplicialMap CircularSimplicialMap::from_lift(std::int64_t n, std::vector<std::int64_t> l) {
  if (n < 1) throw Error("RangeViolation", "codomain order must be >= 1");
  if (l.size() < 2) throw Error("RangeViolation", "lift needs at least 2 values");
  for (size_t i = 1; i < l.size(); ++i)
    if (std::abs(l[i] - l[i - 1]) > 1)
      throw Error("StepViolation", "lift step larger than 1", {static_cast<std::int64_t>(i - 1)});
  if ((l.back() - l.front()) % n != 0) throw Error("RangeViolation", "lift does not close up");
  CircularSimplicialMap s;
  s.n_ = n;
  s.w_ = (l.back() - l.front()) / n;
  s.lift_ = std::move(l);
  return s;
}

std::int64_t CircularSimplicialMap::operator()(std::int64_t i) const {
  return mod(lift_[static_cast<size_t>(mod(i, domain()))], n_);
}

std::vector<std::int64_t> CircularSimplicialMap::values() const {
  std::vector<std::int64_t> v;
  v.reserve(lift_.size() - 1);
  for (size_t i = 0; i + 1 < lift_.size(); ++i) v.push_back(mod(lift_[i], n_));
  return v;
}

CircleMap realize_circle(const CircularSimplicialMap& s) {
  const std::int64_t m = s.domain();
  std::vector<Point> p;
  p.reserve(static_cast<size_t>(m) + 1);
  for (std::int64_t i = 0; i <= m; ++i) p.push_back({frac(i, m), frac(s.lift()[i], s.codomain())});
  return CircleMap(PLMap(std::move(p)));
}

CircularCrookedResult is_circularly_crooked(const CircularSimplicialMap& s) {
  const std::int64_t m = s.domain(), n = s.codomain();
  const std::vector<std::int64_t> v = s.values();
  // occurrences over two laps
  std::vector<std::vector<std::int64_t>> pos(static_cast<size_t>(n));
  for (std::int64_t t = 0; t < 2 * m; ++t) pos[v[t % m]].push_back(t);
  const std::int64_t INF = 4 * m;
  auto next = [&](std::int64_t x, std::int64_t t) {
    const auto& p = pos[static_cast<size_t>(mod(x, n))];
    auto it = std::lower_bound(p.begin(), p.end(), t);
    return it == p.end() ? INF : *it;
  };
  auto next_near = [&](std::int64_t x, std::int64_t t) {
    std::int64_t r = next(x, t);
    if (n > 1) r = std::min(r, next(x + 1, t));
    if (n > 2) r = std::min(r, next(x - 1, t));
    return r;
  };
  for (std::int64_t i = 0; i < m; ++i) {
    const std::int64_t a = v[i];
    for (std::int64_t b = 0; b < n; ++b) {
      if (cyc(a, b, n) < 2) continue;
      std::int64_t j = next(b, i + 1);
      if (j >= i + m) continue;
      // first approach to b, then a return next to a before j
      std::int64_t p = next_near(b, i);
      if (next_near(a, p) > j) return {false, i, j % m};
    }
  }
  return {true};
}

CrookedCircle crooked_circle_map(std::int64_t n, std::int64_t d, std::int64_t bound) {
  if (n < 1) throw Error("PreconditionViolated", "n must be >= 1");
  const std::int64_t laps = std::max<std::int64_t>(std::abs(d), 1) * (d == 0 ? 2 : 1);
  for (std::int64_t K = std::max(n + 1, 2 * n - 4); K <= 2 * n + 8; ++K) {
    std::int64_t up = crn_small(static_cast<std::uint64_t>(K));
    std::int64_t down = crn_small(static_cast<std::uint64_t>(K - n));
    if (up < 0 || (up + down) * laps > bound)
      throw Error("TooLarge", "crooked circle map of order " + std::to_string(n) +
                                  " exceeds the size bound");
    // climb 0..K crookedly, then fall back to n along a reversed smaller pattern
    std::vector<std::int64_t> one = canonical_crooked(K).values();
    auto back = canonical_crooked(K - n).values();
    for (size_t t = 1; t < back.size(); ++t) one.push_back(K - back[t]);
    std::vector<std::int64_t> l{0};
    if (d == 0) {
      for (size_t t = 1; t < one.size(); ++t) l.push_back(one[t]);
      for (size_t t = one.size() - 1; t-- > 0;) l.push_back(one[t]);
    } else {
      for (std::int64_t k = 0; k < std::abs(d); ++k)
        for (size_t t = 1; t < one.size(); ++t) l.push_back(one[t] + k * n);
      if (d < 0)
        for (auto& x : l) x = -x;
    }
    auto s = CircularSimplicialMap::from_lift(n, std::move(l));
    if (is_circularly_crooked(s).crooked) return {realize_circle(s), s, K};
  }
  throw Error("NotCrooked", "no certified pattern found for order " + std::to_string(n));
}

namespace {

struct Labels {
  std::int64_t count = 0;
  std::vector<std::int32_t> lab;  // -1 outside the set
};

template <class In>
Labels label(std::int64_t G, bool diag, In in) {
  Labels L;
  L.lab.assign(static_cast<size_t>(G * G), -1);
  std::vector<std::array<std::int64_t, 2>> nb{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  if (diag) nb.insert(nb.end(), {{{1, 1}}, {{1, -1}}, {{-1, 1}}, {{-1, -1}}});
  std::vector<std::int64_t> stack;
  for (std::int64_t s = 0; s < G * G; ++s) {
    if (L.lab[s] >= 0 || !in(s / G, s % G)) continue;
    const auto id = static_cast<std::int32_t>(L.count++);
    L.lab[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      std::int64_t c = stack.back();
      stack.pop_back();
      std::int64_t i = c / G, j = c % G;
      for (auto& [di, dj] : nb) {
        std::int64_t a = mod(i + di, G), b = mod(j + dj, G);
        std::int64_t t = a * G + b;
        if (L.lab[t] < 0 && in(a, b)) {
          L.lab[t] = id;
          stack.push_back(t);
        }
      }
    }
  }
  return L;
}

// longest cyclic run of false entries: (length, start)
std::pair<std::int64_t, std::int64_t> longest_gap(const std::vector<char>& hit) {
  const std::int64_t G = static_cast<std::int64_t>(hit.size());
  std::int64_t best = 0, start = -1, run = 0;
  for (std::int64_t t = 0; t < 2 * G; ++t) {
    if (hit[t % G]) {
      run = 0;
      continue;
    }
    if (++run > best) {
      best = std::min(run, G);
      start = mod(t - run + 1, G);
    }
  }
  return {best, start};
}

std::vector<GridComponent> summarize(const Labels& L, std::int64_t G) {
  std::vector<GridComponent> out;
  for (std::int64_t c = 0; c < L.count; ++c) {
    std::vector<char> hx(G, 0), hy(G, 0);
    std::int64_t size = 0;
    for (std::int64_t s = 0; s < G * G; ++s)
      if (L.lab[s] == c) {
        ++size;
        hx[s / G] = 1;
        hy[s % G] = 1;
      }
    auto [mx, sx] = longest_gap(hx);
    auto [my, sy] = longest_gap(hy);
    out.push_back({size, mx, sx, my, sy});
  }
  return out;
}

// f and g sampled on the grid, as integers over a common denominator
struct Samples {
  std::int64_t D;
  std::vector<std::int64_t> fx, gy;
};

Samples sample(const CircleMap& f, const CircleMap& g, std::int64_t G) {
  std::vector<Q> a, b;
  Z D = 1;
  for (std::int64_t i = 0; i < G; ++i) {
    a.push_back(f(frac(i, G)));
    b.push_back(g(frac(i, G)));
    D = lcm(D, a.back().get_den());
    D = lcm(D, b.back().get_den());
  }
  if (!(D < Z(1) << 40)) throw Error("TooLarge", "grid values need too large a denominator");
  Samples s;
  s.D = D.get_si();
  for (auto& q : a) s.fx.push_back(Z(q * D).get_si());
  for (auto& q : b) s.gy.push_back(Z(q * D).get_si());
  return s;
}

Labels near_set(const Samples& s, std::int64_t G) {
  // d(f(x), g(y)) < 1/2 - 1/G, scaled by 2 G D
  return label(G, false, [&](std::int64_t i, std::int64_t j) {
    std::int64_t k = mod(s.fx[i] - s.gy[j], s.D);
    std::int64_t gap = std::min(k, s.D - k);
    return static_cast<__int128>(2 * G) * gap < static_cast<__int128>(s.D) * (G - 2);
  });
}

}  // namespace

RogersReport near_commuting_components(const CircleMap& f, const CircleMap& g, std::int64_t G) {
  if (G < 64) throw Error("GridTooCoarse", "grid must be at least 64");
  RogersReport r;
  r.grid = G;
  r.tau = frac(1, G);
  Samples s = sample(f, g, G);
  r.components = summarize(near_set(s, G), G);
  Samples s2 = sample(f, g, 2 * G);
  r.components_2x = near_set(s2, 2 * G).count;
  if (r.components_2x != static_cast<std::int64_t>(r.components.size()))
    throw Error("GridTooCoarse", "component count changes under refinement",
                {static_cast<std::int64_t>(r.components.size()), r.components_2x});
  Labels ex = label(G, true, [&](std::int64_t i, std::int64_t j) { return s.fx[i] == s.gy[j]; });
  r.exact = summarize(ex, G);
  return r;
}

RogersReport rogers_witness_check(std::int64_t grid) {
  return near_commuting_components(circle_power(2), rogers_tent(), grid);
}

}  // namespace pseudoarc
