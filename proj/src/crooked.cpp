#include "pseudoarc/crooked.hpp"

#include <algorithm>
#include <mutex>

#include "pseudoarc/errors.hpp"

namespace pseudoarc {

namespace {

constexpr std::uint64_t kTable = 4096;

const std::vector<Z>& crn_table() {
  static const std::vector<Z> t = [] {
    std::vector<Z> v(kTable + 1);
    v[0] = 0;
    v[1] = 1;
    for (std::uint64_t k = 2; k <= kTable; ++k) v[k] = 2 * v[k - 1] + v[k - 2];
    return v;
  }();
  return t;
}

// [[2,1],[1,0]]^n = [[P(n+1), P(n)], [P(n), P(n-1)]]
Z crn_matrix(std::uint64_t n) {
  Z a = 1, b = 0, c = 0, d = 1;   // result
  Z e = 2, f = 1, g = 1, h = 0;   // base
  while (n) {
    if (n & 1) {
      Z na = a * e + b * g, nb = a * f + b * h, nc = c * e + d * g, nd = c * f + d * h;
      a = na, b = nb, c = nc, d = nd;
    }
    n >>= 1;
    if (n) {
      Z ne = e * e + f * g, nf = e * f + f * h, ng = g * e + h * g, nh = g * f + h * h;
      e = ne, f = nf, g = ng, h = nh;
    }
  }
  return b;
}

}  // namespace

Z crn(std::uint64_t n) {
  if (n <= kTable) return crn_table()[n];
  return crn_matrix(n);
}

std::int64_t crn_small(std::uint64_t n) {
  if (n > 60) return -1;
  const Z& z = crn_table()[n];
  if (!z.fits_slong_p()) return -1;
  return z.get_si();
}

SimplicialMap canonical_crooked(std::int64_t n, bool reversed_flag, std::int64_t bound) {
  if (n < 0) throw Error("RangeViolation", "negative order");
  std::int64_t len = crn_small(static_cast<std::uint64_t>(n));
  if (len < 0 || len + 1 > bound)
    throw Error("TooLarge", "c_" + std::to_string(n) + " exceeds the materialization bound");
  // c_k for k = n-1 and n-2 kept; build upward
  std::vector<std::int64_t> prev2{0};      // c_0
  std::vector<std::int64_t> prev1{0, 1};   // c_1
  if (n == 0) return SimplicialMap(0, prev2);
  for (std::int64_t k = 2; k <= n; ++k) {
    std::vector<std::int64_t> cur = prev1;
    cur.reserve(2 * prev1.size() + prev2.size());
    for (size_t t = prev2.size() - 1; t-- > 0;) cur.push_back(prev2[t] + 1);
    for (size_t t = 1; t < prev1.size(); ++t) cur.push_back(prev1[t] + 1);
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  if (reversed_flag) std::reverse(prev1.begin(), prev1.end());
  return SimplicialMap(n, std::move(prev1));
}

std::int64_t eval_point(std::int64_t n, const Z& index) {
  if (n < 0) throw Error("RangeViolation", "negative order");
  if (index < 0 || index > crn(static_cast<std::uint64_t>(n)))
    throw Error("IndexOutOfRange", "index outside [0, crn(n)]");
  Z i = index;
  std::int64_t acc = 0;
  bool rev = false;
  while (n >= 2) {
    auto un = static_cast<std::uint64_t>(n);
    if (rev) {
      i = crn(un) - i;
      rev = false;
    }
    Z a = crn(un - 1);
    if (i <= a) {
      n -= 1;
      continue;
    }
    Z b = crn(un - 2);
    if (i <= a + b) {
      i -= a;
      acc += 1;
      n -= 2;
      rev = true;
    } else {
      i -= a + b;
      acc += 1;
      n -= 1;
    }
  }
  if (n == 0) return acc;
  std::int64_t v = i.get_si();
  return acc + (rev ? 1 - v : v);
}

std::int64_t eval_point_recursive(std::int64_t n, const Z& i) {
  if (n < 0) throw Error("RangeViolation", "negative order");
  auto un = static_cast<std::uint64_t>(n);
  if (i < 0 || i > crn(un)) throw Error("IndexOutOfRange", "index outside [0, crn(n)]");
  if (n == 0) return 0;
  if (n == 1) return i.get_si();
  Z a = crn(un - 1), b = crn(un - 2);
  if (i <= a) return eval_point_recursive(n - 1, i);
  if (i <= a + b) return 1 + eval_point_recursive(n - 2, b - (i - a));
  return 1 + eval_point_recursive(n - 1, i - a - b);
}

bool pair_ok(const SimplicialMap& s, std::int64_t i, std::int64_t j) {
  std::int64_t a = s(i), b = s(j);
  std::int64_t jp = i;
  while (std::abs(s(jp) - b) > 1) ++jp;  // terminates at j at the latest
  for (std::int64_t ip = j; ip >= jp; --ip)
    if (std::abs(s(ip) - a) <= 1) return true;
  return false;
}

CrookedResult is_crooked(const SimplicialMap& s) {
  const std::int64_t n = s.codomain();
  const std::int64_t m = s.domain();
  std::vector<std::vector<std::int64_t>> occ(static_cast<size_t>(n + 1));
  for (std::int64_t i = 0; i <= m; ++i) occ[static_cast<size_t>(s(i))].push_back(i);
  constexpr std::int64_t kNone = -1;
  auto next_at = [&](std::int64_t v, std::int64_t i) -> std::int64_t {
    if (v < 0 || v > n) return kNone;
    const auto& o = occ[static_cast<size_t>(v)];
    auto it = std::lower_bound(o.begin(), o.end(), i);
    return it == o.end() ? kNone : *it;
  };
  auto prev_at = [&](std::int64_t v, std::int64_t j) -> std::int64_t {
    if (v < 0 || v > n) return kNone;
    const auto& o = occ[static_cast<size_t>(v)];
    auto it = std::upper_bound(o.begin(), o.end(), j);
    return it == o.begin() ? kNone : *(it - 1);
  };
  // For fixed i and target value b, the first hit j of b is the hardest j.
  // Pairs with |s(j) - s(i)| <= 2 always pass.
  for (std::int64_t i = 0; i <= m; ++i) {
    const std::int64_t a = s(i);
    for (int dir : {1, -1}) {
      for (std::int64_t b = a + 3 * dir; b >= 0 && b <= n; b += dir) {
        std::int64_t j = next_at(b, i);
        if (j == kNone) break;
        std::int64_t jp = next_at(b - dir, i);
        std::int64_t ip = std::max({prev_at(a - 1, j), prev_at(a, j), prev_at(a + 1, j)});
        if (ip < jp) return {false, i, j};
      }
    }
  }
  return {};
}

CrookedVerdict eps_crooked_decide(const SimplicialMap& s, const Q& eps) {
  const std::int64_t n = s.codomain();
  if (n < 1) throw Error("DegenerateCodomain", "sandwich needs n >= 1");
  Q lo = frac(1, n), hi = frac(3, 2 * n);
  auto r = is_crooked(s);
  if (r.crooked && eps > lo) return {CrookedVerdict::Certified, eps, -1, -1, lo, hi};
  if (!r.crooked && eps <= hi) return {CrookedVerdict::Refuted, eps, r.i, r.j, lo, hi};
  return {CrookedVerdict::Indeterminate, eps, -1, -1, lo, hi};
}

const char* rule_name(Certificate::Rule r) {
  switch (r) {
    case Certificate::CombinatorialCheck: return "CombinatorialCheck";
    case Certificate::ComposeLeft: return "ComposeLeft";
    case Certificate::ComposeRight: return "ComposeRight";
    case Certificate::Perturbation: return "Perturbation";
  }
  return "?";
}

CertPtr certify_combinatorial(const std::string& subject, const SimplicialMap& s, const Q& eps) {
  auto v = eps_crooked_decide(s, eps);
  if (v.kind != CrookedVerdict::Certified) {
    if (!is_crooked(s).crooked) throw Error("NotCrooked", subject + " is not crooked", {v.i, v.j});
    throw Error("EpsilonTooSmall", "eps must exceed 1/n for " + subject);
  }
  auto c = std::make_shared<Certificate>();
  c->subject = subject;
  c->eps = eps;
  c->rule = Certificate::CombinatorialCheck;
  c->order = s.codomain();
  c->avatar = s;
  return c;
}

CertPtr certify_canonical(const std::string& subject, const Z& N, const Q& eps) {
  if (N < 1) throw Error("DegenerateCodomain", "canonical order must be >= 1");
  if (!(eps > Q(1) / Q(N))) throw Error("EpsilonTooSmall", "eps must exceed 1/N");
  auto c = std::make_shared<Certificate>();
  c->subject = subject;
  c->eps = eps;
  c->rule = Certificate::CombinatorialCheck;
  c->order = N;
  c->canonical = true;
  c->canonical_n = N;
  return c;
}

CertPtr propagate_left(const std::string& subject, CertPtr g_cert) {
  auto c = std::make_shared<Certificate>();
  c->subject = subject;
  c->eps = g_cert->eps;
  c->rule = Certificate::ComposeLeft;
  c->premise = std::move(g_cert);
  return c;
}

CertPtr propagate_right(const std::string& subject, const Modulus& g_mod, CertPtr f_cert,
                        std::optional<Q> eps) {
  Q e = eps ? *eps : (g_mod.lipschitz == 0 ? f_cert->eps : Q(g_mod.lipschitz * f_cert->eps));
  if (!(e > 0)) throw Error("ModulusMismatch", "eps must be positive");
  if (f_cert->eps > g_mod.delta(e))
    throw Error("ModulusMismatch", "premise eps " + qstr(f_cert->eps) +
                                       " exceeds modulus delta " + qstr(g_mod.delta(e)));
  auto c = std::make_shared<Certificate>();
  c->subject = subject;
  c->eps = e;
  c->rule = Certificate::ComposeRight;
  c->param = g_mod.lipschitz;
  c->premise = std::move(f_cert);
  return c;
}

CertPtr propagate_perturb(const std::string& subject, CertPtr f_cert, const Q& dist,
                          std::optional<Q> delta) {
  Q d = delta ? *delta : dist;
  if (dist > d) throw Error("DistanceTooLarge", "distance " + qstr(dist) + " exceeds " + qstr(d));
  auto c = std::make_shared<Certificate>();
  c->subject = subject;
  c->eps = f_cert->eps + 2 * d;
  c->rule = Certificate::Perturbation;
  c->param = d;
  c->premise = std::move(f_cert);
  return c;
}

Q replay(const Certificate& c) {
  switch (c.rule) {
    case Certificate::CombinatorialCheck: {
      if (c.avatar) {
        if (Z(c.avatar->codomain()) != c.order) throw Error("IncoherentData", "order mismatch");
        auto r = is_crooked(*c.avatar);
        if (!r.crooked) throw Error("NotCrooked", c.subject + " avatar fails", {r.i, r.j});
      } else if (c.canonical && c.canonical_n <= 12) {
        auto s = canonical_crooked(c.canonical_n.get_si());
        if (!is_crooked(s).crooked) throw Error("NotCrooked", c.subject);
      }
      if (!(c.eps > Q(1) / Q(c.order))) throw Error("EpsilonTooSmall", c.subject);
      return c.eps;
    }
    case Certificate::ComposeLeft:
      return replay(*c.premise);
    case Certificate::ComposeRight: {
      Q e = replay(*c.premise);
      Modulus m{c.param};
      if (e > m.delta(c.eps)) throw Error("ModulusMismatch", c.subject);
      return c.param == 0 ? c.eps : Q(c.param * e);
    }
    case Certificate::Perturbation:
      return replay(*c.premise) + 2 * c.param;
  }
  throw Error("IncoherentData", "unknown rule");
}

}  // namespace pseudoarc
