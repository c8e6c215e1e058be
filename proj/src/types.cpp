#include "pseudoarc/types.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "pseudoarc/errors.hpp"

namespace pseudoarc {

namespace {

Exp minus(const Exp& a, const Exp& b) {  // a - b, b <= a, b finite
  if (a.inf) return Exp::infinity();
  return {a.k - b.k, false};
}

std::set<std::uint64_t> keys(const Supernatural& a, const Supernatural& b) {
  std::set<std::uint64_t> k;
  for (auto& [p, e] : a.exceptions()) k.insert(p);
  for (auto& [p, e] : b.exceptions()) k.insert(p);
  return k;
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize_int(std::uint64_t k) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> f;
  for (std::uint64_t d = 2; d * d <= k; ++d) {
    if (k % d) continue;
    std::uint64_t e = 0;
    while (k % d == 0) {
      k /= d;
      ++e;
    }
    f.push_back({d, e});
  }
  if (k > 1) f.push_back({k, 1});
  return f;
}

Supernatural Supernatural::zero() {
  Supernatural s;
  s.zero_ = true;
  return s;
}

Supernatural Supernatural::of(std::uint64_t k) {
  if (k == 0) return zero();
  std::map<std::uint64_t, Exp> e;
  for (auto [p, m] : factorize_int(k)) e[p] = {m, false};
  return make({}, e);
}

Supernatural Supernatural::make(Exp def, std::map<std::uint64_t, Exp> exceptions) {
  for (auto& [p, e] : exceptions)
    if (!is_prime(p)) throw Error("RangeViolation", std::to_string(p) + " is not a prime");
  Supernatural s;
  s.def_ = def;
  s.exc_ = std::move(exceptions);
  s.canonicalize();
  return s;
}

Supernatural Supernatural::prime_power(std::uint64_t p, Exp e) { return make({}, {{p, e}}); }

Supernatural Supernatural::power_inf(const std::set<std::uint64_t>& primes) {
  std::map<std::uint64_t, Exp> e;
  for (auto p : primes) e[p] = Exp::infinity();
  return make({}, e);
}

void Supernatural::canonicalize() {
  for (auto it = exc_.begin(); it != exc_.end();) {
    if (it->second == def_)
      it = exc_.erase(it);
    else
      ++it;
  }
}

Exp Supernatural::at(std::uint64_t p) const {
  if (zero_) return Exp::infinity();
  auto it = exc_.find(p);
  return it == exc_.end() ? def_ : it->second;
}

bool Supernatural::operator==(const Supernatural& o) const {
  if (zero_ || o.zero_) return zero_ == o.zero_;
  return def_ == o.def_ && exc_ == o.exc_;
}

std::string Supernatural::str() const {
  if (zero_) return "0";
  std::ostringstream os;
  bool first = true;
  if (!(def_ == Exp{})) {
    os << "*^" << def_.str();
    first = false;
  }
  for (auto& [p, e] : exc_) {
    if (!first) os << "*";
    first = false;
    os << p;
    if (!(e == Exp{1, false})) os << "^" << e.str();
  }
  return first ? "1" : os.str();
}

Supernatural mul(const Supernatural& a, const Supernatural& b) {
  if (a.is_zero() || b.is_zero()) return Supernatural::zero();
  std::map<std::uint64_t, Exp> e;
  for (auto p : keys(a, b)) e[p] = a.at(p) + b.at(p);
  return Supernatural::make(a.default_exp() + b.default_exp(), e);
}

bool leq(const Supernatural& a, const Supernatural& b) {
  if (b.is_zero()) return true;
  if (a.is_zero()) return false;
  if (!(a.default_exp() <= b.default_exp())) return false;
  for (auto p : keys(a, b))
    if (!(a.at(p) <= b.at(p))) return false;
  return true;
}

bool type_equiv(const Supernatural& a, const Supernatural& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  // cofinitely many primes sit at the defaults
  if (!(a.default_exp() == b.default_exp())) return false;
  for (auto p : keys(a, b))
    if (a.at(p).inf != b.at(p).inf) return false;
  return true;
}

std::optional<Supernatural> multiplication_solve(const Supernatural& s, const Supernatural& sp) {
  if (s.is_zero()) {
    if (sp.is_zero()) return Supernatural::zero();
    return std::nullopt;
  }
  if (sp.is_zero()) return Supernatural::zero();
  if (!leq(s, sp)) return std::nullopt;
  auto solve = [](const Exp& a, const Exp& b) { return a.inf ? Exp{} : minus(b, a); };
  std::map<std::uint64_t, Exp> e;
  for (auto p : keys(s, sp)) e[p] = solve(s.at(p), sp.at(p));
  return Supernatural::make(solve(s.default_exp(), sp.default_exp()), e);
}

bool in_degree_set(std::int64_t k, const PrimeSet& P) {
  if (k == 0) return false;
  for (auto [p, e] : factorize_int(static_cast<std::uint64_t>(std::llabs(k))))
    if (!P.contains(p)) return false;
  return true;
}

bool in_type_set(const Supernatural& t, const PrimeSet& P) {
  if (t.is_zero()) return false;
  if (t.default_exp() == Exp{}) {
    for (auto& [p, e] : t.exceptions())
      if (!(e == Exp{}) && !P.contains(p)) return false;
    return true;
  }
  // cofinite support needs a cofinite P missing only zero-exponent primes
  if (!P.cofinite) return false;
  for (auto p : P.primes)
    if (!(t.at(p) == Exp{})) return false;
  return true;
}

std::int64_t DegreeSequenceSpec::at(std::int64_t n) const {
  if (cycle.empty()) throw Error("RangeViolation", "degree cycle is empty");
  if (n < static_cast<std::int64_t>(prefix.size())) return prefix[static_cast<size_t>(n)];
  n -= static_cast<std::int64_t>(prefix.size());
  return cycle[static_cast<size_t>(n % static_cast<std::int64_t>(cycle.size()))];
}

DegreeSequenceSpec DegreeSequenceSpec::drop(std::int64_t n) const {
  if (cycle.empty()) throw Error("RangeViolation", "degree cycle is empty");
  DegreeSequenceSpec r;
  const auto P = static_cast<std::int64_t>(prefix.size());
  if (n <= P) {
    r.prefix.assign(prefix.begin() + n, prefix.end());
    r.cycle = cycle;
    return r;
  }
  const auto C = static_cast<std::int64_t>(cycle.size());
  std::int64_t k = (n - P) % C;
  r.cycle.assign(cycle.begin() + k, cycle.end());
  r.cycle.insert(r.cycle.end(), cycle.begin(), cycle.begin() + k);
  return r;
}

Supernatural product(const DegreeSequenceSpec& s) {
  if (s.cycle.empty()) throw Error("RangeViolation", "degree cycle is empty");
  Supernatural out;
  for (auto k : s.prefix) out = mul(out, Supernatural::of(static_cast<std::uint64_t>(std::llabs(k))));
  // every prime of the cycle repeats forever
  std::map<std::uint64_t, Exp> inf;
  for (auto k : s.cycle) {
    if (k == 0) return Supernatural::zero();
    for (auto [p, e] : factorize_int(static_cast<std::uint64_t>(std::llabs(k)))) inf[p] = Exp::infinity();
  }
  return mul(out, Supernatural::make({}, inf));
}

TypeClass::TypeClass(const Supernatural& rep) : rep_(rep) {}

Supernatural TypeClass::canonical() const {
  if (rep_.is_zero()) return rep_;
  Exp def = rep_.default_exp().inf ? Exp::infinity() : Exp{};
  std::map<std::uint64_t, Exp> e;
  for (auto& [p, x] : rep_.exceptions())
    if (x.inf != def.inf) e[p] = x.inf ? Exp::infinity() : Exp{};
  return Supernatural::make(def, e);
}

TypeClass type_of_sequence(const DegreeSequenceSpec& spec) {
  if (spec.cycle.empty()) throw Error("RangeViolation", "degree cycle is empty");
  for (auto k : spec.cycle)
    if (k == 0) return TypeClass(Supernatural::zero());
  // cut past the last zero
  std::int64_t cut = 0;
  for (size_t i = 0; i < spec.prefix.size(); ++i)
    if (spec.prefix[i] == 0) cut = static_cast<std::int64_t>(i) + 1;
  return TypeClass(product(spec.drop(cut)));
}

Supernatural type_of_map_data(const DegreeSequenceSpec& sX, std::int64_t m0,
                              const DegreeSequenceSpec& sY, std::int64_t n0,
                              std::int64_t f0_degree) {
  if (m0 < 0 || n0 < 0) throw Error("PreconditionViolated", "cuts must be non-negative");
  Supernatural tx = product(sX.drop(m0));
  Supernatural ty = product(sY.drop(n0));
  Supernatural target = mul(Supernatural::of(static_cast<std::uint64_t>(std::llabs(f0_degree))), tx);
  auto t = multiplication_solve(ty, target);
  if (!t)
    throw Error("IncoherentData", "degree data not coherent: " + ty.str() + " does not divide " +
                                      target.str());
  return *t;
}

}  // namespace pseudoarc
