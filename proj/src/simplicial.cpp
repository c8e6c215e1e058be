#include "pseudoarc/simplicial.hpp"

#include <algorithm>
#include <string>

#include "pseudoarc/errors.hpp"

namespace pseudoarc {

SimplicialMap::SimplicialMap(std::int64_t codomain, std::vector<std::int64_t> values)
    : n_(codomain), v_(std::move(values)) {
  if (n_ < 0) throw Error("RangeViolation", "negative codomain size");
  if (v_.empty()) throw Error("RangeViolation", "empty value sequence");
  for (size_t i = 0; i < v_.size(); ++i) {
    if (v_[i] < 0 || v_[i] > n_)
      throw Error("RangeViolation",
                  "value " + std::to_string(v_[i]) + " at " + std::to_string(i) +
                      " outside [0," + std::to_string(n_) + "]",
                  {static_cast<std::int64_t>(i)});
    if (i > 0 && std::abs(v_[i] - v_[i - 1]) > 1)
      throw Error("StepViolation", "step at " + std::to_string(i - 1) + " exceeds 1",
                  {static_cast<std::int64_t>(i - 1)});
  }
}

bool SimplicialMap::surjective() const {
  auto [lo, hi] = std::minmax_element(v_.begin(), v_.end());
  return *lo == 0 && *hi == n_;
}

std::vector<std::int64_t> SimplicialMap::breakpoints() const {
  std::vector<std::int64_t> b{0};
  std::int64_t m = domain();
  for (std::int64_t i = 1; i < m; ++i) {
    auto k = static_cast<size_t>(i);
    if (v_[k + 1] - v_[k] != v_[k] - v_[k - 1]) b.push_back(i);
  }
  if (m > 0) b.push_back(m);
  return b;
}

SimplicialMap build_simplicial(std::int64_t codomain, std::vector<std::int64_t> values) {
  return SimplicialMap(codomain, std::move(values));
}

SimplicialMap identity_map(std::int64_t n) { return include_map(n, n, 0); }

SimplicialMap concat(const SimplicialMap& a, const SimplicialMap& b) {
  if (a.codomain() != b.codomain())
    throw Error("ConcatMismatch", "codomain sizes differ");
  if (a.values().back() != b.values().front())
    throw Error("ConcatMismatch", "endpoint values differ");
  std::vector<std::int64_t> v = a.values();
  v.insert(v.end(), b.values().begin() + 1, b.values().end());
  return SimplicialMap(a.codomain(), std::move(v));
}

SimplicialMap include_map(std::int64_t n, std::int64_t m, std::int64_t k) {
  if (m < 0 || k < 0 || m + k > n) throw Error("IncludeOutOfRange", "need m + k <= n");
  std::vector<std::int64_t> v(static_cast<size_t>(m + 1));
  for (std::int64_t i = 0; i <= m; ++i) v[static_cast<size_t>(i)] = i + k;
  return SimplicialMap(n, std::move(v));
}

SimplicialMap reverse_map(std::int64_t m) {
  std::vector<std::int64_t> v(static_cast<size_t>(m + 1));
  for (std::int64_t i = 0; i <= m; ++i) v[static_cast<size_t>(i)] = m - i;
  return SimplicialMap(m, std::move(v));
}

SimplicialMap slice(const SimplicialMap& s, std::int64_t a, std::int64_t b) {
  if (a < 0 || b > s.domain() || a > b) throw Error("IndexOutOfRange", "bad slice");
  return SimplicialMap(s.codomain(), std::vector<std::int64_t>(s.values().begin() + a,
                                                               s.values().begin() + b + 1));
}

SimplicialMap shift(const SimplicialMap& s, std::int64_t delta, std::int64_t codomain) {
  std::vector<std::int64_t> v = s.values();
  for (auto& x : v) x += delta;
  return SimplicialMap(codomain, std::move(v));
}

SimplicialMap reversed(const SimplicialMap& s) {
  std::vector<std::int64_t> v(s.values().rbegin(), s.values().rend());
  return SimplicialMap(s.codomain(), std::move(v));
}

SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner) {
  if (inner.codomain() != outer.domain())
    throw Error("DomainMismatch", "inner codomain " + std::to_string(inner.codomain()) +
                                      " != outer domain " + std::to_string(outer.domain()));
  std::vector<std::int64_t> v(inner.values().size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = outer(inner.values()[i]);
  return SimplicialMap(outer.codomain(), std::move(v));
}

}  // namespace pseudoarc
