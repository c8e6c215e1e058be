#pragma once

#include <cstdint>
#include <vector>

namespace pseudoarc {

// Simplicial map I_m -> I_n given by its vertex values. Immutable.
class SimplicialMap {
 public:
  SimplicialMap() : n_(0), v_{0} {}
  // Validates steps and range; throws StepViolation / RangeViolation.
  SimplicialMap(std::int64_t codomain, std::vector<std::int64_t> values);

  std::int64_t codomain() const { return n_; }
  std::int64_t domain() const { return static_cast<std::int64_t>(v_.size()) - 1; }
  const std::vector<std::int64_t>& values() const { return v_; }
  std::int64_t operator()(std::int64_t i) const { return v_[static_cast<size_t>(i)]; }

  bool surjective() const;
  // endpoints plus every i where the step changes
  std::vector<std::int64_t> breakpoints() const;

  bool operator==(const SimplicialMap& o) const { return n_ == o.n_ && v_ == o.v_; }

 private:
  std::int64_t n_;
  std::vector<std::int64_t> v_;
};

SimplicialMap build_simplicial(std::int64_t codomain, std::vector<std::int64_t> values);
SimplicialMap identity_map(std::int64_t n);

SimplicialMap concat(const SimplicialMap& a, const SimplicialMap& b);
// e^n_{m,k}: i -> i + k
SimplicialMap include_map(std::int64_t n, std::int64_t m, std::int64_t k);
// r_m: i -> m - i
SimplicialMap reverse_map(std::int64_t m);
// s restricted to [a, b], re-indexed from 0
SimplicialMap slice(const SimplicialMap& s, std::int64_t a, std::int64_t b);
// values shifted by delta into a new codomain
SimplicialMap shift(const SimplicialMap& s, std::int64_t delta, std::int64_t codomain);
SimplicialMap reversed(const SimplicialMap& s);

// outer o inner, pointwise lookup
SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner);

}  // namespace pseudoarc
