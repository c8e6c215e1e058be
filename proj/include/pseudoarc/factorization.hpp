#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "pseudoarc/crooked.hpp"
#include "pseudoarc/plmap.hpp"
#include "pseudoarc/simplicial.hpp"
#include "pseudoarc/symbolic.hpp"

namespace pseudoarc {

// s o s' == c_n. Needs s(0)=0, s(m)=n and s injective on break-points.
SimplicialMap cofactor_to_canonical(const SimplicialMap& s,
                                    std::int64_t bound = kDefaultMaterializeBound);
// same, kept as a shared DAG; never materializes c_n
SymMap cofactor_symbolic(const SimplicialMap& s);
// c_n o s' == s for crooked surjective s.
SimplicialMap factor_through_canonical(const SimplicialMap& s);

// sup_dist(realize(s), f) < eps with s: I_m -> I_n
SimplicialMap simplicial_approximate(const PLMap& f, std::int64_t n, const Q& eps,
                                     std::int64_t bound = kDefaultMaterializeBound);

// surjective PL u with g(u(0)) = 0 and g(u(1)) = 1
PLMap endpoint_fixer(const PLMap& g);

struct CrookedApprox {
  std::int64_t n = 0;
  MapChain gp;     // g'
  Q dist;          // exact sup_dist(g o g', realize(c_n))
  PLMap h, hhat;   // g o g'_0 and its grid snap
};
// g o g' ~ realize(c_n) for this n; nullopt when n is too small for the snap
std::optional<CrookedApprox> crooked_approximate_at(const PLMap& g, std::int64_t n);
// least n with dist < eps
CrookedApprox crooked_approximate(const PLMap& g, const Q& eps, std::int64_t max_n = 64);

// f handed to the resolver: a PL map or the realization of c_N
struct FInput {
  std::optional<PLMap> map;
  std::optional<std::int64_t> canonical_n;
  Q cert_eps;
};
struct Resolution {
  MapChain h;
  Q bound;                 // exact upper bound on sup_dist(f, g o h)
  Q part_f, part_g;        // bound = part_f + part_g
  std::optional<Q> exact;  // sup_dist(f, g o h) when small enough to expand
};
struct FactorizeResult {
  Q delta;
  std::int64_t n = 0;
  Q eps, eps_inner;
  CrookedApprox approx;
  std::function<Resolution(const FInput&)> resolve;
};
FactorizeResult crooked_factorize(const PLMap& g, const Q& eps, std::int64_t max_n = 64);

struct Amalgam {
  PLMap fp, gp;
  Q dist;
  std::int64_t grid = 0;
};
Amalgam amalgamate_interval(const PLMap& f, const PLMap& g, const Q& eps);

}  // namespace pseudoarc
