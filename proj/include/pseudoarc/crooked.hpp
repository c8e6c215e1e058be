#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pseudoarc/plmap.hpp"
#include "pseudoarc/rational.hpp"
#include "pseudoarc/simplicial.hpp"

namespace pseudoarc {

constexpr std::int64_t kDefaultMaterializeBound = 10'000'000;

// Pell numbers, memoized for moderate n, matrix power beyond.
Z crn(std::uint64_t n);
// crn(n) as int64 when it fits, else -1
std::int64_t crn_small(std::uint64_t n);

SimplicialMap canonical_crooked(std::int64_t n, bool reversed = false,
                                std::int64_t bound = kDefaultMaterializeBound);
// c_n(i) without materializing; iterative block descent
std::int64_t eval_point(std::int64_t n, const Z& i);
// same value, recursive descent; kept as an independent cross-check
std::int64_t eval_point_recursive(std::int64_t n, const Z& i);

struct CrookedResult {
  bool crooked = true;
  std::int64_t i = -1, j = -1;  // violating pair when not crooked
};
CrookedResult is_crooked(const SimplicialMap& s);
// true iff the pair (i, j), i <= j, has the required i <= j' <= i' <= j
bool pair_ok(const SimplicialMap& s, std::int64_t i, std::int64_t j);

struct CrookedVerdict {
  enum Kind { Certified, Refuted, Indeterminate } kind;
  Q eps;
  std::int64_t i = -1, j = -1;  // counterexample for Refuted
  Q lo, hi;                     // window (lo, hi] for Indeterminate
};
CrookedVerdict eps_crooked_decide(const SimplicialMap& s, const Q& eps);

struct Certificate {
  enum Rule { CombinatorialCheck, ComposeLeft, ComposeRight, Perturbation };
  std::string subject;
  Q eps;
  Rule rule = CombinatorialCheck;
  // CombinatorialCheck: codomain order; avatar when materialized, otherwise
  // the subject is the canonical c_N with N = canonical_n.
  Z order;
  std::optional<SimplicialMap> avatar;
  bool canonical = false;
  Z canonical_n;
  Q param;  // lipschitz for ComposeRight, delta for Perturbation
  std::shared_ptr<const Certificate> premise;
};
using CertPtr = std::shared_ptr<const Certificate>;

const char* rule_name(Certificate::Rule r);

// from a crooked simplicial avatar; throws NotCrooked or EpsilonTooSmall
CertPtr certify_combinatorial(const std::string& subject, const SimplicialMap& s, const Q& eps);
// realization of c_N trusted by construction; replay re-checks when small
CertPtr certify_canonical(const std::string& subject, const Z& N, const Q& eps);
// g certified => g o f certified at the same eps
CertPtr propagate_left(const std::string& subject, CertPtr g_cert);
// g with modulus m, f certified at delta <= m.delta(eps) => g o f at eps
CertPtr propagate_right(const std::string& subject, const Modulus& g_mod, CertPtr f_cert,
                        std::optional<Q> eps = std::nullopt);
// f certified, sup_dist(f, g) <= delta => g at eps + 2 delta
CertPtr propagate_perturb(const std::string& subject, CertPtr f_cert, const Q& dist,
                          std::optional<Q> delta = std::nullopt);
// re-derives the bound along the provenance chain; throws on a broken link
Q replay(const Certificate& c);

}  // namespace pseudoarc
