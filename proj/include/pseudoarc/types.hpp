#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace pseudoarc {

// exponent in N or infinity
struct Exp {
  std::uint64_t k = 0;
  bool inf = false;
  static Exp infinity() { return {0, true}; }
  bool operator==(const Exp& o) const { return inf == o.inf && (inf || k == o.k); }
  bool operator<=(const Exp& o) const { return o.inf || (!inf && k <= o.k); }
  Exp operator+(const Exp& o) const { return inf || o.inf ? infinity() : Exp{k + o.k, false}; }
  std::string str() const { return inf ? "inf" : std::to_string(k); }
};

// Eventually constant function primes -> N u {inf}: a default plus finitely
// many exceptions, or the zero element. Canonical: no exception equals the default.
class Supernatural {
 public:
  Supernatural() = default;  // 1
  static Supernatural zero();
  static Supernatural one() { return {}; }
  static Supernatural of(std::uint64_t k);  // 0 gives zero()
  static Supernatural make(Exp def, std::map<std::uint64_t, Exp> exceptions);
  static Supernatural prime_power(std::uint64_t p, Exp e);
  // P^inf for a finite prime set
  static Supernatural power_inf(const std::set<std::uint64_t>& primes);

  bool is_zero() const { return zero_; }
  const Exp& default_exp() const { return def_; }
  const std::map<std::uint64_t, Exp>& exceptions() const { return exc_; }
  Exp at(std::uint64_t p) const;
  bool operator==(const Supernatural& o) const;
  std::string str() const;

 private:
  void canonicalize();
  bool zero_ = false;
  Exp def_;
  std::map<std::uint64_t, Exp> exc_;
};

Supernatural mul(const Supernatural& a, const Supernatural& b);
// pointwise divisibility order; zero is the top element
bool leq(const Supernatural& a, const Supernatural& b);
bool type_equiv(const Supernatural& a, const Supernatural& b);
// canonical t with t * s = s', exponent 0 on the infinity fiber of s
std::optional<Supernatural> multiplication_solve(const Supernatural& s, const Supernatural& sp);

std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize_int(std::uint64_t k);
bool is_prime(std::uint64_t p);

// finite or cofinite set of primes
struct PrimeSet {
  bool cofinite = false;
  std::set<std::uint64_t> primes;  // members, or the missing ones when cofinite
  bool contains(std::uint64_t p) const { return cofinite != (primes.count(p) > 0); }
  static PrimeSet all() { return {true, {}}; }
};
// k in D_P
bool in_degree_set(std::int64_t k, const PrimeSet& P);
// t <= P^inf, i.e. support(t) inside P
bool in_type_set(const Supernatural& t, const PrimeSet& P);

struct DegreeSequenceSpec {
  std::vector<std::int64_t> prefix;
  std::vector<std::int64_t> cycle{1};
  std::int64_t at(std::int64_t n) const;
  // the same sequence with the first n terms removed
  DegreeSequenceSpec drop(std::int64_t n) const;
};
// product of absolute degrees over the whole sequence
Supernatural product(const DegreeSequenceSpec& s);

// ~-class of a supernatural number, compared through a canonical representative
class TypeClass {
 public:
  explicit TypeClass(const Supernatural& rep);
  const Supernatural& rep() const { return rep_; }
  // zero, or default 0/inf with the infinity fiber as exceptions
  Supernatural canonical() const;
  bool is_zero() const { return rep_.is_zero(); }
  bool operator==(const TypeClass& o) const { return type_equiv(rep_, o.rep_); }

 private:
  Supernatural rep_;
};

TypeClass type_of_sequence(const DegreeSequenceSpec& spec);
// t with t * tail(sY, n0) = |deg f0| * tail(sX, m0); IncoherentData otherwise
Supernatural type_of_map_data(const DegreeSequenceSpec& sX, std::int64_t m0,
                              const DegreeSequenceSpec& sY, std::int64_t n0,
                              std::int64_t f0_degree);

}  // namespace pseudoarc
