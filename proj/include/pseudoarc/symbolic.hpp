#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pseudoarc/crooked.hpp"
#include "pseudoarc/plmap.hpp"
#include "pseudoarc/rational.hpp"
#include "pseudoarc/simplicial.hpp"

namespace pseudoarc {

// Simplicial map I_len -> I_codomain stored as a shared DAG of blocks, so maps
// with astronomically many vertices can be evaluated pointwise.
class SymMap {
 public:
  struct Node;
  struct Part {
    std::shared_ptr<const Node> node;
    bool reverse_index = false;  // read the child backwards
    int sign = 1;                // value -> offset + sign * value
    Z offset;
  };
  struct Node {
    Z len;        // domain is I_len
    Z codomain;
    // leaf kinds
    std::vector<std::int64_t> values;  // explicit
    bool canon = false;                // i -> q(c_M(i) + k) - lo, q(j) = round(j n / N)
    std::int64_t M = 0, k = 0, qn = 0, qN = 0, lo = 0;
    std::vector<Part> parts;           // concatenation, consecutive parts share a vertex
    std::vector<Z> starts;             // start index of each part
  };

  SymMap() = default;
  explicit SymMap(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  static SymMap from(const SimplicialMap& s);

  const Z& len() const { return root_->len; }
  const Z& codomain() const { return root_->codomain; }
  Z operator()(const Z& i) const;
  // value of the realization at x in [0,1], scaled to [0,1]
  Q realize_at(const Q& x) const;
  bool materializable(std::int64_t bound) const;
  SimplicialMap materialize(std::int64_t bound) const;
  std::size_t node_count() const;
  const std::shared_ptr<const Node>& root() const { return root_; }

 private:
  std::shared_ptr<const Node> root_;
};

std::shared_ptr<const SymMap::Node> sym_leaf(std::int64_t codomain, std::vector<std::int64_t> v);
std::shared_ptr<const SymMap::Node> sym_concat(std::vector<SymMap::Part> parts, const Z& codomain);

// round(j n / N), ties to the lower value
std::int64_t round_level(std::int64_t j, std::int64_t n, std::int64_t N);
// w with c_n o w == q o c_N where q(j) = round_level(j, n, N); needs 1 <= n <= N
SymMap canonical_lift(std::int64_t N, std::int64_t n);

// h = stage[0] o stage[1] o ...; each stage is a PL map or a realized SymMap.
class MapChain {
 public:
  using Stage = std::variant<PLMap, SymMap>;
  MapChain() = default;
  explicit MapChain(std::vector<Stage> stages) : stages_(std::move(stages)) {}
  Q operator()(const Q& x) const;
  const std::vector<Stage>& stages() const { return stages_; }
  // rough vertex count of the composite
  Z size_hint() const;
  std::optional<PLMap> materialize(std::int64_t bound = kMaterializeChain) const;
  std::string describe() const;
  static constexpr std::int64_t kMaterializeChain = 2'000'000;

 private:
  std::vector<Stage> stages_;
};

}  // namespace pseudoarc
