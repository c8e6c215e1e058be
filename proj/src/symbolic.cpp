#include "pseudoarc/symbolic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "pseudoarc/crooked.hpp"
#include "pseudoarc/errors.hpp"

namespace pseudoarc {

using Node = SymMap::Node;
using NodePtr = std::shared_ptr<const Node>;

std::shared_ptr<const Node> sym_leaf(std::int64_t codomain, std::vector<std::int64_t> v) {
  auto n = std::make_shared<Node>();
  n->len = static_cast<long>(v.size()) - 1;
  n->codomain = codomain;
  n->values = std::move(v);
  return n;
}

std::shared_ptr<const Node> sym_concat(std::vector<SymMap::Part> parts, const Z& codomain) {
  auto n = std::make_shared<Node>();
  n->codomain = codomain;
  Z at = 0;
  for (auto& p : parts) {
    n->starts.push_back(at);
    at += p.node->len;
  }
  n->len = at;
  n->parts = std::move(parts);
  return n;
}

SymMap SymMap::from(const SimplicialMap& s) { return SymMap(sym_leaf(s.codomain(), s.values())); }

std::int64_t round_level(std::int64_t j, std::int64_t n, std::int64_t N) {
  // nearest integer to j n / N, ties down
  __int128 num = static_cast<__int128>(2) * j * n - N;
  __int128 den = static_cast<__int128>(2) * N;
  // ceil((2jn - N) / 2N)
  __int128 q = num >= 0 ? (num + den - 1) / den : -((-num) / den);
  return static_cast<std::int64_t>(q);
}

Z SymMap::operator()(const Z& index) const {
  if (index < 0 || index > root_->len) throw Error("IndexOutOfRange", "symbolic index");
  const Node* cur = root_.get();
  Z i = index;
  Z a = 0;
  int sg = 1;
  for (;;) {
    if (!cur->parts.empty()) {
      auto it = std::upper_bound(cur->starts.begin(), cur->starts.end(), i);
      size_t p = static_cast<size_t>(it - cur->starts.begin()) - 1;
      const Part& part = cur->parts[p];
      Z j = i - cur->starts[p];
      if (part.reverse_index) j = part.node->len - j;
      a += sg * part.offset;
      sg *= part.sign;
      i = j;
      cur = part.node.get();
      continue;
    }
    Z v;
    if (cur->canon) {
      std::int64_t c = eval_point(cur->M, i);
      v = round_level(c + cur->k, cur->qn, cur->qN) - cur->lo;
    } else {
      v = cur->values[i.get_ui()];
    }
    return a + sg * v;
  }
}

Q SymMap::realize_at(const Q& x) const {
  if (x < 0 || x > 1) throw Error("RangeViolation", "evaluation outside [0,1]");
  const Z& L = root_->len;
  const Z& C = root_->codomain;
  if (C == 0) return Q(0);
  if (L == 0) return Q((*this)(Z(0))) / Q(C);
  Q t = x * Q(L);
  Z i = floor_q(t);
  if (i == L) return Q((*this)(i)) / Q(C);
  Q fr = t - Q(i);
  Z a = (*this)(i);
  Z b = (*this)(Z(i + 1));
  return (Q(a) + fr * Q(b - a)) / Q(C);
}

bool SymMap::materializable(std::int64_t bound) const { return root_->len < bound; }

SimplicialMap SymMap::materialize(std::int64_t bound) const {
  if (!materializable(bound)) throw Error("TooLarge", "symbolic map above materialization bound");
  std::vector<std::int64_t> out;
  out.reserve(root_->len.get_ui() + 1);
  // expand with memo on explicit node vectors
  std::map<const Node*, std::vector<std::int64_t>> memo;
  std::function<const std::vector<std::int64_t>&(const Node*)> expand =
      [&](const Node* nd) -> const std::vector<std::int64_t>& {
    auto f = memo.find(nd);
    if (f != memo.end()) return f->second;
    std::vector<std::int64_t> v;
    if (!nd->parts.empty()) {
      for (size_t p = 0; p < nd->parts.size(); ++p) {
        const Part& part = nd->parts[p];
        const auto& cv = expand(part.node.get());
        std::int64_t off = part.offset.get_si();
        size_t L = cv.size();
        for (size_t t = (p == 0 ? 0 : 1); t < L; ++t) {
          std::int64_t x = part.reverse_index ? cv[L - 1 - t] : cv[t];
          v.push_back(off + part.sign * x);
        }
      }
    } else if (nd->canon) {
      std::int64_t L = nd->len.get_si();
      auto c = canonical_crooked(nd->M);
      for (std::int64_t t = 0; t <= L; ++t)
        v.push_back(round_level(c(t) + nd->k, nd->qn, nd->qN) - nd->lo);
    } else {
      v = nd->values;
    }
    return memo.emplace(nd, std::move(v)).first->second;
  };
  out = expand(root_.get());
  return SimplicialMap(root_->codomain.get_si(), std::move(out));
}

std::size_t SymMap::node_count() const {
  std::set<const Node*> seen;
  std::vector<const Node*> st{root_.get()};
  while (!st.empty()) {
    const Node* n = st.back();
    st.pop_back();
    if (!seen.insert(n).second) continue;
    for (auto& p : n->parts) st.push_back(p.node.get());
  }
  return seen.size();
}

SymMap canonical_lift(std::int64_t N, std::int64_t n) {
  if (n < 1 || n > N) throw Error("PreconditionViolated", "canonical_lift needs 1 <= n <= N");
  auto q = [&](std::int64_t j) { return round_level(j, n, N); };
  std::map<std::pair<std::int64_t, std::int64_t>, NodePtr> memo;
  std::function<NodePtr(std::int64_t, std::int64_t)> T = [&](std::int64_t M,
                                                             std::int64_t k) -> NodePtr {
    auto key = std::make_pair(M, k);
    if (auto f = memo.find(key); f != memo.end()) return f->second;
    std::int64_t lo = q(k), np = q(k + M) - lo;
    NodePtr out;
    if (np <= 1 || M <= 1) {
      auto nd = std::make_shared<Node>();
      nd->len = crn(static_cast<std::uint64_t>(M));
      nd->codomain = np;
      std::int64_t small = crn_small(static_cast<std::uint64_t>(M));
      if (small >= 0 && small <= 4096) {
        auto c = canonical_crooked(M);
        for (std::int64_t t = 0; t <= small; ++t) nd->values.push_back(q(c(t) + k) - lo);
      } else {
        nd->canon = true;
        nd->M = M, nd->k = k, nd->qn = n, nd->qN = N, nd->lo = lo;
      }
      out = nd;
    } else {
      Z top = crn(static_cast<std::uint64_t>(np));
      Z t1 = crn(static_cast<std::uint64_t>(np - 1));
      Z t2 = crn(static_cast<std::uint64_t>(np - 2));
      auto embed = [&](std::int64_t xl, std::int64_t xh, NodePtr child, bool rev) {
        std::int64_t r = xh - xl, sh = xl - lo;
        SymMap::Part p{std::move(child), rev, 1, Z(0)};
        if (r == np && sh == 0) return p;
        if (r == np - 1 && sh == 0) return p;
        if (r == np - 1 && sh == 1) {
          p.offset = top - t1;
          return p;
        }
        if (r == np - 2 && sh == 1) {
          p.offset = t1 + t2;
          p.sign = -1;
          return p;
        }
        throw Error("IncoherentData", "no canonical embedding for block");
      };
      std::vector<SymMap::Part> parts;
      parts.push_back(embed(lo, q(k + M - 1), T(M - 1, k), false));
      parts.push_back(embed(q(k + 1), q(k + M - 1), T(M - 2, k + 1), true));
      parts.push_back(embed(q(k + 1), q(k + M), T(M - 1, k + 1), false));
      out = sym_concat(std::move(parts), top);
    }
    memo[key] = out;
    return out;
  };
  return SymMap(T(N, 0));
}

Q MapChain::operator()(const Q& x) const {
  Q v = x;
  for (auto it = stages_.rbegin(); it != stages_.rend(); ++it) {
    if (auto* p = std::get_if<PLMap>(&*it))
      v = (*p)(v);
    else
      v = std::get<SymMap>(*it).realize_at(v);
  }
  return v;
}

Z MapChain::size_hint() const {
  Z total = 0;
  for (auto& st : stages_) {
    if (auto* p = std::get_if<PLMap>(&st))
      total += static_cast<long>(p->points().size());
    else
      total += std::get<SymMap>(st).len() + 1;
  }
  return total;
}

std::optional<PLMap> MapChain::materialize(std::int64_t bound) const {
  if (size_hint() > bound) return std::nullopt;
  PLMap out = pl_identity();
  for (auto& st : stages_) {
    PLMap f = std::holds_alternative<PLMap>(st)
                  ? std::get<PLMap>(st)
                  : realize(std::get<SymMap>(st).materialize(bound));
    out = compose(out, f);
  }
  return out;
}

std::string MapChain::describe() const {
  std::ostringstream os;
  bool first = true;
  for (auto& st : stages_) {
    if (!first) os << " o ";
    first = false;
    if (auto* p = std::get_if<PLMap>(&st))
      os << "pl[" << p->points().size() << "]";
    else {
      auto& s = std::get<SymMap>(st);
      os << "sym[len=" << s.len().get_str() << ",cod=" << s.codomain().get_str()
         << ",nodes=" << s.node_count() << "]";
    }
  }
  return os.str();
}

}  // namespace pseudoarc
