#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pseudoarc/rational.hpp"
#include "pseudoarc/simplicial.hpp"

namespace pseudoarc {

struct Point {
  Q x, y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

// Piecewise linear map on [0,1]. x strictly increasing from 0 to 1.
// y is unrestricted here (circle lifts reuse this); interval maps are checked
// with is_interval_map(). Collinear interior points are merged.
class PLMap {
 public:
  PLMap();  // identity
  explicit PLMap(std::vector<Point> pts);

  const std::vector<Point>& points() const { return p_; }
  Q operator()(const Q& x) const;
  Q min_value() const;
  Q max_value() const;
  bool is_interval_map() const;
  bool surjective() const;  // onto [0,1]
  bool operator==(const PLMap& o) const { return p_ == o.p_; }

 private:
  std::vector<Point> p_;
};

PLMap pl_identity();
PLMap pl_constant(const Q& c);
PLMap pl_tent();
// from "x,y;x,y;..." style pairs
PLMap pl_from_pairs(const std::vector<std::pair<Q, Q>>& pairs);
PLMap realize(const SimplicialMap& s);
// outer o inner
PLMap compose(const PLMap& outer, const PLMap& inner);
Q sup_dist(const PLMap& f, const PLMap& g);

struct Modulus {
  Q lipschitz;
  // largest delta the Lipschitz bound certifies for eps (<= 1)
  Q delta(const Q& eps) const;
};
Modulus modulus(const PLMap& f);

std::string to_csv(const PLMap& f);
PLMap from_csv(const std::string& text);
std::string to_svg(const PLMap& f, int width = 400, int height = 400);

}  // namespace pseudoarc
