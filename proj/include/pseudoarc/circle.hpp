#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pseudoarc/plmap.hpp"
#include "pseudoarc/rational.hpp"

namespace pseudoarc {

// Circle self-map in turn units: a PL lift on [0,1] with lift(1) - lift(0)
// an integer, the degree. The circle map itself is the lift mod 1.
class CircleMap {
 public:
  CircleMap();  // identity
  explicit CircleMap(PLMap lift);

  const PLMap& lift() const { return lift_; }
  std::int64_t degree() const { return deg_; }
  // lift extended to the real line, lift(x + 1) = lift(x) + degree
  Q lift_at(const Q& x) const;
  // point of the circle in [0,1)
  Q operator()(const Q& x) const;
  bool surjective() const;

 private:
  PLMap lift_;
  std::int64_t deg_;
};

CircleMap circle_power(std::int64_t d);  // z -> z^d
CircleMap circle_rotate(const CircleMap& c, const Q& turns);
// lift 0 -> 1 -> 0, the degree 0 surjection built on the tent map
CircleMap rogers_tent();

std::int64_t degree(const CircleMap& c);
CircleMap compose_circle(const CircleMap& outer, const CircleMap& inner);
// distance of two points of the circle, in [0, 1/2]
Q circle_gap(const Q& a, const Q& b);
Q circle_dist(const CircleMap& a, const CircleMap& b);

struct DegreeCheck {
  Q dist;
  std::int64_t deg_a, deg_b;
  bool close;  // dist < 1/2
  bool ok;     // !close || deg_a == deg_b
};
DegreeCheck close_degree_check(const CircleMap& a, const CircleMap& b);

// Simplicial map Z_m -> Z_n, kept as an integer lift l_0..l_m with
// |l_{i+1} - l_i| <= 1 and l_m = l_0 + n * winding.
class CircularSimplicialMap {
 public:
  // values in [0, n); steps read as the representative in (-n/2, n/2]
  CircularSimplicialMap(std::int64_t n, const std::vector<std::int64_t>& values);
  static CircularSimplicialMap from_lift(std::int64_t n, std::vector<std::int64_t> lift);

  std::int64_t codomain() const { return n_; }
  std::int64_t domain() const { return static_cast<std::int64_t>(lift_.size()) - 1; }
  std::int64_t winding() const { return w_; }
  std::int64_t operator()(std::int64_t i) const;  // i taken mod m
  std::vector<std::int64_t> values() const;
  const std::vector<std::int64_t>& lift() const { return lift_; }

 private:
  CircularSimplicialMap() = default;
  std::int64_t n_ = 1, w_ = 0;
  std::vector<std::int64_t> lift_;
};

// realization as a circle map: vertex i at i/m, value lift_i / n
CircleMap realize_circle(const CircularSimplicialMap& s);

struct CircularCrookedResult {
  bool crooked;
  // failing arc: from i forward to j (indices mod m)
  std::int64_t i = -1, j = -1;
};
CircularCrookedResult is_circularly_crooked(const CircularSimplicialMap& s);

struct CrookedCircle {
  CircleMap map;
  CircularSimplicialMap avatar;
  std::int64_t pattern;  // order K of the ascending block
};
// d = 0 gives the tent variant (pattern forward then back)
CrookedCircle crooked_circle_map(std::int64_t n, std::int64_t d,
                                 std::int64_t bound = 2'000'000);

struct GridComponent {
  std::int64_t size;
  // longest arcs missed by each projection, in grid steps, with start index
  std::int64_t miss_x, miss_x_start, miss_y, miss_y_start;
};
struct RogersReport {
  std::int64_t grid;
  Q tau;
  std::vector<GridComponent> components;
  std::int64_t components_2x;  // count at twice the grid
  std::vector<GridComponent> exact;  // equality set, 8-connected
};
// components of {(x, y): d(f(x), g(y)) < 1/2 - 1/grid} on the torus grid,
// 4-connected; f = z^2 and g = rogers_tent() unless given
RogersReport rogers_witness_check(std::int64_t grid);
RogersReport near_commuting_components(const CircleMap& f, const CircleMap& g,
                                       std::int64_t grid);

}  // namespace pseudoarc
