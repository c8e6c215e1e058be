#include "pseudoarc/plmap.hpp"

#include <algorithm>
#include <sstream>

#include "pseudoarc/errors.hpp"

namespace pseudoarc {

namespace {

std::vector<Point> canonical(std::vector<Point> p) {
  if (p.size() < 2) throw Error("RangeViolation", "PL map needs at least 2 points");
  if (p.front().x != 0 || p.back().x != 1)
    throw Error("RangeViolation", "PL map must span x in [0,1]");
  for (size_t i = 1; i < p.size(); ++i)
    if (!(p[i - 1].x < p[i].x)) throw Error("RangeViolation", "x not strictly increasing");
  std::vector<Point> out;
  out.reserve(p.size());
  for (auto& q : p) {
    // drop middle point when collinear
    while (out.size() >= 2) {
      const Point& a = out[out.size() - 2];
      const Point& b = out.back();
      if ((b.y - a.y) * (q.x - b.x) == (q.y - b.y) * (b.x - a.x))
        out.pop_back();
      else
        break;
    }
    out.push_back(std::move(q));
  }
  return out;
}

Q interp(const Point& a, const Point& b, const Q& x) {
  return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

}  // namespace

PLMap::PLMap() : p_{{Q(0), Q(0)}, {Q(1), Q(1)}} {}

PLMap::PLMap(std::vector<Point> pts) : p_(canonical(std::move(pts))) {}

Q PLMap::operator()(const Q& x) const {
  if (x < 0 || x > 1) throw Error("RangeViolation", "evaluation outside [0,1]");
  auto it = std::lower_bound(p_.begin(), p_.end(), x,
                             [](const Point& p, const Q& v) { return p.x < v; });
  if (it->x == x) return it->y;
  return interp(*(it - 1), *it, x);
}

Q PLMap::min_value() const {
  Q m = p_[0].y;
  for (auto& p : p_) m = qmin(m, p.y);
  return m;
}

Q PLMap::max_value() const {
  Q m = p_[0].y;
  for (auto& p : p_) m = qmax(m, p.y);
  return m;
}

bool PLMap::is_interval_map() const { return min_value() >= 0 && max_value() <= 1; }

bool PLMap::surjective() const { return min_value() == 0 && max_value() == 1; }

PLMap pl_identity() { return PLMap(); }

PLMap pl_constant(const Q& c) { return PLMap({{Q(0), c}, {Q(1), c}}); }

PLMap pl_tent() { return PLMap({{Q(0), Q(0)}, {Q(1, 2), Q(1)}, {Q(1), Q(0)}}); }

PLMap pl_from_pairs(const std::vector<std::pair<Q, Q>>& pairs) {
  std::vector<Point> p;
  for (auto& [x, y] : pairs) p.push_back({x, y});
  return PLMap(std::move(p));
}

PLMap realize(const SimplicialMap& s) {
  std::int64_t m = s.domain(), n = s.codomain();
  if (n == 0) return pl_constant(Q(0));
  if (m == 0) return pl_constant(frac(s(0), n));
  std::vector<Point> p;
  for (std::int64_t i : s.breakpoints()) p.push_back({frac(i, m), frac(s(i), n)});
  return PLMap(std::move(p));
}

PLMap compose(const PLMap& outer, const PLMap& inner) {
  const auto& ip = inner.points();
  const auto& op = outer.points();
  if (inner.min_value() < 0 || inner.max_value() > 1)
    throw Error("DomainMismatch", "inner values leave [0,1]");
  std::vector<Point> out;
  out.push_back({ip[0].x, outer(ip[0].y)});
  for (size_t k = 1; k < ip.size(); ++k) {
    const Point& a = ip[k - 1];
    const Point& b = ip[k];
    // outer breakpoints strictly between a.y and b.y, in x order
    std::vector<Q> xs;
    if (a.y != b.y) {
      Q lo = qmin(a.y, b.y), hi = qmax(a.y, b.y);
      auto first = std::upper_bound(op.begin(), op.end(), lo,
                                    [](const Q& v, const Point& p) { return v < p.x; });
      for (auto it = first; it != op.end() && it->x < hi; ++it)
        xs.push_back(a.x + (it->x - a.y) * (b.x - a.x) / (b.y - a.y));
      if (b.y < a.y) std::reverse(xs.begin(), xs.end());
    }
    for (auto& x : xs) out.push_back({x, outer(inner(x))});
    out.push_back({b.x, outer(b.y)});
  }
  return PLMap(std::move(out));
}

Q sup_dist(const PLMap& f, const PLMap& g) {
  const auto& a = f.points();
  const auto& b = g.points();
  Q best(0);
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    Q x;
    if (j == b.size() || (i < a.size() && a[i].x < b[j].x))
      x = a[i].x;
    else
      x = b[j].x;
    best = qmax(best, qabs(f(x) - g(x)));
    while (i < a.size() && a[i].x == x) ++i;
    while (j < b.size() && b[j].x == x) ++j;
  }
  return best;
}

Q Modulus::delta(const Q& eps) const {
  if (lipschitz == 0) return Q(1);
  return qmin(eps / lipschitz, Q(1));
}

Modulus modulus(const PLMap& f) {
  Q L(0);
  const auto& p = f.points();
  for (size_t i = 1; i < p.size(); ++i)
    L = qmax(L, qabs((p[i].y - p[i - 1].y) / (p[i].x - p[i - 1].x)));
  return {L};
}

std::string to_csv(const PLMap& f) {
  std::ostringstream os;
  for (auto& p : f.points()) os << qstr(p.x) << "," << qstr(p.y) << "\n";
  return os.str();
}

PLMap from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<Point> p;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto c = line.find(',');
    if (c == std::string::npos) throw Error("ParseError", "csv row without comma");
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    p.push_back({parse_q(trim(line.substr(0, c))), parse_q(trim(line.substr(c + 1)))});
  }
  return PLMap(std::move(p));
}

std::string to_svg(const PLMap& f, int width, int height) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<polyline fill=\"none\" stroke=\"black\" points=\"";
  bool first = true;
  for (auto& p : f.points()) {
    if (!first) os << " ";
    first = false;
    os << Q(p.x * width).get_d() << "," << Q((1 - p.y) * height).get_d();
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

}  // namespace pseudoarc
