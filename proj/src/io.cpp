#include "pseudoarc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pseudoarc/errors.hpp"

namespace pseudoarc::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error("ParseError", what); }

std::optional<Q> opt_q(const json& j) {
  if (j.is_null()) return std::nullopt;
  return q_from_json(j);
}
json opt_json(const std::optional<Q>& q) { return q ? to_json(*q) : json(nullptr); }

json points_json(const PLMap& f) {
  json a = json::array();
  for (auto& p : f.points()) a.push_back({qstr(p.x), qstr(p.y)});
  return a;
}

PLMap points_from(const json& a) {
  if (!a.is_array()) bad("points must be an array");
  std::vector<Point> pts;
  for (auto& p : a) {
    if (!p.is_array() || p.size() != 2) bad("point must be [x, y]");
    pts.push_back({q_from_json(p[0]), q_from_json(p[1])});
  }
  return PLMap(pts);
}

Exp exp_from(const json& j) {
  std::string s = j.is_string() ? j.get<std::string>() : std::to_string(j.get<std::uint64_t>());
  if (s == "inf") return Exp::infinity();
  try {
    return {std::stoull(s), false};
  } catch (...) {
    bad("bad exponent " + s);
  }
}

Certificate::Rule rule_from(const std::string& s) {
  for (auto r : {Certificate::CombinatorialCheck, Certificate::ComposeLeft, Certificate::ComposeRight,
                 Certificate::Perturbation})
    if (s == rule_name(r)) return r;
  bad("unknown rule " + s);
}

}  // namespace

json to_json(const Q& q) { return qstr(q); }

Q q_from_json(const json& j) {
  if (j.is_string()) return parse_q(j.get<std::string>());
  if (j.is_number_integer()) return Q(Z(std::to_string(j.get<std::int64_t>())));
  bad("rational must be a \"num/den\" string");
}

json to_json(const SimplicialMap& s) { return {{"codomain", s.codomain()}, {"values", s.values()}}; }

SimplicialMap simplicial_from_json(const json& j) {
  if (j.is_array()) {
    auto v = j.get<std::vector<std::int64_t>>();
    if (v.empty()) bad("empty value list");
    return SimplicialMap(*std::max_element(v.begin(), v.end()), v);
  }
  if (!j.contains("values")) bad("simplicial map needs \"values\"");
  auto v = j.at("values").get<std::vector<std::int64_t>>();
  std::int64_t n = j.contains("codomain") ? j.at("codomain").get<std::int64_t>()
                                          : (v.empty() ? 0 : *std::max_element(v.begin(), v.end()));
  return SimplicialMap(n, v);
}

json to_json(const PLMap& f) { return {{"points", points_json(f)}}; }

PLMap pl_from_json(const json& j) {
  if (j.is_array()) return points_from(j);
  if (!j.contains("points")) bad("PL map needs \"points\"");
  return points_from(j.at("points"));
}

PLMap pl_from_text(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '['))
    return pl_from_json(json::parse(text));
  return from_csv(text);
}

json to_json(const CircleMap& c) { return {{"lift", points_json(c.lift())}, {"degree", c.degree()}}; }

CircleMap circle_from_json(const json& j) {
  if (j.is_array()) return CircleMap(points_from(j));
  if (!j.contains("lift")) bad("circle map needs \"lift\"");
  return CircleMap(points_from(j.at("lift")));
}

json to_json(const CircularSimplicialMap& s) {
  return {{"codomain", s.codomain()}, {"values", s.values()}, {"winding", s.winding()}};
}

CircularSimplicialMap circular_from_json(const json& j) {
  return CircularSimplicialMap(j.at("codomain").get<std::int64_t>(),
                               j.at("values").get<std::vector<std::int64_t>>());
}

json to_json(const Supernatural& s) {
  if (s.is_zero()) return {{"zero", true}};
  json e = json::object();
  for (auto& [p, x] : s.exceptions()) e[std::to_string(p)] = x.str();
  return {{"default", s.default_exp().str()}, {"exceptions", e}};
}

Supernatural supernatural_from_json(const json& j) {
  if (!j.is_object()) bad("supernatural must be an object");
  if (j.value("zero", false)) return Supernatural::zero();
  Exp def = j.contains("default") ? exp_from(j.at("default")) : Exp{};
  std::map<std::uint64_t, Exp> e;
  if (j.contains("exceptions"))
    for (auto& [k, v] : j.at("exceptions").items()) e[std::stoull(k)] = exp_from(v);
  return Supernatural::make(def, e);
}

json to_json(const Certificate& c) {
  json j{{"subject", c.subject}, {"eps", to_json(c.eps)}, {"rule", rule_name(c.rule)}};
  if (c.rule == Certificate::CombinatorialCheck) {
    j["order"] = c.order.get_str();
    j["canonical"] = c.canonical;
    if (c.canonical) j["canonical_n"] = c.canonical_n.get_str();
    if (c.avatar) j["avatar"] = to_json(*c.avatar);
  } else {
    if (c.rule != Certificate::ComposeLeft) j["param"] = to_json(c.param);
    j["premise"] = to_json(*c.premise);
  }
  return j;
}

CertPtr certificate_from_json(const json& j) {
  auto c = std::make_shared<Certificate>();
  c->subject = j.at("subject").get<std::string>();
  c->eps = q_from_json(j.at("eps"));
  c->rule = rule_from(j.at("rule").get<std::string>());
  if (c->rule == Certificate::CombinatorialCheck) {
    c->order = Z(j.at("order").get<std::string>());
    c->canonical = j.value("canonical", false);
    if (c->canonical) c->canonical_n = Z(j.at("canonical_n").get<std::string>());
    if (j.contains("avatar")) c->avatar = simplicial_from_json(j.at("avatar"));
  } else {
    if (j.contains("param")) c->param = q_from_json(j.at("param"));
    c->premise = certificate_from_json(j.at("premise"));
  }
  return c;
}

json to_json(const MapRef& m) {
  json j{{"rule", m.rule}};
  switch (m.kind) {
    case MapRef::PL:
      j["kind"] = "pl";
      j["points"] = points_json(*m.pl);
      break;
    case MapRef::Canonical:
      j["kind"] = "canonical";
      j["n"] = m.resolved ? json(m.canonical_n.get_str()) : json(nullptr);
      break;
    case MapRef::Fin:
      j["kind"] = "fin";
      j["codomain"] = m.fin_codomain;
      j["values"] = m.fin;
      break;
    case MapRef::Circle:
      j["kind"] = "circle";
      j["lift"] = points_json(m.circle->lift());
      j["degree"] = m.circle->degree();
      if (m.circle_order) j["order"] = m.circle_order;
      break;
  }
  return j;
}

MapRef mapref_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  std::string rule = j.value("rule", "");
  if (kind == "pl") return MapRef::interval(points_from(j.at("points")), rule);
  if (kind == "canonical") {
    if (j.at("n").is_null()) return MapRef::unresolved_canonical(rule);
    return MapRef::canonical(Z(j.at("n").get<std::string>()), rule);
  }
  if (kind == "fin")
    return MapRef::finite(j.at("codomain").get<std::int64_t>(), j.at("values").get<std::vector<std::int64_t>>(),
                          rule);
  if (kind == "circle")
    return MapRef::circle_map(CircleMap(points_from(j.at("lift"))), rule, j.value("order", std::int64_t{0}));
  bad("unknown map kind " + kind);
}

json to_json(const Transcript& t) {
  json moves = json::array();
  for (auto& mv : t.moves)
    moves.push_back({{"mover", mover_name(mv.mover)},
                     {"map_ref", mv.map.describe()},
                     {"epsilon", opt_json(mv.eps)},
                     {"lipschitz", opt_json(mv.lipschitz)},
                     {"map", to_json(mv.map)}});
  json wit = json::array();
  for (auto& w : t.witnesses)
    wit.push_back({{"k", w.k}, {"n", w.n}, {"target", to_json(w.target)}, {"lipschitz", to_json(w.lipschitz)},
                   {"delta", to_json(w.delta)}});
  json blame = json::array();
  for (auto& b : t.blame) blame.push_back({{"prime", b.prime}, {"move", b.move}, {"mover", mover_name(b.mover)}});
  json j{{"backend", backend_name(t.backend)},
         {"seed", t.seed},
         {"moves", moves},
         {"schedule", wit},
         {"certificates", json::array()},
         {"blame", blame},
         {"universe", t.universe}};
  if (t.below) j["below"] = to_json(*t.below);
  if (!t.sizes.empty()) j["sizes"] = t.sizes;
  return j;
}

Transcript transcript_from_json(const json& j) {
  Transcript t;
  t.backend = parse_backend(j.at("backend").get<std::string>());
  t.seed = j.value("seed", std::uint64_t{0});
  for (auto& m : j.at("moves")) {
    std::string who = m.at("mover").get<std::string>();
    if (who != "Eve" && who != "Odd") bad("mover must be Eve or Odd");
    t.moves.push_back({who == "Eve" ? Mover::Eve : Mover::Odd, mapref_from_json(m.at("map")),
                       opt_q(m.value("epsilon", json(nullptr))), opt_q(m.value("lipschitz", json(nullptr)))});
  }
  if (j.contains("schedule"))
    for (auto& w : j.at("schedule"))
      t.witnesses.push_back({w.at("k").get<std::int64_t>(), w.at("n").get<std::int64_t>(), q_from_json(w.at("target")),
                             q_from_json(w.at("lipschitz")), q_from_json(w.at("delta"))});
  if (j.contains("below")) t.below = supernatural_from_json(j.at("below"));
  if (j.contains("universe")) t.universe = j.at("universe").get<std::vector<std::uint64_t>>();
  if (j.contains("sizes")) t.sizes = j.at("sizes").get<std::vector<std::int64_t>>();
  if (j.contains("blame"))
    for (auto& b : j.at("blame"))
      t.blame.push_back({b.at("prime").get<std::uint64_t>(), b.at("move").get<std::int64_t>(),
                         b.at("mover").get<std::string>() == "Eve" ? Mover::Eve : Mover::Odd});
  return t;
}

json to_json(const VerifyReport& r) {
  json certs = json::array();
  for (auto& c : r.certificates)
    certs.push_back({{"n", c.n}, {"n2", c.n2}, {"eps", to_json(c.eps)}, {"certificate", to_json(*c.cert)}});
  json unsplit = json::array();
  for (auto& u : r.unsplit) unsplit.push_back({{"n", u.n}, {"x", u.x}});
  json blame = json::array();
  for (auto& b : r.blame) blame.push_back({{"prime", b.prime}, {"move", b.move}, {"mover", mover_name(b.mover)}});
  return {{"ok", r.ok()},         {"certificates", certs}, {"uncertified", r.uncertified},
          {"skipped", r.skipped}, {"unsplit", unsplit},    {"blame", blame},
          {"violations", r.violations}};
}

json to_json(const RogersReport& r) {
  auto comps = [](const std::vector<GridComponent>& v) {
    json a = json::array();
    for (auto& c : v)
      a.push_back({{"size", c.size},
                   {"miss_x", c.miss_x},
                   {"miss_x_start", c.miss_x_start},
                   {"miss_y", c.miss_y},
                   {"miss_y_start", c.miss_y_start}});
    return a;
  };
  return {{"grid", r.grid},
          {"tau", to_json(r.tau)},
          {"components", comps(r.components)},
          {"components_2x", r.components_2x},
          {"exact", comps(r.exact)}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IOError", "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace pseudoarc::io
