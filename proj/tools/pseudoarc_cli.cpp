#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "pseudoarc/bm.hpp"
#include "pseudoarc/circle.hpp"
#include "pseudoarc/crooked.hpp"
#include "pseudoarc/errors.hpp"
#include "pseudoarc/factorization.hpp"
#include "pseudoarc/io.hpp"
#include "pseudoarc/types.hpp"

using namespace pseudoarc;
using io::json;

namespace {

struct Config {
  std::int64_t bound = kDefaultMaterializeBound;
  std::vector<std::uint64_t> universe{2, 3, 5, 7, 11, 13};
  std::uint64_t seed = 0;
  int jobs = 1;
};

Config load_config(const std::string& path) {
  Config c;
  std::string p = path;
  if (p.empty())
    if (const char* env = std::getenv("PSEUDOARC_CONFIG")) p = env;
  if (p.empty()) return c;
  json j = json::parse(io::read_file(p));
  c.bound = j.value("materialize_bound", c.bound);
  if (j.contains("universe")) c.universe = j.at("universe").get<std::vector<std::uint64_t>>();
  c.seed = j.value("seed", c.seed);
  c.jobs = j.value("jobs", c.jobs);
  if (c.bound <= 0 || c.jobs <= 0) throw Error("PreconditionViolated", "config bounds must be positive");
  return c;
}

std::vector<std::int64_t> parse_list(const std::string& s) {
  std::vector<std::int64_t> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) v.push_back(std::stoll(tok));
  return v;
}

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error("IOError", "cannot write " + out);
  f << j.dump(2) << "\n";
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error("IOError", "cannot write " + path);
  f << text;
}

json verdict_json(const CrookedVerdict& v) {
  static const char* names[] = {"Certified", "Refuted", "Indeterminate"};
  json j{{"verdict", names[v.kind]}, {"eps", io::to_json(v.eps)}};
  if (v.kind == CrookedVerdict::Refuted) j["witness"] = {v.i, v.j};
  if (v.kind == CrookedVerdict::Indeterminate) j["window"] = {io::to_json(v.lo), io::to_json(v.hi)};
  return j;
}

// SVG of a simplicial map in grid coordinates: vertex i at (i, s(i))
std::string grid_svg(const SimplicialMap& s) {
  std::ostringstream os;
  const auto m = s.domain(), n = s.codomain();
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1 -1 " << m + 2 << " " << n + 2
     << "\" width=\"" << 20 * (m + 2) << "\" height=\"" << 20 * (n + 2) << "\">\n";
  os << "<g transform=\"matrix(1 0 0 -1 0 " << n << ")\">\n";
  os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"0.08\" points=\"";
  for (std::int64_t i = 0; i <= m; ++i) os << (i ? " " : "") << i << "," << s(i);
  os << "\"/>\n</g>\n</svg>\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crooked maps, inverse-sequence games and circle-map types"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path, out;
  int jobs = 0;
  app.add_option("--config", config_path, "JSON config (default from PSEUDOARC_CONFIG)");
  app.add_option("-o,--out", out, "write JSON here instead of stdout");
  app.add_option("--jobs", jobs, "parallel batch verification");

  bool violation = false;
  std::function<void()> run;

  // crooked
  auto* crooked = app.add_subcommand("crooked", "canonical crooked maps and checks");
  crooked->require_subcommand(1);
  std::int64_t gen_n = 0;
  std::string gen_svg;
  auto* gen = crooked->add_subcommand("gen", "emit c_N");
  gen->add_option("N", gen_n)->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--svg", gen_svg, "also write the grid polyline");
  gen->callback([&] {
    run = [&] {
      auto s = canonical_crooked(gen_n);
      if (!gen_svg.empty()) write_text(gen_svg, grid_svg(s));
      emit(json(s.values()), out);
    };
  });
  std::vector<std::string> check_files;
  std::string check_eps;
  auto* check = crooked->add_subcommand("check", "is_crooked and the eps sandwich");
  check->add_option("FILE", check_files, "simplicial map JSON")->required()->check(CLI::ExistingFile);
  check->add_option("--eps", check_eps, "P/Q");
  check->callback([&] {
    run = [&] {
      const Config cfg = load_config(config_path);
      const int nj = jobs > 0 ? jobs : cfg.jobs;
      std::vector<json> res(check_files.size());
      std::vector<std::string> errs(check_files.size());
      std::atomic<size_t> next{0};
      auto worker = [&] {
        for (size_t k; (k = next++) < check_files.size();) {
          try {
            auto s = io::simplicial_from_json(json::parse(io::read_file(check_files[k])));
            auto r = is_crooked(s);
            json j{{"file", check_files[k]}, {"domain", s.domain()}, {"codomain", s.codomain()},
                   {"crooked", r.crooked}};
            if (!r.crooked) j["witness"] = {r.i, r.j};
            if (!check_eps.empty()) j["eps"] = verdict_json(eps_crooked_decide(s, parse_q(check_eps)));
            res[k] = j;
          } catch (const std::exception& e) {
            errs[k] = e.what();
          }
        }
      };
      std::vector<std::thread> pool;
      for (int t = 0; t < std::max(1, nj); ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
      for (auto& e : errs)
        if (!e.empty()) throw Error("ParseError", e);
      for (auto& r : res) violation = violation || !r.at("crooked").get<bool>();
      emit(res.size() == 1 ? res[0] : json(res), out);
    };
  });
  std::int64_t eval_n = 0;
  std::string eval_i;
  auto* ev = crooked->add_subcommand("eval", "c_N(I) without materializing");
  ev->add_option("N", eval_n)->required();
  ev->add_option("I", eval_i)->required();
  ev->callback([&] {
    run = [&] {
      Z i(eval_i);
      emit({{"n", eval_n}, {"i", i.get_str()}, {"value", eval_point(eval_n, i)}}, out);
    };
  });

  // factorize
  auto* fac = app.add_subcommand("factorize", "factorization through canonical maps");
  fac->require_subcommand(1);
  std::string fac_file;
  auto* cof = fac->add_subcommand("cofactor", "s' with s o s' = c_n");
  cof->add_option("FILE", fac_file)->required()->check(CLI::ExistingFile);
  cof->callback([&] {
    run = [&] {
      const Config cfg = load_config(config_path);
      auto s = io::simplicial_from_json(json::parse(io::read_file(fac_file)));
      auto c = cofactor_to_canonical(s, cfg.bound);
      bool ok = compose(s, c) == canonical_crooked(s.codomain(), false, cfg.bound);
      violation = !ok;
      emit({{"cofactor", io::to_json(c)}, {"verified", ok}}, out);
    };
  });
  auto* simp = fac->add_subcommand("simplest", "s' with c_n o s' = s");
  simp->add_option("FILE", fac_file)->required()->check(CLI::ExistingFile);
  simp->callback([&] {
    run = [&] {
      auto s = io::simplicial_from_json(json::parse(io::read_file(fac_file)));
      auto f = factor_through_canonical(s);
      bool ok = compose(canonical_crooked(s.codomain()), f) == s;
      violation = !ok;
      emit({{"factor", io::to_json(f)}, {"verified", ok}}, out);
    };
  });
  std::string pipe_g, pipe_f, pipe_eps;
  std::int64_t pipe_canon = 0;
  auto* pipe = fac->add_subcommand("pipeline", "crooked_factorize g at eps, then resolve f");
  pipe->add_option("--g", pipe_g, "PL map (JSON or x,y lines)")->required()->check(CLI::ExistingFile);
  pipe->add_option("--eps", pipe_eps, "P/Q")->required();
  pipe->add_option("--f", pipe_f, "PL map, delta-crooked")->check(CLI::ExistingFile);
  pipe->add_option("--canonical", pipe_canon, "use the realization of c_N as f (default: least N with 1/N < delta)");
  pipe->callback([&] {
    run = [&] {
      PLMap g = io::pl_from_text(io::read_file(pipe_g));
      Q eps = parse_q(pipe_eps);
      auto r = crooked_factorize(g, eps);
      FInput in;
      if (!pipe_f.empty()) {
        in.map = io::pl_from_text(io::read_file(pipe_f));
        in.cert_eps = r.delta;
      } else {
        std::int64_t N = pipe_canon > 0 ? pipe_canon : floor_q(Q(1) / r.delta).get_si() + 1;
        in.canonical_n = N;
        in.cert_eps = r.delta;
      }
      auto res = r.resolve(in);
      json j{{"delta", io::to_json(r.delta)},
             {"n", r.n},
             {"eps", io::to_json(r.eps)},
             {"eps_inner", io::to_json(r.eps_inner)},
             {"h", res.h.describe()},
             {"bound", io::to_json(res.bound)},
             {"exact", res.exact ? io::to_json(*res.exact) : json(nullptr)},
             {"verified", (res.exact ? *res.exact : res.bound) < eps}};
      if (in.canonical_n) j["canonical_n"] = *in.canonical_n;
      violation = !j["verified"].get<bool>();
      emit(j, out);
    };
  });

  // circle
  auto* circ = app.add_subcommand("circle", "circle maps");
  circ->require_subcommand(1);
  std::string circ_file;
  auto* deg = circ->add_subcommand("degree", "degree of a circle map");
  deg->add_option("FILE", circ_file)->required()->check(CLI::ExistingFile);
  deg->callback([&] {
    run = [&] {
      auto c = io::circle_from_json(json::parse(io::read_file(circ_file)));
      emit({{"degree", degree(c)}, {"surjective", c.surjective()}}, out);
    };
  });
  std::int64_t cc_n = 4, cc_d = 1;
  auto* cc = circ->add_subcommand("crooked", "circularly crooked map of given degree");
  cc->add_option("--n", cc_n, "codomain order")->required();
  cc->add_option("--deg", cc_d, "degree")->required();
  cc->callback([&] {
    run = [&] {
      auto r = crooked_circle_map(cc_n, cc_d);
      auto chk = is_circularly_crooked(r.avatar);
      violation = !chk.crooked;
      emit({{"n", cc_n},
            {"degree", r.map.degree()},
            {"pattern", r.pattern},
            {"crooked", chk.crooked},
            {"avatar", io::to_json(r.avatar)},
            {"map", io::to_json(r.map)}},
           out);
    };
  });
  std::int64_t grid = 720;
  auto* rog = circ->add_subcommand("rogers", "near-commuting set of z^2 and the tent map");
  rog->add_option("--grid", grid)->check(CLI::PositiveNumber);
  rog->callback([&] { run = [&] { emit(io::to_json(rogers_witness_check(grid)), out); }; });

  // type
  auto* typ = app.add_subcommand("type", "supernatural types");
  typ->require_subcommand(1);
  std::string prefix, cycle = "1";
  auto* tof = typ->add_subcommand("of", "type of a degree sequence");
  tof->add_option("--prefix", prefix, "comma separated degrees");
  tof->add_option("--cycle", cycle, "repeating degrees");
  tof->callback([&] {
    run = [&] {
      DegreeSequenceSpec s{parse_list(prefix), parse_list(cycle)};
      auto t = type_of_sequence(s);
      emit({{"product", io::to_json(product(s))},
            {"type", io::to_json(t.canonical())},
            {"str", t.canonical().str()}},
           out);
    };
  });

  // bm
  auto* bm = app.add_subcommand("bm", "Banach-Mazur games");
  bm->require_subcommand(1);
  std::string backend = "interval", odd = "crooked", eve = "identity", below, eps0 = "1";
  std::int64_t rounds = 6, inject_move = -1, inject_deg = 3, order = 4;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> enumeration;
  auto* bplay = bm->add_subcommand("play", "play and record a transcript");
  bplay->add_option("--backend", backend)->check(CLI::IsMember({"interval", "finsurj", "circle"}));
  bplay->add_option("--odd", odd)->check(CLI::IsMember({"crooked", "split", "identity", "solenoid"}));
  bplay->add_option("--eve", eve)->check(CLI::IsMember({"identity", "random"}));
  bplay->add_option("--rounds", rounds)->check(CLI::NonNegativeNumber);
  bplay->add_option("--seed", seed);
  bplay->add_option("--eps0", eps0, "P/Q");
  bplay->add_option("--below", below, "supernatural JSON bound S");
  bplay->add_option("--inject", inject_move, "circle: Eve plays a power map at this move");
  bplay->add_option("--inject-degree", inject_deg);
  bplay->add_option("--primes", enumeration, "solenoid prime enumeration (default zig-zag)");
  bplay->add_option("--order", order, "solenoid crooked order");
  bplay->callback([&] {
    run = [&] {
      const Config cfg = load_config(config_path);
      PlayConfig pc;
      pc.seed = seed ? seed : cfg.seed;
      pc.eps0 = parse_q(eps0);
      pc.universe = cfg.universe;
      if (!below.empty()) pc.below = io::supernatural_from_json(json::parse(below));
      Strategy e = eve == "random" ? eve_random() : eve_identity();
      if (inject_move >= 0) e = eve_inject_degree(inject_move, inject_deg);
      Strategy o;
      if (odd == "solenoid") {
        if (!pc.below) throw Error("PreconditionViolated", "solenoid needs --below");
        o = odd_solenoid(*pc.below, enumeration, order);
      } else {
        o = odd_strategy(odd);
      }
      emit(io::to_json(play(parse_backend(backend), e, o, rounds, pc)), out);
    };
  });
  std::string vfile;
  std::vector<std::string> checks;
  auto* bver = bm->add_subcommand("verify", "verify a transcript");
  bver->add_option("FILE", vfile)->required()->check(CLI::ExistingFile);
  bver->add_option("--check", checks)->check(CLI::IsMember({"crooked_schedule", "splits_every_point", "type_budget"}));
  bver->callback([&] {
    run = [&] {
      json tj = json::parse(io::read_file(vfile));
      Transcript t = io::transcript_from_json(tj);
      if (checks.empty())
        checks = {t.backend == BackendKind::IntervalPL ? "crooked_schedule"
                  : t.backend == BackendKind::FinSurj  ? "splits_every_point"
                                                       : "type_budget"};
      auto r = verify_transcript(t, checks);
      json rj = io::to_json(r);
      tj["certificates"] = rj["certificates"];
      tj["blame"] = rj["blame"];
      tj["verification"] = rj;
      violation = !r.ok();
      emit(tj, out);
    };
  });

  // figure
  auto* fig = app.add_subcommand("figure", "figures");
  fig->require_subcommand(1);
  std::string svg_path;
  auto* c5 = fig->add_subcommand("c5", "grid polyline of c_5");
  c5->add_option("--svg", svg_path, "output file (stdout otherwise)");
  c5->callback([&] {
    run = [&] {
      std::string svg = grid_svg(canonical_crooked(5));
      if (svg_path.empty())
        std::cout << svg;
      else
        write_text(svg_path, svg);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    if (run) run();
  } catch (const Error& e) {
    std::cerr << json{{"error", e.kind()}, {"message", e.what()}, {"data", e.data()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Failure"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
  return violation ? 1 : 0;
}
