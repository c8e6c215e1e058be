#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pseudoarc/bm.hpp"
#include "pseudoarc/circle.hpp"
#include "pseudoarc/crooked.hpp"
#include "pseudoarc/errors.hpp"
#include "pseudoarc/factorization.hpp"
#include "pseudoarc/io.hpp"
#include "pseudoarc/types.hpp"

namespace py = pybind11;
using namespace pseudoarc;
using io::json;

// structured values cross the boundary as JSON text; the Python side decodes them
namespace {

std::string dump(const json& j) { return j.dump(); }

SimplicialMap simp(std::int64_t codomain, const std::vector<std::int64_t>& values) {
  return SimplicialMap(codomain, values);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static PyObject* exc = PyErr_NewException("pseudoarc._core.PseudoarcError", PyExc_RuntimeError, nullptr);
  m.add_object("PseudoarcError", py::handle(exc));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = py::reinterpret_borrow<py::object>(exc)(e.what());
      err.attr("kind") = e.kind();
      err.attr("data") = e.data();
      PyErr_SetObject(exc, err.ptr());
    }
  });

  m.def("crn", [](std::uint64_t n) { return crn(n).get_str(); });
  m.def("canonical_crooked", [](std::int64_t n) { return canonical_crooked(n).values(); });
  m.def("eval_point", [](std::int64_t n, const std::string& i) { return eval_point(n, Z(i)); });
  m.def("is_crooked", [](std::int64_t codomain, const std::vector<std::int64_t>& v) {
    auto r = is_crooked(simp(codomain, v));
    return py::make_tuple(r.crooked, r.i, r.j);
  });
  m.def("eps_crooked_decide", [](std::int64_t codomain, const std::vector<std::int64_t>& v, const std::string& eps) {
    static const char* names[] = {"Certified", "Refuted", "Indeterminate"};
    auto r = eps_crooked_decide(simp(codomain, v), parse_q(eps));
    return std::string(names[r.kind]);
  });
  m.def("factor_through_canonical", [](std::int64_t codomain, const std::vector<std::int64_t>& v) {
    return factor_through_canonical(simp(codomain, v)).values();
  });
  m.def("cofactor_to_canonical", [](std::int64_t codomain, const std::vector<std::int64_t>& v) {
    return cofactor_to_canonical(simp(codomain, v)).values();
  });
  m.def("crooked_factorize", [](const std::string& g_json, const std::string& eps) {
    auto r = crooked_factorize(io::pl_from_json(json::parse(g_json)), parse_q(eps));
    Z N = floor_q(Q(1) / r.delta) + 1;
    auto res = r.resolve(FInput{std::nullopt, N.get_si(), r.delta});
    return dump({{"delta", io::to_json(r.delta)},
                 {"n", r.n},
                 {"canonical_n", N.get_si()},
                 {"bound", io::to_json(res.bound)},
                 {"exact", res.exact ? io::to_json(*res.exact) : json(nullptr)}});
  });
  m.def("circle_degree", [](const std::string& c) { return degree(io::circle_from_json(json::parse(c))); });
  m.def("circle_compose", [](const std::string& a, const std::string& b) {
    return dump(io::to_json(compose_circle(io::circle_from_json(json::parse(a)), io::circle_from_json(json::parse(b)))));
  });
  m.def("crooked_circle_map", [](std::int64_t n, std::int64_t d) {
    auto r = crooked_circle_map(n, d);
    return dump({{"map", io::to_json(r.map)}, {"avatar", io::to_json(r.avatar)}, {"pattern", r.pattern}});
  });
  m.def("is_circularly_crooked", [](std::int64_t n, const std::vector<std::int64_t>& v) {
    return is_circularly_crooked(CircularSimplicialMap(n, v)).crooked;
  });
  m.def("rogers_witness_check", [](std::int64_t grid) { return dump(io::to_json(rogers_witness_check(grid))); });
  m.def("type_of_sequence", [](const std::vector<std::int64_t>& prefix, const std::vector<std::int64_t>& cycle) {
    return dump(io::to_json(type_of_sequence({prefix, cycle}).canonical()));
  });
  m.def("multiplication_solve", [](const std::string& s, const std::string& sp) -> std::optional<std::string> {
    auto t = multiplication_solve(io::supernatural_from_json(json::parse(s)), io::supernatural_from_json(json::parse(sp)));
    if (!t) return std::nullopt;
    return dump(io::to_json(*t));
  });
  m.def("supernatural_mul", [](const std::string& a, const std::string& b) {
    return dump(io::to_json(mul(io::supernatural_from_json(json::parse(a)), io::supernatural_from_json(json::parse(b)))));
  });
  m.def("type_equiv", [](const std::string& a, const std::string& b) {
    return type_equiv(io::supernatural_from_json(json::parse(a)), io::supernatural_from_json(json::parse(b)));
  });
  m.def(
      "bm_play",
      [](const std::string& backend, const std::string& odd, const std::string& eve, std::int64_t rounds,
         std::uint64_t seed, std::optional<std::string> below, std::int64_t inject, std::int64_t inject_degree) {
        PlayConfig pc;
        pc.seed = seed;
        if (below) pc.below = io::supernatural_from_json(json::parse(*below));
        Strategy e = eve == "random" ? eve_random() : eve_identity();
        if (inject >= 0) e = eve_inject_degree(inject, inject_degree);
        Strategy o;
        if (odd == "solenoid") {
          if (!pc.below) throw Error("PreconditionViolated", "solenoid needs below");
          o = odd_solenoid(*pc.below);
        } else {
          o = odd_strategy(odd);
        }
        return dump(io::to_json(play(parse_backend(backend), e, o, rounds, pc)));
      },
      py::arg("backend"), py::arg("odd"), py::arg("eve") = "identity", py::arg("rounds") = 6, py::arg("seed") = 0,
      py::arg("below") = py::none(), py::arg("inject") = -1, py::arg("inject_degree") = 3);
  m.def("bm_verify", [](const std::string& transcript, const std::vector<std::string>& checks) {
    return dump(io::to_json(verify_transcript(io::transcript_from_json(json::parse(transcript)), checks)));
  });
  m.def("lewis_minc", [](std::int64_t k) {
    std::vector<std::string> out;
    for (auto& s : lewis_minc(k)) out.push_back(s.m.get_str());
    return out;
  });
}
