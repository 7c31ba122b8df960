// Python module. Words cross the boundary as strings ("e1.f2.e1"), angles as
// "p/q" strings, reps and graphs as JSON text.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rank2sg/io.hpp"
#include "rank2sg/search.hpp"

namespace py = pybind11;
using namespace rank2sg;

namespace {

using Basis = std::vector<std::pair<std::int64_t, std::int64_t>>;

Basis basis_of(const Sublattice& L) {
  Basis out;
  for (const auto& v : L.basis()) out.emplace_back(v.s, v.t);
  return out;
}

Word checked(const Theta& th, const std::string& w) {
  Word x = parse_word(w);
  check_word(th, x);
  return x;
}

std::string rep_json(const Rep& r) { return rep_to_json(r).dump(); }

}  // namespace

PYBIND11_MODULE(_rank2sg, m) {
  m.doc() = "Rank-two semigroups from a permutation theta, their atomic representations and graphs.";

  static py::handle domain_error = py::exception<DomainError>(m, "DomainError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      py::object exc = py::reinterpret_borrow<py::object>(domain_error)(std::string(e.code()) + ": " + e.what());
      py::setattr(exc, "code", py::str(e.code()));
      PyErr_SetObject(domain_error.ptr(), exc.ptr());
    }
  });

  py::class_<Theta>(m, "Theta")
      .def_static("from_relations", &Theta::from_relations, py::arg("m"), py::arg("n"), py::arg("relations"))
      .def_property_readonly("m", &Theta::m)
      .def_property_readonly("n", &Theta::n)
      .def("forward", &Theta::forward)
      .def("inverse", &Theta::inverse)
      .def("relations", &Theta::relations)
      .def("cycles", &Theta::cycles)
      .def("to_toml", [](const Theta& t) { return theta_to_toml(t); })
      .def("__eq__", [](const Theta& a, const Theta& b) { return a == b; })
      .def("__repr__", [](const Theta& t) { return "<Theta " + std::to_string(t.m()) + "x" + std::to_string(t.n()) + ">"; });

  m.def("load_theta", &load_theta, py::arg("path"));
  m.def("parse_theta_toml", &parse_theta_toml, py::arg("text"));
  m.def("builtin_theta", &builtin_theta, py::arg("name"));
  m.def("fixture_names", [] {
    std::vector<std::string> out;
    for (const auto& f : builtin_fixtures()) out.push_back(f.name);
    return out;
  });

  m.def("normal_form", [](const Theta& th, const std::string& w) { return format_word(normal_form(th, checked(th, w))); });
  m.def("red_first", [](const Theta& th, const std::string& w) { return format_word(red_first(th, checked(th, w))); });
  m.def("refactor", [](const Theta& th, const std::string& w, const std::string& pattern) {
    return format_word(refactor(th, checked(th, w), parse_pattern(pattern)));
  });
  m.def("multiply", [](const Theta& th, const std::string& a, const std::string& b) {
    return format_word(multiply(th, checked(th, a), checked(th, b)));
  });
  // u and v are index strings such as "1121212".
  m.def("commutes", [](const Theta& th, const std::string& u, const std::string& v) {
    return commutes(th, parse_blue(u), parse_red(v));
  });
  m.def("theta_prime", [](const Theta& th, const std::string& u, const std::string& v) {
    auto [u2, v2] = theta_prime_apply(th, parse_blue(u), parse_red(v));
    return std::make_pair(format_indices(u2), format_indices(v2));
  });

  py::class_<Rep>(m, "Rep")
      .def_property_readonly("size", &Rep::size)
      .def_property_readonly("kernel", [](const Rep& r) { return basis_of(r.kernel); })
      .def_property_readonly("meta", [](const Rep& r) { return r.meta; })
      .def("to_json", &rep_json)
      .def("validate", [](const Rep& r) {
        Report rep = validate_rep(r);
        return rep.ok ? std::string("ok") : rep.code;
      })
      .def("symmetry", [](const Rep& r) { return basis_of(symmetry_group(r).lattice); })
      .def("is_irreducible", [](const Rep& r) { return is_irreducible(r); })
      .def("classify", [](const Rep& r) { return classify(graph_of(r)).type; })
      .def("decompose", [](const Rep& r) {
        // Characters of the finite summands, as angles on the basis of L.
        std::vector<std::vector<std::string>> out;
        for (const auto& s : decompose(r).summands) {
          std::vector<std::string> vals;
          for (const auto& a : s.chi.values) vals.push_back(a.str());
          out.push_back(vals);
        }
        return out;
      });

  m.def("rep_from_json", [](const std::string& text, const Theta* th) { return rep_from_json(Json::parse(text), th); },
        py::arg("text"), py::arg("theta") = nullptr);
  m.def("fixed_point_rep", &fixed_point_rep);
  m.def("from_theta_cycle",
        [](const Theta& th, const std::vector<std::pair<int, int>>& cyc, const std::string& a, const std::string& b) {
          return from_theta_cycle(th, cyc, RationalAngle::parse(a), RationalAngle::parse(b));
        },
        py::arg("theta"), py::arg("cycle"), py::arg("alpha") = "0", py::arg("beta") = "0");
  m.def("from_commuting_pair",
        [](const Theta& th, const std::string& u, const std::string& v, const std::string& a, const std::string& b) {
          return from_commuting_pair(th, parse_blue(u), parse_red(v), RationalAngle::parse(a), RationalAngle::parse(b));
        },
        py::arg("theta"), py::arg("u"), py::arg("v"), py::arg("alpha") = "0", py::arg("beta") = "0");
  m.def("build_3bi", [](const Theta& th, const std::string& u, const std::string& v) {
    return build_3bi(th, parse_blue(u), parse_red(v));
  });
  m.def("equivalent", [](const Rep& a, const Rep& b) { return equivalent_reps(a, b); });

  // Returns the dilated graph as JSON text.
  m.def("dilate",
        [](const Theta& th, const Rep& r, int depth, std::optional<std::uint64_t> seed, int max_vertices) {
          return graph_to_json(dilate(th, graph_of(r), {depth, seed, max_vertices}).graph).dump();
        },
        py::arg("theta"), py::arg("rep"), py::arg("depth") = 3, py::arg("seed") = py::none(),
        py::arg("max_vertices") = 200000);
  m.def("to_dot", [](const std::string& graph_json, const std::string& title) {
    return to_dot(graph_from_json(Json::parse(graph_json)), title);
  }, py::arg("graph_json"), py::arg("title") = "rep");

  m.def("iso_classes", [](int mm, int nn, bool swap, int cap) { return iso_classes(mm, nn, swap, cap).count(); },
        py::arg("m"), py::arg("n"), py::arg("swap") = true, py::arg("cap") = 8);
  m.def("find_commuting_pair",
        [](const Theta& th, std::int64_t target, int max_len) {
          auto r = find_commuting_pair(th, target, max_len);
          return py::dict(py::arg("u") = format_indices(r.u), py::arg("v") = format_indices(r.v),
                          py::arg("dimension") = r.dimension, py::arg("block_len") = r.block_len);
        },
        py::arg("theta"), py::arg("target"), py::arg("max_len") = 7);
  m.def("aperiodic_search",
        [](const Theta& th, int max_len, int jobs) -> std::optional<std::string> {
          auto w = aperiodic_search(th, max_len, jobs);
          if (!w) return std::nullopt;
          return format_word(w->tail.period);
        },
        py::arg("theta"), py::arg("max_len") = 12, py::arg("jobs") = 1);
}
