// pybind11 module peirce._core.  Report-like results cross the boundary as
// JSON text; the Python package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "peirce/cli.hpp"
#include "peirce/corpus.hpp"
#include "peirce/graded.hpp"
#include "peirce/idempotents.hpp"
#include "peirce/io.hpp"
#include "peirce/skewalg.hpp"
#include "peirce/smallcat.hpp"
#include "peirce/verify.hpp"

namespace py = pybind11;
using namespace peirce;

namespace {

  Side side_named(std::string const& s) {
    if (s == "left") {
      return Side::left;
    }
    if (s == "right") {
      return Side::right;
    }
    throw Error(ErrorKind::ParameterOutOfRange, "side must be \"left\" or \"right\"");
  }

  std::vector<Element> elements(FiniteRing const& ring, std::vector<Vec> const& vs) {
    std::vector<Element> out;
    for (auto const& v : vs) {
      out.push_back(ring.element(v));
    }
    return out;
  }

  io::Json verdict_json(Verdict const& v) {
    return {{"holds", v.holds}, {"witness", v.witness}, {"reason", v.reason}, {"product", v.product}};
  }

  std::string strong_report(FiniteRing const& ring, std::vector<Vec> const& idems) {
    auto table = peirce_table(validate_complete_set(ring, elements(ring, idems)));
    auto r     = strong_condition_report(table);
    return io::Json{{"condition1", verdict_json(r.condition1)},
                    {"condition2", verdict_json(r.condition2)},
                    {"condition3", verdict_json(r.condition3)},
                    {"agree", r.agree}}
        .dump();
  }

  std::vector<std::vector<Vec>> components(FiniteRing const& ring, std::vector<Vec> const& idems) {
    auto table = peirce_table(validate_complete_set(ring, elements(ring, idems)));
    std::vector<std::vector<Vec>> out;
    for (auto const& c : table.components) {
      out.push_back(c.basis());
    }
    return out;
  }

  std::string homset_report(SmallCategory const& cat) {
    auto r = homset_strong_report(cat);
    return io::Json{{"condition1", verdict_json(r.condition1)},
                    {"condition2", verdict_json(r.condition2)},
                    {"condition3", verdict_json(r.condition3)},
                    {"agree", r.agree}}
        .dump();
  }

  std::string algebra_report(SkewAlgebra const& alg) {
    auto eq = strong_idempotent_equivalence_check(alg);
    return io::Json{{"ring", io::ring_to_json(alg.ring)},
                    {"local_units", alg.local_units},
                    {"strongly_graded", alg.strongly_graded},
                    {"object_unital", alg.object_unital},
                    {"idempotents_strong", eq.idempotents_strong},
                    {"category_homset_strong", eq.category_homset_strong},
                    {"agree", eq.agree}}
        .dump();
  }

  py::tuple run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "peirce");
    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite rings with enough idempotents and category graded rings";

  static py::exception<Error> error(m, "PeirceError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (Error const& e) {
      py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.detail()).c_str());
    }
  });

  py::class_<FiniteRing>(m, "Ring")
      .def(py::init([](Coord modulus, std::size_t rank, std::vector<Coord> constants,
                       std::vector<std::string> labels) {
             return make_ring(modulus, rank, std::move(constants), std::move(labels));
           }),
           py::arg("modulus"), py::arg("rank"), py::arg("constants"),
           py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("modulus", &FiniteRing::modulus)
      .def_property_readonly("rank", &FiniteRing::rank)
      .def_property_readonly("order", &FiniteRing::order)
      .def_property_readonly("labels", &FiniteRing::labels)
      .def_property_readonly("constants", [](FiniteRing const& r) { return r.spec().constants; })
      .def("multiply", &FiniteRing::multiply)
      .def("add", &FiniteRing::add)
      .def("identity", [](FiniteRing const& r) -> std::optional<Vec> {
        auto e = find_identity(r);
        return e ? std::optional<Vec>(e->coords()) : std::nullopt;
      })
      .def("to_json", [](FiniteRing const& r) { return io::ring_to_json(r).dump(); });

  py::class_<SmallCategory>(m, "Category")
      .def_property_readonly("object_count", &SmallCategory::object_count)
      .def_property_readonly("morphism_count", &SmallCategory::morphism_count)
      .def("dom", &SmallCategory::dom)
      .def("cod", &SmallCategory::cod)
      .def("identity", &SmallCategory::identity)
      .def("compose", [](SmallCategory const& c, std::size_t g, std::size_t h) -> std::optional<std::size_t> {
        return c.composable(g, h) ? std::optional(c.compose(g, h)) : std::nullopt;
      })
      .def("hom", &SmallCategory::hom)
      .def("to_json", [](SmallCategory const& c) { return io::category_to_json(c).dump(); });

  m.def("load_ring", [](std::string const& p) { return io::load_ring(p); });
  m.def("load_vectors", [](std::string const& p) { return io::load_vectors(p); });
  m.def("load_category", [](std::string const& p) { return io::load_category(p); });

  m.def("strong_report", &strong_report, py::arg("ring"), py::arg("idempotents"));
  m.def("peirce_components", &components, py::arg("ring"), py::arg("idempotents"));
  m.def(
      "ideal_lattice_size",
      [](FiniteRing const& ring, std::string const& side, std::size_t cap) {
        auto l = enumerate_one_sided_ideals(ring, side_named(side), cap);
        return py::make_tuple(l.size(), l.height);
      },
      py::arg("ring"), py::arg("side") = "left", py::arg("cap") = kDefaultLatticeCap);

  m.def("monoid_names", &monoid_names);
  m.def("build_mx", [](std::string const& name, std::size_t s) { return build_MX(named_monoid(name), s); },
        py::arg("monoid"), py::arg("set_size") = 1);
  m.def("pair_groupoid", &pair_groupoid);
  m.def("arrow_category", &arrow_category);
  m.def("is_groupoid", [](SmallCategory const& c) { return is_groupoid(c).groupoid; });
  m.def("is_homset_strong", [](SmallCategory const& c) { return is_homset_strong(c); });
  m.def("homset_report", &homset_report);

  m.def("category_algebra", [](FiniteRing const& r, SmallCategory const& c) {
    return algebra_report(build_category_algebra(r, c));
  });
  m.def("skew_algebra", [](std::string const& path) {
    return algebra_report(build_skew_algebra(io::load_system(path)));
  });

  m.def("prop_names", &verify::prop_names);
  m.def(
      "verify_prop",
      [](std::string const& name, std::size_t cap) {
        return verify::to_json(verify::verify_prop(name, cap), false).dump();
      },
      py::arg("name"), py::arg("cap") = kDefaultLatticeCap);
  m.def("suite_names", &corpus::suite_names);
  m.def("manifest", [](std::string const& name) { return corpus::manifest(name); });

  m.def("run_cli", &run_cli, py::arg("args"));
  m.attr("__version__") = cli::kToolVersion;
}
