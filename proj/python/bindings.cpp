#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qdtough/certifier.hpp"
#include "qdtough/error.hpp"
#include "qdtough/extremal.hpp"
#include "qdtough/family.hpp"
#include "qdtough/io.hpp"
#include "qdtough/lemmas.hpp"
#include "qdtough/report.hpp"
#include "qdtough/spectral.hpp"
#include "qdtough/toughness.hpp"

namespace py = pybind11;
using namespace qdtough;

namespace {

OracleOptions oracle_options(std::size_t cap) {
  OracleOptions o;
  o.max_order = cap;
  return o;
}

std::string dump(const report::json& doc) { return doc.dump(); }

}  // namespace

PYBIND11_MODULE(_qdtough, m) {
  m.doc() = "Toughness certification from distance signless Laplacian spectra";

  static py::exception<Error> error(m, "QdtoughError", PyExc_ValueError);
  static py::exception<NumericFailure> numeric(m, "NumericFailure", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NumericFailure& e) {
      numeric(e.what());
    } catch (const Error& e) {
      error((std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def_static("from_edges", [](std::size_t n, const std::vector<Edge>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) {
          if (u >= n || v >= n || u == v || !g.add_edge(u, v)) {
            throw Error(ErrorKind::InvalidArgument, "bad or repeated edge");
          }
        }
        return g;
      }, py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
      .def_static("from_edge_list", [](const std::string& s) { return from_edge_list(s); })
      .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
      .def("to_edge_list", [](const Graph& g) { return to_edge_list(g); })
      .def("add_edge", &Graph::add_edge)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("edges", &Graph::edges)
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("read_graph", [](const std::string& path) { return read_graph(path); }, py::arg("path"));
  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("cycle_graph", &cycle_graph, py::arg("n"));
  m.def("path_graph", &path_graph, py::arg("n"));
  m.def("star_graph", &star_graph, py::arg("leaves"));
  m.def("build_family", [](std::size_t s, std::vector<std::size_t> parts) {
    return build_family(ExtremalSpec(s, std::move(parts)));
  }, py::arg("s"), py::arg("parts"));

  m.def("eta1", [](const Graph& g) { return eta1(g); }, py::arg("graph"));
  m.def("wiener_index", &wiener_index, py::arg("graph"));
  m.def("transmissions", &transmissions, py::arg("graph"));

  m.def("_spectra", [](const Graph& g) { return dump(report::spectra_document(summarize(g))); });
  m.def("_toughness", [](const Graph& g, std::size_t cap) {
    return dump(report::toughness_document(toughness_exact(g, oracle_options(cap)), g.order()));
  });
  m.def("_is_t_tough", [](const Graph& g, const std::string& t, bool prime, std::size_t cap) {
    const Rational r = parse_rational(t);
    const auto variant = prime ? ToughnessVariant::TauPrime : ToughnessVariant::Tau;
    return dump(report::t_tough_document(is_t_tough(g, r, variant, oracle_options(cap)), r, variant));
  });
  m.def("_certify", [](const Graph& g, const std::string& theorem, std::int64_t param) {
    return dump(report::certificate_document(certify(g, parse_theorem(theorem), param)));
  });
  m.def("_compare", [](std::size_t s, std::vector<std::size_t> parts, std::size_t p) {
    return dump(report::comparison_document(compare_families(s, std::move(parts), p)));
  });
  m.def("_sweep", [](const std::string& theorem, std::int64_t param, std::size_t n_min, std::size_t n_max,
                     std::size_t delta, std::uint64_t seed, std::size_t count) {
    SweepConfig config;
    config.theorem = parse_theorem(theorem);
    config.param = param;
    config.n_min = n_min;
    config.n_max = n_max;
    config.delta = delta;
    config.seed = seed;
    config.count = count;
    SweepReport rep;
    {
      py::gil_scoped_release release;
      rep = falsify_sweep(config);
    }
    return dump(report::sweep_document(rep));
  });
  m.def("_verify_lemma", [](const std::string& lemma, std::uint64_t seed, std::size_t cases) {
    LemmaSuiteOptions options;
    options.seed = seed;
    options.cases = cases;
    return dump(report::lemmas_document(verify_lemma(lemma, options), seed));
  });
  m.def("lemma_names", &lemma_names);
}
