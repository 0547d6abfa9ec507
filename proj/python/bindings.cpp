#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "loopvertex/export.hpp"
#include "loopvertex/verifier.hpp"

namespace py = pybind11;
using namespace loopvertex;
using json = nlohmann::ordered_json;

// values cross the boundary as JSON text; the Python side decodes it
PYBIND11_MODULE(_core, m) {
  m.doc() = "exact loop Schur functions, wreath characters and the orbifold vertex";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.def("chartable", [](int n, int d) { return chartable_json(n, d).dump(); }, py::arg("n"), py::arg("d"));

  m.def(
      "loop_schur",
      [](const std::string& lambda, int n, const std::string& method, long degree) {
        Partition bar = parse_lambda_bar(json::parse(lambda), n);
        return loopschur_json(bar, n, parse_method(method), degree).dump();
      },
      py::arg("lambda_json"), py::arg("n"), py::arg("method") = "ssyt", py::arg("degree") = 6);

  m.def(
      "dt_vertex",
      [](int n, const std::string& rp, const std::string& rm, const std::string& lambda, const std::string& alpha,
         const std::string& w, long degree) {
        NPartition l = lambda.empty() ? NPartition(n) : parse_npartition(json::parse(lambda), n);
        Framing f = w.empty() ? Framing::symmetric(n) : parse_framing(w);
        return dt_vertex_json(parse_partition(json::parse(rp)), parse_partition(json::parse(rm)), l,
                              parse_alpha(alpha), f, degree)
            .dump();
      },
      py::arg("n"), py::arg("rho_plus") = "[]", py::arg("rho_minus") = "[]", py::arg("lambda_json") = "",
      py::arg("alpha") = "1,1", py::arg("w") = "", py::arg("degree") = 4);

  m.def(
      "gw_vertex_ws",
      [](int n, const std::string& tp, const std::string& tm, const std::string& alpha, long degree) {
        return gw_vertex_json(parse_partition(json::parse(tp)), parse_partition(json::parse(tm)), parse_alpha(alpha),
                              n, degree)
            .dump();
      },
      py::arg("n"), py::arg("tau_plus") = "[]", py::arg("tau_minus") = "[]", py::arg("alpha") = "1,1",
      py::arg("degree") = 4);

  m.def("default_config", [] { return default_config().dump(); });
  m.def("suite_names", &suite_names);

  m.def(
      "verify",
      [](const std::string& suite, const std::string& config, int threads) {
        json cfg;
        try {
          cfg = json::parse(config);
        } catch (const json::parse_error& e) {
          throw ConfigError(e.what());
        }
        Report r;
        {
          py::gil_scoped_release release;
          r = run_suite(suite, cfg, threads);
        }
        return r.to_json().dump();
      },
      py::arg("suite"), py::arg("config"), py::arg("threads") = 0);
}
