#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "qaff/checks.hpp"
#include "qaff/errors.hpp"

namespace py = pybind11;
using namespace qaff;

namespace {

py::tuple cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
        py::gil_scoped_release release;
        code = run_cli(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
}

std::string checks_json(const std::string& id, const std::vector<int>& ns, const std::vector<int>& ells,
                        const std::string& backend, std::uint64_t seed, const std::optional<std::string>& segments) {
    CheckParams p;
    p.ns = ns;
    p.ells = ells;
    p.backend = backend;
    p.seed = seed;
    if (segments) p.segments = parse_segments(*segments);
    std::vector<CheckReport> rs;
    {
        py::gil_scoped_release release;
        rs = run_checks(id, p);
    }
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rs) j.push_back(r.to_json());
    return j.dump();
}

std::string drinfeld_json(const std::string& segments, int n, const std::string& backend) {
    ScalarContext ctx = ScalarContext::from_backend_string(n, backend);
    SegmentList s = parse_segments(segments);
    PolyTuple pt = drinfeld_polys(s, ctx);
    nlohmann::json j = {{"segments", s.str()},
                        {"polys", pt.to_json(ctx)},
                        {"degrees", pt.degrees()},
                        {"factored", drinfeld_factored(s, ctx)}};
    return j.dump();
}

}  // namespace

PYBIND11_MODULE(_qaff, m) {
    m.doc() = "Exact affine Hecke and quantum affine sl_{n+1} computations";
    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<MathError>(m, "MathError", PyExc_ArithmeticError);
    m.def("run_cli", &cli, py::arg("args"), "Run the command-line front end; returns (exit_code, stdout, stderr).");
    m.def("check_ids", &check_ids);
    m.def("checks_json", &checks_json, py::arg("id"), py::arg("ns"), py::arg("ells"), py::arg("backend") = "symbolic",
          py::arg("seed") = 1, py::arg("segments") = std::nullopt);
    m.def("drinfeld_json", &drinfeld_json, py::arg("segments"), py::arg("n"), py::arg("backend") = "symbolic");
}
