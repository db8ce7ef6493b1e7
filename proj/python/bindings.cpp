#include "xyqc/cli.hpp"
#include "xyqc/correlators.hpp"
#include "xyqc/errors.hpp"
#include "xyqc/measures.hpp"
#include "xyqc/oracle.hpp"
#include "xyqc/sweep.hpp"
#include "xyqc/xstate.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace xyqc;

namespace {

py::dict record_dict(const SweepRecord &r) {
    py::dict d;
    d["gamma"]       = r.gamma;
    d["lambda"]      = r.lambda;
    d["temperature"] = r.temperature;
    d["n"]           = r.n;
    d["sz"]          = r.sz;
    d["xx"]          = r.xx;
    d["yy"]          = r.yy;
    d["zz"]          = r.zz;
    d["deficit"]     = r.deficit;
    d["theta_opt"]   = r.theta_opt;
    d["phi_opt"]     = r.phi_opt;
    d["c_l1"]        = r.c_l1;
    d["c_rel"]       = r.c_rel;
    return d;
}

} // namespace

PYBIND11_MODULE(_xyqc, m) {
    m.doc() = "Quantum correlations and coherence of the anisotropic XY chain in a transverse field.";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", error);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", error);
    py::register_exception<IndexError>(m, "IndexError", error);
    py::register_exception<PhysicalityError>(m, "PhysicalityError", error);
    py::register_exception<SpacingError>(m, "SpacingError", error);
    py::register_exception<EmptyInputError>(m, "EmptyInputError", error);
    py::register_exception<SizeError>(m, "SizeError", error);
    py::register_exception<IoError>(m, "IoError", error);

    py::class_<ChainParams>(m, "ChainParams")
        .def(py::init<double, double, double>(), py::arg("gamma"), py::arg("lambda_"), py::arg("temperature") = 0.0)
        .def_readwrite("gamma", &ChainParams::gamma)
        .def_readwrite("lambda_", &ChainParams::lambda)
        .def_readwrite("temperature", &ChainParams::temperature);

    py::class_<QuadratureConfig>(m, "QuadratureConfig")
        .def(py::init([](int nodes, int doublings, double tol) { return QuadratureConfig{nodes, doublings, tol}; }),
             py::arg("initial_nodes") = 128, py::arg("max_doublings") = 6, py::arg("abs_tol") = 1e-10)
        .def_readwrite("initial_nodes", &QuadratureConfig::initial_nodes)
        .def_readwrite("max_doublings", &QuadratureConfig::max_doublings)
        .def_readwrite("abs_tol", &QuadratureConfig::abs_tol);

    py::class_<OptimizerConfig>(m, "OptimizerConfig")
        .def(py::init([](int grid, double tol, int iters) { return OptimizerConfig{grid, tol, iters}; }),
             py::arg("grid_points") = 64, py::arg("refine_tol") = 1e-9, py::arg("max_refine_iters") = 200)
        .def_readwrite("grid_points", &OptimizerConfig::grid_points)
        .def_readwrite("refine_tol", &OptimizerConfig::refine_tol)
        .def_readwrite("max_refine_iters", &OptimizerConfig::max_refine_iters);

    py::class_<CorrelatorSet>(m, "CorrelatorSet")
        .def_readonly("n", &CorrelatorSet::n)
        .def_readonly("sz", &CorrelatorSet::sz)
        .def_readonly("xx", &CorrelatorSet::xx)
        .def_readonly("yy", &CorrelatorSet::yy)
        .def_readonly("zz", &CorrelatorSet::zz)
        .def("__repr__", [](const CorrelatorSet &c) {
            return "CorrelatorSet(n=" + std::to_string(c.n) + ", sz=" + cli::format_real(c.sz) +
                   ", xx=" + cli::format_real(c.xx) + ", yy=" + cli::format_real(c.yy) + ", zz=" + cli::format_real(c.zz) + ")";
        });

    m.def("transverse_magnetization", &transverse_magnetization, py::arg("params"), py::arg("quad") = QuadratureConfig{});
    m.def("f_coefficient", &f_coefficient, py::arg("params"), py::arg("k"), py::arg("quad") = QuadratureConfig{});
    m.def("correlator_set", &correlator_set, py::arg("params"), py::arg("n"), py::arg("quad") = QuadratureConfig{});

    py::class_<XState>(m, "XState")
        .def_property_readonly("sz", &XState::sz)
        .def_property_readonly("xx", &XState::xx)
        .def_property_readonly("yy", &XState::yy)
        .def_property_readonly("zz", &XState::zz)
        .def("matrix", &XState::matrix);

    m.def("assemble", py::overload_cast<double, double, double, double>(&assemble), py::arg("sz"), py::arg("xx"),
          py::arg("yy"), py::arg("zz"));
    m.def("assemble", py::overload_cast<const CorrelatorSet &>(&assemble), py::arg("corr"));
    m.def("spectrum", [](const XState &s) {
        const auto sp = spectrum(s);
        return py::make_tuple(sp.eta, sp.xi);
    });
    m.def("diagonal_spectrum", &diagonal_spectrum);

    m.def("entropy", py::overload_cast<const XState &>(&entropy), "von Neumann entropy in bits");
    m.def("post_measurement_spectrum", [](const XState &s, double theta, double phi) {
        return post_measurement_spectrum(s, {theta, phi});
    }, py::arg("state"), py::arg("theta"), py::arg("phi"));
    m.def("one_way_deficit", [](const XState &s, const OptimizerConfig &cfg) {
        const auto d = one_way_deficit(s, cfg);
        return py::make_tuple(d.value, d.argmin.theta, d.argmin.phi);
    }, py::arg("state"), py::arg("cfg") = OptimizerConfig{});
    m.def("l1_coherence", &l1_coherence);
    m.def("relative_entropy_coherence", &relative_entropy_coherence);

    m.def("evaluate_point", [](const ChainParams &p, const std::vector<int> &separations, const QuadratureConfig &quad,
                               const OptimizerConfig &opt) {
        py::list out;
        for(const auto &r : evaluate_point(p, separations, quad, opt)) out.append(record_dict(r));
        return out;
    }, py::arg("params"), py::arg("separations") = std::vector<int>{1}, py::arg("quad") = QuadratureConfig{},
          py::arg("opt") = OptimizerConfig{});

    m.def("run_sweep", [](const std::vector<double> &gammas, std::array<double, 3> lambda_range,
                          const std::vector<double> &temperatures, const std::vector<int> &separations, int workers,
                          const QuadratureConfig &quad, const OptimizerConfig &opt) {
        SweepGrid grid{{lambda_range[0], lambda_range[1], lambda_range[2]}, gammas, temperatures, separations};
        std::vector<SweepRecord> records;
        {
            py::gil_scoped_release release;
            records = run_sweep(grid, quad, opt, workers);
        }
        py::list out;
        for(const auto &r : records) out.append(record_dict(r));
        return out;
    }, py::arg("gammas"), py::arg("lambda_range"), py::arg("temperatures") = std::vector<double>{0.0},
          py::arg("separations") = std::vector<int>{1}, py::arg("workers") = 1, py::arg("quad") = QuadratureConfig{},
          py::arg("opt") = OptimizerConfig{},
          "Records ordered by (gamma, temperature, n, lambda); lambda_range is (start, end, step).");

    m.def("critical_points", [](const std::vector<double> &lambdas, const std::vector<double> &deficit,
                                const std::vector<double> &c_l1, const std::vector<double> &c_rel) {
        if(lambdas.size() != deficit.size() || lambdas.size() != c_l1.size() || lambdas.size() != c_rel.size())
            throw DomainError("critical_points: sequences must have equal length");
        std::vector<SweepRecord> records;
        for(std::size_t i = 0; i < lambdas.size(); ++i) {
            SweepRecord r;
            r.lambda  = lambdas[i];
            r.deficit = deficit[i];
            r.c_l1    = c_l1[i];
            r.c_rel   = c_rel[i];
            records.push_back(r);
        }
        const auto derivs = derivative_lambda(records);
        py::dict   out;
        for(const auto &name : measure_names()) {
            const auto est = detect_critical_point(derivs, name);
            out[py::str(name)] = py::make_tuple(est.lambda_c, est.uncertainty, est.derivative_peak);
        }
        return out;
    }, py::arg("lambdas"), py::arg("deficit"), py::arg("c_l1"), py::arg("c_rel"),
          "Per measure: (lambda_c, uncertainty, peak derivative) from central differences on a uniform grid.");

    m.def("finite_chain_correlators", [](int sites, double gamma, double lambda, double temperature, int n) {
        return oracle::thermal_two_site({sites, gamma, lambda, temperature}, n).corr;
    }, py::arg("sites"), py::arg("gamma"), py::arg("lambda_"), py::arg("temperature"), py::arg("n") = 1,
          "Thermal correlators of a periodic chain by exact diagonalization.");

    m.attr("CSV_HEADER") = cli::record_header;
}
