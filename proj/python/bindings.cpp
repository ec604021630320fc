#include "qaoaplus/errors.hpp"
#include "qaoaplus/harness.hpp"

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qaoaplus;

namespace {

py::array_t<std::complex<double>> to_numpy(const State &state) {
    const auto amps = state.amplitudes();
    return py::array_t<std::complex<double>>(static_cast<py::ssize_t>(amps.size()),
                                             amps.data());
}

OptSettings make_settings(unsigned restarts, std::uint64_t seed, unsigned max_iterations) {
    OptSettings s;
    s.restarts = restarts;
    s.rng_seed = seed;
    s.max_iterations = max_iterations;
    return s;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "QAOA+ for minimum exact cover: exact statevector simulation";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<InstanceError>(m, "InstanceError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<OptimizationError>(m, "OptimizationError", PyExc_RuntimeError);
    py::register_exception<GenerationError>(m, "GenerationError", PyExc_RuntimeError);

    py::enum_<Variant>(m, "Variant")
        .value("original", Variant::original)
        .value("optimized", Variant::optimized);
    py::enum_<Strategy>(m, "Strategy")
        .value("random", Strategy::random)
        .value("fixing", Strategy::fixing);

    py::class_<MecInstance>(m, "MecInstance")
        .def(py::init<unsigned, std::vector<std::vector<unsigned>>>(),
             py::arg("universe_size"), py::arg("sets"))
        .def_property_readonly("universe_size", &MecInstance::universe_size)
        .def_property_readonly("num_sets", &MecInstance::num_sets)
        .def_property_readonly("sets", &MecInstance::sets)
        .def("weight", &MecInstance::weight)
        .def("__eq__", [](const MecInstance &a, const MecInstance &b) { return a == b; })
        .def("__repr__", [](const MecInstance &i) {
            return "<MecInstance m=" + std::to_string(i.universe_size()) +
                   " n=" + std::to_string(i.num_sets()) + ">";
        });

    py::class_<TailInstance>(m, "TailInstance")
        .def(py::init<unsigned, std::vector<std::vector<unsigned>>, std::vector<double>>(),
             py::arg("flight_count"), py::arg("routes"), py::arg("costs"))
        .def_property_readonly("flight_count", &TailInstance::flight_count)
        .def_property_readonly("routes", &TailInstance::routes)
        .def_property_readonly("costs", &TailInstance::costs);

    py::class_<Lambdas>(m, "Lambdas")
        .def(py::init<double, double>(), py::arg("lambda1"), py::arg("lambda2"))
        .def_property_readonly("lambda1", &Lambdas::lambda1)
        .def_property_readonly("lambda2", &Lambdas::lambda2);
    py::class_<TailLambdas>(m, "TailLambdas")
        .def(py::init<double, double, double>())
        .def_property_readonly("lambda1", &TailLambdas::lambda1)
        .def_property_readonly("lambda2", &TailLambdas::lambda2)
        .def_property_readonly("lambda3", &TailLambdas::lambda3);

    m.def("default_lambdas", &default_lambdas, py::arg("n"), py::arg("m"));
    m.def("default_tail_lambdas", &default_tail_lambdas);
    m.def("objective_value", &objective_value);
    m.def("tail_objective_value", &tail_objective_value);
    m.def("is_exact_cover", &is_exact_cover);
    m.def("conflict_edges", [](const MecInstance &i) { return conflict_graph(i).edges(); });
    m.def("phase_coefficients", &phase_coefficients);

    py::class_<Params>(m, "Params")
        .def(py::init<>())
        .def(py::init([](std::vector<double> g, std::vector<double> b) {
                 return Params{std::move(g), std::move(b)};
             }),
             py::arg("gammas"), py::arg("betas"))
        .def_readwrite("gammas", &Params::gammas)
        .def_readwrite("betas", &Params::betas);

    py::class_<CompiledAnsatz>(m, "CompiledAnsatz")
        .def_property_readonly("num_qubits", &CompiledAnsatz::num_qubits)
        .def_property_readonly("level", &CompiledAnsatz::level)
        .def_property_readonly("variant", &CompiledAnsatz::variant)
        .def_property_readonly("num_parameters", &CompiledAnsatz::num_parameters)
        .def_property_readonly("phase", &CompiledAnsatz::phase);
    m.def("compile_ansatz", &compile_ansatz, py::arg("instance"), py::arg("lambdas"),
          py::arg("variant"), py::arg("level"));
    m.def("compile_tail_ansatz", &compile_tail_ansatz);

    m.def("evolve", [](const CompiledAnsatz &a, const Params &p) {
        return to_numpy(evolve(a, p));
    });
    m.def("f_p", py::overload_cast<const CompiledAnsatz &, const Params &>(&f_p));
    m.def("success_probability", &success_probability);

    py::class_<OracleReport>(m, "OracleReport")
        .def_readonly("feasible_masks", &OracleReport::feasible_masks)
        .def_readonly("exact_covers", &OracleReport::exact_covers)
        .def_readonly("mec_masks", &OracleReport::mec_masks)
        .def_readonly("argmax_masks", &OracleReport::argmax_masks)
        .def_readonly("argmax_value", &OracleReport::argmax_value)
        .def_readonly("x_sol", &OracleReport::x_sol)
        .def_property_readonly("degenerate", &OracleReport::degenerate)
        .def_property_readonly("accepted", &OracleReport::accepted);
    m.def("solve", [](const MecInstance &i) { return solve(i); });
    m.def("verify_lambda_lemma", &verify_lambda_lemma);

    py::class_<LevelResult>(m, "LevelResult")
        .def_readonly("p", &LevelResult::p)
        .def_readonly("variant", &LevelResult::variant)
        .def_readonly("best_params", &LevelResult::best_params)
        .def_readonly("best_fp", &LevelResult::best_fp)
        .def_readonly("success_prob", &LevelResult::success_prob)
        .def_readonly("restart_values", &LevelResult::restart_values)
        .def_readonly("failed_restarts", &LevelResult::failed_restarts);

    m.def(
        "multistart",
        [](const CompiledAnsatz &a, Mask x_sol, unsigned restarts, std::uint64_t seed,
           unsigned max_iterations) {
            py::gil_scoped_release release;
            return multistart(a, x_sol, make_settings(restarts, seed, max_iterations));
        },
        py::arg("ansatz"), py::arg("x_sol"), py::arg("restarts") = 50, py::arg("seed") = 0,
        py::arg("max_iterations") = 200);
    m.def(
        "parameter_fixing_schedule",
        [](const CompiledAnsatz &a, unsigned p_max, Mask x_sol, unsigned restarts,
           std::uint64_t seed, unsigned max_iterations) {
            py::gil_scoped_release release;
            return parameter_fixing_schedule(a, p_max, x_sol,
                                             make_settings(restarts, seed, max_iterations));
        },
        py::arg("ansatz"), py::arg("p_max"), py::arg("x_sol"), py::arg("restarts") = 50,
        py::arg("seed") = 0, py::arg("max_iterations") = 200);
    m.def(
        "run_solve",
        [](const MecInstance &inst, unsigned p, Strategy s, Variant v, unsigned restarts,
           std::uint64_t seed) {
            py::gil_scoped_release release;
            return run_solve(inst, p, s, v, make_settings(restarts, seed, 200));
        },
        py::arg("instance"), py::arg("p"), py::arg("strategy") = Strategy::random,
        py::arg("variant") = Variant::original, py::arg("restarts") = 50,
        py::arg("seed") = 0);

    m.def(
        "generate",
        [](unsigned n, unsigned mm, std::uint64_t seed, unsigned planted) {
            GenSpec g;
            g.n = n;
            g.m = mm;
            g.seed = seed;
            g.planted_size = planted;
            return generate(g);
        },
        py::arg("n"), py::arg("m"), py::arg("seed"), py::arg("planted") = 0);
    m.def("parse_instance", [](const std::string &t) { return parse_instance(t); });
    m.def("serialize_instance", &serialize_instance);
    m.def("parse_tail_instance", [](const std::string &t) { return parse_tail_instance(t); });
    m.def("serialize_tail_instance", &serialize_tail_instance);
    m.def("emit_plot", [](const std::string &csv) { return emit_plot(csv); });
}
