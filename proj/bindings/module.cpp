// Python bindings for the core operations: expectation values, Bell
// quantities, polytope membership, Kolmogorov feasibility, the entity
// simulators, liar-paradox traces and the small quantum kernel.

#include "contextsim/report.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

namespace py = pybind11;
using nlohmann::json;
using namespace contextsim;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
    case json::value_t::object: {
        py::dict d;
        for (const auto& [key, value] : j.items()) d[py::str(key)] = json_to_py(value);
        return d;
    }
    case json::value_t::array: {
        py::list l;
        for (const auto& v : j) l.append(json_to_py(v));
        return l;
    }
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<long long>());
    case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    default: return py::none();
    }
}

json py_to_json(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::dict>(obj)) {
        json j = json::object();
        for (const auto& item : obj.cast<py::dict>())
            j[item.first.cast<std::string>()] = py_to_json(item.second);
        return j;
    }
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        json j = json::array();
        for (const auto& item : obj.cast<py::sequence>()) j.push_back(py_to_json(item));
        return j;
    }
    throw py::type_error("unsupported value in JSON-like structure");
}

CorrelationVector<double> vector_from_tuple(const std::array<double, 4>& e) {
    return CorrelationVector<double>{e[0], e[1], e[2], e[3]};
}

BehaviorTable<double> table_from_py(const py::dict& table) {
    json j = py_to_json(table);
    if (!j.contains("pairs")) j = json{{"pairs", j}};
    // Force the float lane: python callers hand over floats.
    return std::visit(
        [](const auto& t) -> BehaviorTable<double> {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, BehaviorTable<double>>) {
                return t;
            } else {
                BehaviorTable<double> out;
                for (Pair p : kAllPairs) {
                    const auto& d = t.at(p);
                    out.set(p, CoincidenceDistribution<double>{to_double(d.uu), to_double(d.ud),
                                                               to_double(d.du), to_double(d.dd)});
                }
                return out;
            }
        },
        behavior_table_from_json(j));
}

SimulationReport run_simulation(const std::string& entity, std::uint64_t trials,
                                std::uint64_t seed, const py::object& config,
                                unsigned threads) {
    const EntityKind kind = entity_kind_from_string(entity);
    EntityConfig cfg;
    if (config.is_none())
        cfg = kind == EntityKind::Vessels ? EntityConfig(VesselsConfig{})
                                          : EntityConfig(SoccerConfig{});
    else
        cfg = config_from_json(kind, py_to_json(config));
    return SimulationReport{run_entity(kind, cfg, RunSpec{trials, seed}, threads)};
}

} // namespace

PYBIND11_MODULE(_contextsim, m) {
    m.doc() = "Bell/CHSH quantities, correlation-polytope membership and "
              "contextual entity simulators";
    m.attr("__version__") = kToolVersion;

    m.def(
        "expectation",
        [](double uu, double ud, double du, double dd) {
            return expectation(CoincidenceDistribution<double>{uu, ud, du, dd});
        },
        py::arg("p_uu"), py::arg("p_ud"), py::arg("p_du"), py::arg("p_dd"),
        "Expectation value of one coincidence distribution");

    m.def(
        "bell_quantity",
        [](const std::array<double, 4>& e) { return bell_quantity(vector_from_tuple(e)); },
        py::arg("correlations"), "|E13 - E14| + |E23 + E24|");

    m.def(
        "bell_verdict",
        [](const std::array<double, 4>& e) {
            const auto v = bell_verdict(vector_from_tuple(e));
            py::dict d;
            d["value"] = v.value;
            d["violated"] = v.violated;
            return d;
        },
        py::arg("correlations"));

    m.def(
        "chsh_facets",
        [](const std::array<double, 4>& e) {
            py::list out;
            for (const auto& f : chsh_facets(vector_from_tuple(e)))
                out.append(py::make_tuple(f.signs, f.value));
            return out;
        },
        py::arg("correlations"), "All 8 CHSH facet values as (signs, value) pairs");

    m.def("deterministic_vertices", []() {
        py::list out;
        for (const auto& v : deterministic_vertices())
            out.append(py::make_tuple(v[0], v[1], v[2], v[3]));
        return out;
    });

    m.def(
        "correlation_membership",
        [](const std::array<double, 4>& e) {
            return json_to_py(verdict_to_json(correlation_membership(vector_from_tuple(e))));
        },
        py::arg("correlations"),
        "LP membership test in the deterministic correlation polytope");

    m.def(
        "kolmogorov_feasibility",
        [](const py::dict& table) {
            return json_to_py(verdict_to_json(kolmogorov_feasibility(table_from_py(table))));
        },
        py::arg("table"),
        "Joint-distribution feasibility over the 16 deterministic assignments");

    m.def(
        "simulate",
        [](const std::string& entity, std::uint64_t trials, std::uint64_t seed,
           const py::object& config, unsigned threads) {
            return json_to_py(
                report_to_json(run_simulation(entity, trials, seed, config, threads)));
        },
        py::arg("entity"), py::arg("trials") = 10000, py::arg("seed") = 0,
        py::arg("config") = py::none(), py::arg("threads") = 1,
        "Seeded run of the vessels or soccer entity; returns the report as a dict");

    m.def(
        "simulate_json",
        [](const std::string& entity, std::uint64_t trials, std::uint64_t seed,
           const py::object& config, unsigned threads) {
            return canonical_dump(
                report_to_json(run_simulation(entity, trials, seed, config, threads)));
        },
        py::arg("entity"), py::arg("trials") = 10000, py::arg("seed") = 0,
        py::arg("config") = py::none(), py::arg("threads") = 1,
        "Same as simulate() but returns the canonical JSON text");

    m.def(
        "liar_trace",
        [](const std::string& variant, int sentence, bool value, int steps, double tau,
           bool include_states) {
            const LiarEntity entity = build_entity(liar_variant_from_string(variant), tau);
            const TruthCycleTrace trace = truth_cycle_trace(entity, sentence, value, steps);
            py::list assignments;
            for (const auto& a : trace.assignments) {
                py::dict d;
                d["sentence1"] = to_string(a.sentence1);
                d["sentence2"] = to_string(a.sentence2);
                assignments.append(d);
            }
            if (!include_states) return py::object(assignments);
            py::list states;
            for (const auto& s : trace.states) states.append(s.amplitudes);
            py::dict out;
            out["assignments"] = assignments;
            out["states"] = states;
            return py::object(out);
        },
        py::arg("variant"), py::arg("sentence") = 1, py::arg("value") = true,
        py::arg("steps") = 4, py::arg("tau") = 1.0, py::arg("include_states") = false,
        "Truth-cycle trace of a liar entity");

    m.def(
        "liar_measure",
        [](const std::string& variant, int sentence, bool value, double tau) {
            const LiarEntity entity = build_entity(liar_variant_from_string(variant), tau);
            const MeasurementResult r = measure(entity, sentence, value);
            return py::make_tuple(r.probability, r.post.amplitudes);
        },
        py::arg("variant"), py::arg("sentence"), py::arg("value"), py::arg("tau") = 1.0,
        "Born probability and collapsed state for a first measurement");

    m.def(
        "liar_initial_state",
        [](const std::string& variant) {
            return build_entity(liar_variant_from_string(variant)).psi0.amplitudes;
        },
        py::arg("variant"));

    // Quantum kernel primitives on raw numpy arrays.
    m.def(
        "tensor_state",
        [](const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
            return tensor_state(StateVector(a), StateVector(b)).amplitudes;
        },
        py::arg("a"), py::arg("b"));
    m.def("tensor_operator", &tensor_operator, py::arg("a"), py::arg("b"));
    m.def(
        "born_probability",
        [](const Eigen::MatrixXcd& p, const Eigen::VectorXcd& psi) {
            return born_probability(ProjectorOperator(p), StateVector(psi));
        },
        py::arg("projector"), py::arg("state"));
    m.def(
        "collapse",
        [](const Eigen::MatrixXcd& p, const Eigen::VectorXcd& psi) {
            return collapse(ProjectorOperator(p), StateVector(psi)).amplitudes;
        },
        py::arg("projector"), py::arg("state"));
    m.def(
        "evolve",
        [](const Eigen::MatrixXcd& h, double t, const Eigen::VectorXcd& psi) {
            return evolve(HermitianOperator(h), t, StateVector(psi)).amplitudes;
        },
        py::arg("hamiltonian"), py::arg("t"), py::arg("state"),
        "exp(-iHt) applied to the state");

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<CollapseError>(m, "CollapseError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
}
