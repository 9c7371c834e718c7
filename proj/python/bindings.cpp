// Python bindings for the main operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "linchrom/certificate.hpp"
#include "linchrom/experiments.hpp"
#include "linchrom/rng.hpp"

namespace py = pybind11;
using namespace linchrom;

PYBIND11_MODULE(_core, m) {
    m.doc() = "linear/centred colouring toolkit";

    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<SizeGuardError>(m, "SizeGuardError", PyExc_RuntimeError);
    py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "GraphParseError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def(py::init<int>(), py::arg("n"))
        .def(py::init<int, const std::vector<Edge>&>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def("neighbours", &Graph::neighbours)
        .def("edges", &Graph::edges)
        .def("density", &Graph::density)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream ss;
            ss << "Graph(n=" << g.vertex_count() << ", m=" << g.edge_count() << ")";
            return ss.str();
        });

    py::class_<TwoRoundSample>(m, "TwoRoundSample")
        .def_readonly("g1", &TwoRoundSample::g1)
        .def_readonly("g2", &TwoRoundSample::g2)
        .def_readonly("g_union", &TwoRoundSample::g_union)
        .def_readonly("p1", &TwoRoundSample::p1)
        .def_readonly("p2", &TwoRoundSample::p2);

    m.def("sample_gnp", &sample_gnp, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("sample_two_round", &sample_two_round, py::arg("n"), py::arg("p"), py::arg("seed"),
          py::arg("p1_override") = std::nullopt);
    m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
    m.def("encode_graph6", &encode_graph6);
    m.def("components", &components);
    m.def("diameter", &diameter);
    m.def("induced_subgraph", [](const Graph& g, const std::vector<int>& s) {
        InducedSubgraph sub = induced_subgraph(g, s);
        return py::make_tuple(sub.graph, sub.vertex_map);
    });
    m.def("all_connected_graph6", &all_connected_graph6);

    m.def("is_proper", &is_proper);
    m.def("has_centre", &has_centre);
    m.def(
        "find_path_without_centre",
        [](const Graph& g, const Colouring& phi) -> std::optional<std::vector<int>> {
            auto witness = find_path_without_centre(g, phi);
            if (!witness) return std::nullopt;
            return witness->vertices;
        },
        py::arg("g"), py::arg("phi"));
    m.def(
        "is_centred",
        [](const Graph& g, const Colouring& phi) { return is_centred(g, phi); }, py::arg("g"),
        py::arg("phi"));
    m.def("chromatic_number", [](const Graph& g) { return chromatic_number(g); });
    m.def("linear_chromatic_number", [](const Graph& g) { return linear_chromatic_number(g); });
    m.def("tree_depth", [](const Graph& g) { return tree_depth(g); });
    m.def("path_centred_value", &path_centred_value);
    m.def("linear_lower_bound_from_diameter", &linear_lower_bound_from_diameter);

    py::class_<SetPairing>(m, "SetPairing")
        .def(py::init<>())
        .def_readwrite("s", &SetPairing::s)
        .def_readwrite("pairs", &SetPairing::pairs)
        .def("__eq__", [](const SetPairing& a, const SetPairing& b) { return a == b; });

    m.def("build_set_pairing", &build_set_pairing);
    m.def(
        "peel_core",
        [](const Graph& g, const SetPairing& sp, int k) {
            PeelResult r = peel_core(g, sp, k);
            return py::make_tuple(r.core, r.removed_pairs);
        },
        py::arg("g"), py::arg("sp"), py::arg("k"));

    py::enum_<ExpansionMode>(m, "ExpansionMode")
        .value("exact", ExpansionMode::exact)
        .value("sampled", ExpansionMode::sampled);

    py::class_<GoodnessReport>(m, "GoodnessReport")
        .def_readonly("connected", &GoodnessReport::connected)
        .def_readonly("expansion_ok", &GoodnessReport::expansion_ok)
        .def_readonly("violating_set", &GoodnessReport::violating_set)
        .def_property_readonly("expansion_mode",
                               [](const GoodnessReport& r) { return r.expansion_mode; });

    m.def(
        "is_good",
        [](const Graph& g, const std::vector<int>& s, long long num, long long den,
           ExpansionMode mode, int budget, std::uint64_t seed) {
            return is_good(g, s, Fraction{num, den}, mode, budget, seed);
        },
        py::arg("g"), py::arg("s"), py::arg("fraction_num") = 1, py::arg("fraction_den") = 45,
        py::arg("mode") = ExpansionMode::sampled, py::arg("sample_budget") = 64,
        py::arg("seed") = 0);

    py::class_<PosaParams>(m, "PosaParams")
        .def(py::init<>())
        .def_readwrite("max_rotations_per_phase", &PosaParams::max_rotations_per_phase)
        .def_readwrite("max_restarts", &PosaParams::max_restarts)
        .def_readwrite("booster_policy", &PosaParams::booster_policy)
        .def_readwrite("seed", &PosaParams::seed);

    m.def(
        "posa_hamilton_path",
        [](const Graph& g, const std::vector<int>& s, const std::vector<Edge>& sprinkle,
           const PosaParams& params) -> std::optional<std::vector<int>> {
            auto path = posa_hamilton_path(g, s, sprinkle, params);
            if (!path) return std::nullopt;
            return path->vertices;
        },
        py::arg("g"), py::arg("s"), py::arg("sprinkle"), py::arg("params"));
    m.def(
        "longest_path_found",
        [](const Graph& g, const std::vector<int>& s, const std::vector<Edge>& sprinkle,
           const PosaParams& params) { return longest_path_found(g, s, sprinkle, params).vertices; },
        py::arg("g"), py::arg("s"), py::arg("sprinkle"), py::arg("params"));

    py::class_<CertificateParams>(m, "CertificateParams")
        .def_readonly("k", &CertificateParams::k)
        .def_readonly("seed", &CertificateParams::seed)
        .def_readonly("sprinkle_total", &CertificateParams::sprinkle_total)
        .def_readonly("sprinkle_consumed", &CertificateParams::sprinkle_consumed)
        .def_readonly("sprinkle_accepted", &CertificateParams::sprinkle_accepted);

    py::class_<BadPathCertificate>(m, "BadPathCertificate")
        .def_readonly("path", &BadPathCertificate::path)
        .def_readonly("sub_pairing", &BadPathCertificate::sub_pairing)
        .def_readonly("params", &BadPathCertificate::params);

    py::class_<CertifyOutcome>(m, "CertifyOutcome")
        .def_readonly("certificate", &CertifyOutcome::certificate)
        .def_property_readonly("reason",
                               [](const CertifyOutcome& o) { return to_string(o.reason); })
        .def_readonly("pairing", &CertifyOutcome::pairing)
        .def_readonly("core", &CertifyOutcome::core)
        .def_readonly("removed_pairs", &CertifyOutcome::removed_pairs)
        .def_readonly("k_used", &CertifyOutcome::k_used)
        .def_readonly("goodness", &CertifyOutcome::goodness)
        .def_property_readonly("success",
                               [](const CertifyOutcome& o) { return o.certificate.has_value(); });

    m.def(
        "certify_not_linear",
        [](const Graph& g, const Colouring& phi, std::optional<int> k, const PosaParams& posa) {
            return certify_not_linear(g, phi, k, posa);
        },
        py::arg("g"), py::arg("phi"), py::arg("k_override"), py::arg("posa"));
    m.def(
        "certify_not_linear_two_round",
        [](const TwoRoundSample& sample, const Colouring& phi, std::optional<int> k,
           const PosaParams& posa) { return certify_not_linear(sample, phi, k, posa); },
        py::arg("sample"), py::arg("phi"), py::arg("k_override"), py::arg("posa"));
    m.def(
        "verify_certificate",
        [](const Graph& g, const Colouring& phi, const BadPathCertificate& cert,
           const SetPairing& original) {
            VerifyResult r = verify_certificate(g, phi, cert, original);
            return py::make_tuple(r.ok, to_string(r.violation));
        },
        py::arg("g"), py::arg("phi"), py::arg("cert"), py::arg("original"));
    m.def("serialize_certificate", &serialize_certificate);
    m.def("parse_certificate", [](const std::string& line) { return parse_certificate(line); });

    py::enum_<Regime>(m, "Regime")
        .value("dense", Regime::dense)
        .value("sparse", Regime::sparse)
        .value("supercritical", Regime::supercritical);

    py::enum_<ColouringPolicy>(m, "ColouringPolicy")
        .value("balanced_random", ColouringPolicy::balanced_random)
        .value("greedy", ColouringPolicy::greedy)
        .value("explicit_list", ColouringPolicy::explicit_list);

    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init<>())
        .def_readwrite("regime", &ExperimentConfig::regime)
        .def_readwrite("n", &ExperimentConfig::n)
        .def_readwrite("omega_or_c", &ExperimentConfig::omega_or_c)
        .def_readwrite("policy", &ExperimentConfig::policy)
        .def_readwrite("explicit_colours", &ExperimentConfig::explicit_colours)
        .def_readwrite("classes", &ExperimentConfig::classes)
        .def_readwrite("trials", &ExperimentConfig::trials)
        .def_readwrite("seed", &ExperimentConfig::seed)
        .def_readwrite("output_path", &ExperimentConfig::output_path);

    py::class_<TrialRow>(m, "TrialRow")
        .def_property_readonly("fields", &TrialRow::to_fields)
        .def_static("field_names", &TrialRow::field_names)
        .def_readonly("trial_index", &TrialRow::trial_index)
        .def_readonly("success", &TrialRow::success)
        .def_readonly("failure_reason", &TrialRow::failure_reason)
        .def_readonly("core_size", &TrialRow::core_size)
        .def_readonly("path_edges", &TrialRow::path_edges)
        .def_readonly("max_diameter", &TrialRow::max_diameter)
        .def_readonly("lb_chi_lin", &TrialRow::lb_chi_lin)
        .def_readonly("small_checks_ok", &TrialRow::small_checks_ok)
        .def_readonly("verified", &TrialRow::verified);

    m.def("run_experiment", &run_experiment, py::arg("config"), py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def(
        "run_conjecture_sweep",
        [](const std::vector<std::string>& corpus) {
            std::ostringstream joined;
            for (const auto& line : corpus) joined << line << "\n";
            std::istringstream in(joined.str());
            SweepResult result = run_conjecture_sweep(in);
            py::list rows;
            for (const auto& row : result.rows) {
                py::dict d;
                d["graph6"] = row.graph6;
                d["n"] = row.n;
                d["chi"] = row.chi;
                d["chi_lin"] = row.chi_lin;
                d["chi_cen"] = row.chi_cen;
                d["chain_ok"] = row.chain_ok == 1;
                d["conjecture_ok"] = row.conjecture_ok == 1;
                d["ratio"] = row.ratio;
                d["error"] = row.error;
                rows.append(d);
            }
            py::dict summary;
            summary["graphs"] = result.summary.graphs;
            summary["errors"] = result.summary.errors;
            summary["chain_violations"] = result.summary.chain_violations;
            summary["conjecture_violations"] = result.summary.conjecture_violations;
            summary["max_ratio"] = result.summary.max_ratio;
            summary["witness_graph6"] = result.summary.witness_graph6;
            return py::make_tuple(summary, rows);
        },
        py::arg("corpus"));
    m.def("to_csv", [](const std::vector<TrialRow>& rows) { return to_csv(rows); });
    m.def("balanced_random_colouring", &balanced_random_colouring);
    m.def("greedy_proper_colouring", &greedy_proper_colouring);
    m.def("derive_stream_seed", &derive_stream_seed);
}
