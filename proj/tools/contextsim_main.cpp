// Command-line front end: checks behavior tables against the Bell bound,
// runs the seeded entity simulators, traces liar-paradox truth cycles and
// inspects the deterministic correlation polytope.

#include "contextsim/report.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using contextsim::Rat;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitValidation = 4;
constexpr int kExitInternal = 5;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw contextsim::ParseError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // Translate the byte offset into line and column.
        std::size_t line = 1, column = 1;
        const std::size_t limit = e.byte > 0 ? std::min(text.size(), e.byte - 1) : 0;
        for (std::size_t i = 0; i < limit; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw contextsim::ParseError(origin + ":" + std::to_string(line) + ":" +
                                     std::to_string(column) + ": " + e.what());
    }
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write to '" + output_path + "'");
    out << text;
}

template <class T>
json bell_check_json(const contextsim::BehaviorTable<T>& table) {
    const auto e = contextsim::correlation_vector(table);
    const auto bell = contextsim::bell_verdict(e);
    return json{
        {"bell", {{"quantity", contextsim::scalar_to_json(bell.value)},
                  {"violated", bell.violated}}},
        {"correlations",
         {{"e13", contextsim::scalar_to_json(e.e13)},
          {"e14", contextsim::scalar_to_json(e.e14)},
          {"e23", contextsim::scalar_to_json(e.e23)},
          {"e24", contextsim::scalar_to_json(e.e24)}}},
        {"kolmogorov", contextsim::verdict_to_json(contextsim::kolmogorov_feasibility(table))},
        {"membership", contextsim::verdict_to_json(contextsim::correlation_membership(e))},
        {"table", contextsim::behavior_table_to_json(table)},
        {"version", contextsim::kToolVersion},
    };
}

std::string scalar_text(const json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string bell_check_text(const json& r) {
    std::ostringstream out;
    out << "E13 = " << scalar_text(r["correlations"]["e13"])
        << "   E14 = " << scalar_text(r["correlations"]["e14"])
        << "   E23 = " << scalar_text(r["correlations"]["e23"])
        << "   E24 = " << scalar_text(r["correlations"]["e24"]) << "\n";
    out << "bell quantity " << scalar_text(r["bell"]["quantity"]) << " -> "
        << (r["bell"]["violated"].get<bool>() ? "violated (> 2)" : "satisfied (<= 2)") << "\n";
    out << "kolmogorov model: " << r["kolmogorov"]["verdict"].get<std::string>() << "\n";
    out << "polytope membership: " << r["membership"]["verdict"].get<std::string>() << "\n";
    return out.str();
}

int cmd_bell_check(const std::string& table_path, const std::string& format,
                   const std::string& output) {
    const json parsed = parse_json_text(read_file(table_path), table_path);
    const contextsim::LoadedTable table = contextsim::behavior_table_from_json(parsed);
    const json report = std::visit([](const auto& t) { return bell_check_json(t); }, table);
    if (format == "text")
        emit(bell_check_text(report), output);
    else if (format == "csv")
        emit(std::visit([](const auto& t) { return contextsim::behavior_table_to_csv(t); },
                        table),
             output);
    else
        emit(contextsim::canonical_dump(report) + "\n", output);
    return kExitOk;
}

int cmd_simulate(const std::string& entity_name, std::uint64_t trials, std::uint64_t seed,
                 const std::string& config_path, unsigned threads, const std::string& format,
                 const std::string& output) {
    const contextsim::EntityKind kind = contextsim::entity_kind_from_string(entity_name);
    contextsim::EntityConfig config;
    if (config_path.empty()) {
        config = kind == contextsim::EntityKind::Vessels
                     ? contextsim::EntityConfig(contextsim::VesselsConfig{})
                     : contextsim::EntityConfig(contextsim::SoccerConfig{});
    } else {
        config = contextsim::config_from_json(
            kind, parse_json_text(read_file(config_path), config_path));
    }
    contextsim::SimulationReport report{
        contextsim::run_entity(kind, config, contextsim::RunSpec{trials, seed}, threads),
        contextsim::kToolVersion};
    if (format == "csv")
        emit(contextsim::report_to_csv(report), output);
    else if (format == "text")
        emit(contextsim::report_to_text(report), output);
    else
        emit(contextsim::canonical_dump(contextsim::report_to_json(report)) + "\n", output);
    return kExitOk;
}

std::pair<int, bool> parse_start(const std::string& start) {
    const auto colon = start.find(':');
    if (colon == std::string::npos)
        throw UsageError("--start must look like 1:true or 2:false");
    const std::string sentence = start.substr(0, colon);
    const std::string value = start.substr(colon + 1);
    if (sentence != "1" && sentence != "2")
        throw UsageError("--start sentence must be 1 or 2");
    if (value != "true" && value != "false")
        throw UsageError("--start value must be true or false");
    return {sentence == "1" ? 1 : 2, value == "true"};
}

int cmd_liar(const std::string& variant_name, const std::string& start, int steps, double tau,
             bool dump_state, const std::string& format, const std::string& output) {
    const auto variant = contextsim::liar_variant_from_string(variant_name);
    const auto [sentence, value] = parse_start(start);
    const contextsim::LiarEntity entity = contextsim::build_entity(variant, tau);
    contextsim::TruthCycleTrace trace;
    try {
        trace = contextsim::truth_cycle_trace(entity, sentence, value, steps);
    } catch (const contextsim::CollapseError&) {
        throw contextsim::ValidationError(
            "impossible outcome: measuring sentence " + std::to_string(sentence) + " " +
            (value ? "true" : "false") + " has probability 0 in variant " +
            contextsim::to_string(variant));
    }

    if (format == "text") {
        std::ostringstream out;
        for (std::size_t i = 0; i < trace.assignments.size(); ++i) {
            const auto& a = trace.assignments[i];
            out << "step " << i << ": sentence1=" << contextsim::to_string(a.sentence1)
                << " sentence2=" << contextsim::to_string(a.sentence2) << "\n";
        }
        emit(out.str(), output);
        return kExitOk;
    }

    json assignments = json::array();
    for (const auto& a : trace.assignments)
        assignments.push_back(json{{"sentence1", contextsim::to_string(a.sentence1)},
                                   {"sentence2", contextsim::to_string(a.sentence2)}});
    json result{{"assignments", assignments},
                {"start", start},
                {"steps", steps},
                {"step_time", tau},
                {"variant", contextsim::to_string(variant)},
                {"version", contextsim::kToolVersion}};
    if (dump_state) {
        json states = json::array();
        for (const auto& s : trace.states) states.push_back(contextsim::state_to_json(s));
        result["states"] = states;
    }
    emit(contextsim::canonical_dump(result) + "\n", output);
    return kExitOk;
}

contextsim::CorrelationVector<Rat> parse_test_vector(const std::string& csv) {
    std::array<Rat, 4> values;
    std::stringstream ss(csv);
    std::string token;
    int k = 0;
    while (std::getline(ss, token, ',')) {
        if (k >= 4) throw UsageError("--test expects exactly 4 comma-separated values");
        const auto r = contextsim::try_parse_rational(token);
        if (!r) throw UsageError("--test component '" + token + "' is not a number");
        values[k++] = *r;
    }
    if (k != 4) throw UsageError("--test expects exactly 4 comma-separated values");
    return contextsim::CorrelationVector<Rat>{values[0], values[1], values[2], values[3]};
}

int cmd_polytope(const std::string& test_csv, const std::string& format,
                 const std::string& output) {
    if (test_csv.empty()) {
        const auto vertices = contextsim::deterministic_vertices();
        if (format == "text") {
            std::ostringstream out;
            for (const auto& v : vertices)
                out << contextsim::vertex_label(v) << "  (" << v[0] << ", " << v[1] << ", "
                    << v[2] << ", " << v[3] << ")\n";
            emit(out.str(), output);
        } else {
            json verts = json::array();
            for (const auto& v : vertices) verts.push_back(json::array({v[0], v[1], v[2], v[3]}));
            emit(contextsim::canonical_dump(json{{"vertices", verts}}) + "\n", output);
        }
        return kExitOk;
    }

    const auto e = parse_test_vector(test_csv);
    const auto verdict = contextsim::correlation_membership(e);
    const json result{{"test",
                       {{"e13", contextsim::scalar_to_json(e.e13)},
                        {"e14", contextsim::scalar_to_json(e.e14)},
                        {"e23", contextsim::scalar_to_json(e.e23)},
                        {"e24", contextsim::scalar_to_json(e.e24)}}},
                      {"membership", contextsim::verdict_to_json(verdict)}};
    if (format == "text") {
        std::ostringstream out;
        if (verdict.classical()) {
            out << "classical: convex weights over deterministic vertices\n";
            for (const auto& [label, w] : verdict.certificate->weights)
                out << "  " << label << "  " << contextsim::format_rational(w) << "\n";
        } else {
            const auto& facet = std::get<contextsim::FacetWitness<Rat>>(*verdict.witness);
            out << "nonclassical: facet " << contextsim::vertex_label(facet.signs)
                << " reaches " << contextsim::format_rational(facet.value) << " > 2\n";
        }
        emit(out.str(), output);
    } else {
        emit(contextsim::canonical_dump(result) + "\n", output);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"contextuality toolkit: Bell quantities, polytope membership, "
                 "entity simulators and liar-paradox dynamics"};
    app.require_subcommand(1);
    app.set_version_flag("--version", contextsim::kToolVersion);

    std::string format = "json";
    std::string output;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--output", output, "write output to this file instead of stdout");

    auto* bell = app.add_subcommand("bell-check", "evaluate a behavior table file");
    bell->fallthrough();
    std::string table_path;
    bell->add_option("table", table_path, "behavior table JSON file")->required();

    auto* simulate = app.add_subcommand("simulate", "run a seeded entity simulation");
    simulate->fallthrough();
    std::string entity_name;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;
    std::string config_path;
    unsigned threads = 1;
    simulate->add_option("entity", entity_name, "vessels or soccer")
        ->required()
        ->check(CLI::IsMember({"vessels", "soccer"}));
    simulate->add_option("--trials", trials, "samples per coincidence pair")
        ->capture_default_str();
    simulate->add_option("--seed", seed, "64-bit unsigned seed")->capture_default_str();
    simulate->add_option("--config", config_path, "entity config JSON file");
    simulate->add_option("--threads", threads, "worker threads (result is thread-count independent)")
        ->capture_default_str();

    auto* liar = app.add_subcommand("liar", "trace a liar-paradox truth cycle");
    liar->fallthrough();
    std::string variant = "A";
    std::string start = "1:true";
    int steps = 4;
    double tau = 1.0;
    bool dump_state = false;
    liar->add_option("--variant", variant, "A, B or C")
        ->check(CLI::IsMember({"A", "B", "C", "a", "b", "c"}))
        ->capture_default_str();
    liar->add_option("--start", start, "initial measurement, e.g. 1:true")
        ->capture_default_str();
    liar->add_option("--steps", steps, "number of reasoning steps")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    liar->add_option("--tau", tau, "reasoning-step duration")->capture_default_str();
    liar->add_flag("--dump-state", dump_state, "include intermediate state vectors");

    auto* polytope = app.add_subcommand("polytope", "inspect the deterministic polytope");
    polytope->fallthrough();
    std::string test_csv;
    polytope->add_option("--test", test_csv, "correlation vector E13,E14,E23,E24 to test");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (bell->parsed()) return cmd_bell_check(table_path, format, output);
        if (simulate->parsed())
            return cmd_simulate(entity_name, trials, seed, config_path, threads, format, output);
        if (liar->parsed())
            return cmd_liar(variant, start, steps, tau, dump_state, format, output);
        return cmd_polytope(test_csv, format, output);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const contextsim::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const contextsim::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const contextsim::DimensionError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
