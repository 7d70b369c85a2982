#include "contextsim/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace contextsim {

namespace {

using nlohmann::json;

void dump_value(const json& j, std::string& out);

std::string format_double(double v) {
    if (std::isnan(v) || std::isinf(v))
        throw ValidationError("non-finite number cannot be serialized");
    if (v == 0.0) v = 0.0; // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void dump_object(const json& j, std::string& out) {
    out.push_back('{');
    bool first = true;
    for (auto it = j.cbegin(); it != j.cend(); ++it) { // std::map order: sorted keys
        if (!first) out.push_back(',');
        first = false;
        out += json(it.key()).dump();
        out.push_back(':');
        dump_value(it.value(), out);
    }
    out.push_back('}');
}

void dump_value(const json& j, std::string& out) {
    switch (j.type()) {
    case json::value_t::object: dump_object(j, out); break;
    case json::value_t::array: {
        out.push_back('[');
        bool first = true;
        for (const auto& v : j) {
            if (!first) out.push_back(',');
            first = false;
            dump_value(v, out);
        }
        out.push_back(']');
        break;
    }
    case json::value_t::number_float: out += format_double(j.get<double>()); break;
    default: out += j.dump(); break; // strings, integers, bool, null
    }
}

json signs_to_json(const std::array<int, 4>& signs) {
    return json::array({signs[0], signs[1], signs[2], signs[3]});
}

std::array<int, 4> signs_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw ValidationError("signs must be a 4-array");
    std::array<int, 4> s{};
    for (int k = 0; k < 4; ++k) {
        s[k] = j[k].get<int>();
        if (s[k] != 1 && s[k] != -1) throw ValidationError("signs must be +1 or -1");
    }
    return s;
}

bool is_exact_entry(const json& v) {
    if (v.is_number_integer() || v.is_number_unsigned()) return true;
    if (v.is_string()) return try_parse_rational(v.get<std::string>()).has_value();
    return false;
}

template <class T>
T entry_value(const json& v, const std::string& field);

template <>
Rat entry_value<Rat>(const json& v, const std::string& field) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long long>());
    if (v.is_number_unsigned()) return Rat(v.get<unsigned long long>());
    throw ValidationError("field " + field + " is not an exact rational");
}

template <>
double entry_value<double>(const json& v, const std::string& field) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return to_double(parse_rational(v.get<std::string>()));
    throw ValidationError("field " + field + " is not a number");
}

template <class T>
BehaviorTable<T> table_from_json_impl(const json& pairs) {
    BehaviorTable<T> table;
    for (const auto& [label, dist] : pairs.items()) {
        const Pair pair = pair_from_label(label);
        if (!dist.is_object()) throw ValidationError("pair " + label + " is not an object");
        CoincidenceDistribution<T> d;
        for (const char* key : {"uu", "ud", "du", "dd"}) {
            if (!dist.contains(key))
                throw ValidationError("pair " + label + " is missing entry " + key);
        }
        for (const auto& [key, value] : dist.items()) {
            const std::string field = "pair " + label + "." + key;
            if (key == "uu") d.uu = entry_value<T>(value, field);
            else if (key == "ud") d.ud = entry_value<T>(value, field);
            else if (key == "du") d.du = entry_value<T>(value, field);
            else if (key == "dd") d.dd = entry_value<T>(value, field);
            else throw ValidationError("unexpected entry " + field);
        }
        table.set(pair, d);
    }
    table.validate();
    return table;
}

template <class T>
json distribution_to_json(const CoincidenceDistribution<T>& d) {
    return json{{"uu", scalar_to_json(d.uu)},
                {"ud", scalar_to_json(d.ud)},
                {"du", scalar_to_json(d.du)},
                {"dd", scalar_to_json(d.dd)}};
}

json counts_to_json(const PairCounts& c) {
    return json{{"uu", c.uu}, {"ud", c.ud}, {"du", c.du}, {"dd", c.dd}};
}

PairCounts counts_from_json(const json& j) {
    return PairCounts{j.at("uu").get<std::uint64_t>(), j.at("ud").get<std::uint64_t>(),
                      j.at("du").get<std::uint64_t>(), j.at("dd").get<std::uint64_t>()};
}

json split_to_json(const SplitDistribution& split) {
    return std::visit(
        [](const auto& s) -> json {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, UniformSplit>) {
                json j{{"kind", "uniform"}};
                if (s.lo) j["lo"] = *s.lo;
                if (s.hi) j["hi"] = *s.hi;
                return j;
            } else if constexpr (std::is_same_v<S, FixedSplit>) {
                return json{{"kind", "fixed"}, {"value", s.value}};
            } else {
                return json{{"kind", "two_point"}, {"a", s.a}, {"b", s.b}, {"prob_a", s.prob_a}};
            }
        },
        split);
}

SplitDistribution split_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "uniform") {
        UniformSplit s;
        if (j.contains("lo")) s.lo = j.at("lo").get<double>();
        if (j.contains("hi")) s.hi = j.at("hi").get<double>();
        return s;
    }
    if (kind == "fixed") return FixedSplit{j.at("value").get<double>()};
    if (kind == "two_point")
        return TwoPointSplit{j.at("a").get<double>(), j.at("b").get<double>(),
                             j.value("prob_a", 0.5)};
    throw ValidationError("unknown split_distribution kind '" + kind + "'");
}

} // namespace

std::string canonical_dump(const json& j) {
    std::string out;
    dump_value(j, out);
    return out;
}

nlohmann::json scalar_to_json(const Rat& value) { return format_rational(value); }
nlohmann::json scalar_to_json(double value) { return value; }

template <>
Rat scalar_from_json<Rat>(const json& j) {
    return entry_value<Rat>(j, "value");
}
template <>
double scalar_from_json<double>(const json& j) {
    return entry_value<double>(j, "value");
}

LoadedTable behavior_table_from_json(const json& j) {
    if (!j.is_object() || !j.contains("pairs") || !j.at("pairs").is_object())
        throw ValidationError("behavior table must be an object with a 'pairs' object");
    const json& pairs = j.at("pairs");
    bool exact = true;
    for (const auto& [label, dist] : pairs.items()) {
        (void)label;
        if (!dist.is_object()) {
            exact = false;
            break;
        }
        for (const auto& [key, value] : dist.items()) {
            (void)key;
            if (!is_exact_entry(value)) exact = false;
        }
    }
    if (exact) return table_from_json_impl<Rat>(pairs);
    return table_from_json_impl<double>(pairs);
}

template <class T>
json behavior_table_to_json(const BehaviorTable<T>& table) {
    json pairs = json::object();
    for (Pair p : kAllPairs) pairs[pair_label(p)] = distribution_to_json(table.at(p));
    return json{{"pairs", pairs}};
}

template <class T>
std::string behavior_table_to_csv(const BehaviorTable<T>& table) {
    std::ostringstream out;
    out << "pair,p_uu,p_ud,p_du,p_dd,E\n";
    for (Pair p : kAllPairs) {
        const auto& d = table.at(p);
        const auto cell = [](const T& v) {
            const json j = scalar_to_json(v);
            return j.is_string() ? j.get<std::string>() : format_double(j.get<double>());
        };
        out << pair_label(p) << ',' << cell(d.uu) << ',' << cell(d.ud) << ',' << cell(d.du)
            << ',' << cell(d.dd) << ',' << cell(expectation(d)) << '\n';
    }
    return out.str();
}

template <class T>
json verdict_to_json(const ClassicalityVerdict<T>& verdict) {
    if (verdict.classical()) {
        json weights = json::object();
        for (const auto& [label, weight] : verdict.certificate->weights)
            weights[label] = scalar_to_json(weight);
        return json{{"verdict", "classical"}, {"weights", weights}};
    }
    json witness;
    if (const auto* facet = std::get_if<FacetWitness<T>>(&*verdict.witness)) {
        witness = json{{"kind", "chsh_facet"},
                       {"signs", signs_to_json(facet->signs)},
                       {"value", scalar_to_json(facet->value)},
                       {"bound", 2}};
    } else {
        const auto& m = std::get<MarginalWitness<T>>(*verdict.witness);
        witness = json{{"kind", "marginal_inconsistency"},
                       {"observable", m.observable},
                       {"pairs", json::array({pair_label(m.pair_a), pair_label(m.pair_b)})},
                       {"values", json::array(
                                      {scalar_to_json(m.marginal_a), scalar_to_json(m.marginal_b)})}};
    }
    return json{{"verdict", "nonclassical"}, {"witness", witness}};
}

template <class T>
ClassicalityVerdict<T> verdict_from_json(const json& j) {
    ClassicalityVerdict<T> verdict;
    const std::string kind = j.at("verdict").get<std::string>();
    if (kind == "classical") {
        ClassicalCertificate<T> cert;
        for (const auto& [label, weight] : j.at("weights").items())
            cert.weights[label] = scalar_from_json<T>(weight);
        verdict.certificate = std::move(cert);
        return verdict;
    }
    if (kind != "nonclassical") throw ValidationError("unknown verdict '" + kind + "'");
    const json& witness = j.at("witness");
    const std::string wkind = witness.at("kind").get<std::string>();
    if (wkind == "chsh_facet") {
        verdict.witness = FacetWitness<T>{signs_from_json(witness.at("signs")),
                                          scalar_from_json<T>(witness.at("value"))};
    } else if (wkind == "marginal_inconsistency") {
        verdict.witness = MarginalWitness<T>{
            witness.at("observable").get<int>(),
            pair_from_label(witness.at("pairs").at(0).get<std::string>()),
            pair_from_label(witness.at("pairs").at(1).get<std::string>()),
            scalar_from_json<T>(witness.at("values").at(0)),
            scalar_from_json<T>(witness.at("values").at(1))};
    } else {
        throw ValidationError("unknown witness kind '" + wkind + "'");
    }
    return verdict;
}

json config_to_json(const EntityConfig& config) {
    return std::visit(
        [](const auto& cfg) -> json {
            using C = std::decay_t<decltype(cfg)>;
            if constexpr (std::is_same_v<C, VesselsConfig>) {
                return json{{"total_volume", cfg.total_volume},
                            {"threshold", cfg.threshold},
                            {"split_distribution", split_to_json(cfg.split_distribution)},
                            {"transparent", cfg.transparent}};
            } else {
                return json{{"bribe_A",
                             {{"amount", cfg.bribe_a.amount},
                              {"player_wealth", cfg.bribe_a.player_wealth}}},
                            {"bribe_B",
                             {{"amount", cfg.bribe_b.amount},
                              {"player_wealth", cfg.bribe_b.player_wealth}}},
                            {"referee_bad_character", cfg.referee_bad_character}};
            }
        },
        config);
}

EntityConfig config_from_json(EntityKind kind, const json& j) {
    if (!j.is_object()) throw ValidationError("config must be a JSON object");
    if (kind == EntityKind::Vessels) {
        VesselsConfig cfg;
        for (const auto& [key, value] : j.items()) {
            if (key == "total_volume") cfg.total_volume = value.get<double>();
            else if (key == "threshold") cfg.threshold = value.get<double>();
            else if (key == "split_distribution") cfg.split_distribution = split_from_json(value);
            else if (key == "transparent") cfg.transparent = value.get<bool>();
            else throw ValidationError("unknown vessels config field '" + key + "'");
        }
        cfg.validate();
        return cfg;
    }
    SoccerConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "bribe_A" || key == "bribe_B") {
            Bribe b{value.at("amount").get<double>(), value.at("player_wealth").get<double>()};
            (key == "bribe_A" ? cfg.bribe_a : cfg.bribe_b) = b;
        } else if (key == "referee_bad_character") {
            cfg.referee_bad_character = value.get<bool>();
        } else {
            throw ValidationError("unknown soccer config field '" + key + "'");
        }
    }
    cfg.validate();
    return cfg;
}

json report_to_json(const SimulationReport& report) {
    const RunResult& r = report.result;
    json pairs = json::object();
    for (Pair p : kAllPairs) {
        const int i = static_cast<int>(p);
        pairs[pair_label(p)] =
            json{{"counts", counts_to_json(r.empirical.counts[i])},
                 {"distribution", distribution_to_json(r.empirical.table.at(p))},
                 {"expectation", scalar_to_json(expectation(r.empirical.table.at(p)))}};
    }
    return json{
        {"bell",
         {{"quantity", scalar_to_json(r.bell_value)}, {"violated", r.bell.violated}}},
        {"classicality", verdict_to_json(r.classicality)},
        {"config", config_to_json(r.config)},
        {"correlations",
         {{"e13", scalar_to_json(r.correlations.e13)},
          {"e14", scalar_to_json(r.correlations.e14)},
          {"e23", scalar_to_json(r.correlations.e23)},
          {"e24", scalar_to_json(r.correlations.e24)}}},
        {"entity", to_string(r.entity)},
        {"pairs", pairs},
        {"seed", r.spec.seed},
        {"trials", r.spec.trials},
        {"version", report.version},
    };
}

SimulationReport report_from_json(const json& j) {
    SimulationReport report;
    RunResult& r = report.result;
    r.entity = entity_kind_from_string(j.at("entity").get<std::string>());
    r.config = config_from_json(r.entity, j.at("config"));
    r.spec = RunSpec{j.at("trials").get<std::uint64_t>(), j.at("seed").get<std::uint64_t>()};
    std::array<PairCounts, 4> counts{};
    for (Pair p : kAllPairs)
        counts[static_cast<int>(p)] = counts_from_json(j.at("pairs").at(pair_label(p)).at("counts"));
    r.empirical = empirical_table(counts);
    r.correlations = CorrelationVector<Rat>{
        scalar_from_json<Rat>(j.at("correlations").at("e13")),
        scalar_from_json<Rat>(j.at("correlations").at("e14")),
        scalar_from_json<Rat>(j.at("correlations").at("e23")),
        scalar_from_json<Rat>(j.at("correlations").at("e24"))};
    r.bell.value = scalar_from_json<Rat>(j.at("bell").at("quantity"));
    r.bell.violated = j.at("bell").at("violated").get<bool>();
    r.bell_value = r.bell.value;
    r.classicality = verdict_from_json<Rat>(j.at("classicality"));
    report.version = j.at("version").get<std::string>();
    return report;
}

std::string report_to_csv(const SimulationReport& report) {
    return behavior_table_to_csv(report.result.empirical.table);
}

std::string report_to_text(const SimulationReport& report) {
    const RunResult& r = report.result;
    std::ostringstream out;
    out << "entity: " << to_string(r.entity) << "   trials: " << r.spec.trials
        << "   seed: " << r.spec.seed << "\n\n";
    out << "pair     uu      ud      du      dd   E\n";
    for (Pair p : kAllPairs) {
        const PairCounts& c = r.empirical.counts[static_cast<int>(p)];
        char line[128];
        std::snprintf(line, sizeof(line), "%-5s %6llu  %6llu  %6llu  %6llu   %s\n",
                      pair_label(p).c_str(), static_cast<unsigned long long>(c.uu),
                      static_cast<unsigned long long>(c.ud),
                      static_cast<unsigned long long>(c.du),
                      static_cast<unsigned long long>(c.dd),
                      format_rational(expectation(r.empirical.table.at(p))).c_str());
        out << line;
    }
    out << "\nbell quantity: " << format_rational(r.bell_value) << " ("
        << (r.bell.violated ? "violated, > 2" : "satisfied, <= 2") << ")\n";
    if (r.classicality.classical()) {
        out << "classicality: classical (convex weights over deterministic vertices)\n";
        for (const auto& [label, w] : r.classicality.certificate->weights)
            out << "  " << label << "  " << format_rational(w) << "\n";
    } else if (const auto* facet =
                   std::get_if<FacetWitness<Rat>>(&*r.classicality.witness)) {
        out << "classicality: nonclassical, facet " << vertex_label(facet->signs)
            << " reaches " << format_rational(facet->value) << " > 2\n";
    } else {
        out << "classicality: nonclassical (marginal inconsistency)\n";
    }
    return out.str();
}

nlohmann::json state_to_json(const StateVector& psi) {
    json amps = json::array();
    for (Eigen::Index i = 0; i < psi.dim(); ++i)
        amps.push_back(json::array({psi.amplitudes(i).real(), psi.amplitudes(i).imag()}));
    return amps;
}

nlohmann::json matrix_to_json(const Eigen::MatrixXcd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k)
            row.push_back(json::array({m(i, k).real(), m(i, k).imag()}));
        rows.push_back(row);
    }
    return rows;
}

template json behavior_table_to_json(const BehaviorTable<Rat>&);
template json behavior_table_to_json(const BehaviorTable<double>&);
template std::string behavior_table_to_csv(const BehaviorTable<Rat>&);
template std::string behavior_table_to_csv(const BehaviorTable<double>&);
template json verdict_to_json(const ClassicalityVerdict<Rat>&);
template json verdict_to_json(const ClassicalityVerdict<double>&);
template ClassicalityVerdict<Rat> verdict_from_json<Rat>(const json&);
template ClassicalityVerdict<double> verdict_from_json<double>(const json&);

} // namespace contextsim
