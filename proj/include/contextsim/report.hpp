#pragma once

#include "contextsim/entities.hpp"
#include "contextsim/liar.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <variant>

namespace contextsim {

inline constexpr const char* kToolVersion = "0.1.0";

/// Canonical JSON text: keys sorted, no insignificant whitespace, floats
/// rendered with 17 significant digits, rationals as "p/q" strings
/// (encoded upstream). Identical values give identical bytes.
std::string canonical_dump(const nlohmann::json& j);

/// Scalar encoding: exact lane as "p/q" strings, float lane as numbers.
nlohmann::json scalar_to_json(const Rat& value);
nlohmann::json scalar_to_json(double value);
template <class T>
T scalar_from_json(const nlohmann::json& j);

// --- behavior tables -----------------------------------------------------

/// A table parsed from JSON lands on the exact lane iff every probability
/// entry is a "p/q" string or an integral number.
using LoadedTable = std::variant<BehaviorTable<Rat>, BehaviorTable<double>>;

LoadedTable behavior_table_from_json(const nlohmann::json& j);

template <class T>
nlohmann::json behavior_table_to_json(const BehaviorTable<T>& table);

/// One row per pair: pair,p_uu,p_ud,p_du,p_dd,E.
template <class T>
std::string behavior_table_to_csv(const BehaviorTable<T>& table);

// --- classicality verdicts ------------------------------------------------

template <class T>
nlohmann::json verdict_to_json(const ClassicalityVerdict<T>& verdict);
template <class T>
ClassicalityVerdict<T> verdict_from_json(const nlohmann::json& j);

// --- entity configs --------------------------------------------------------

nlohmann::json config_to_json(const EntityConfig& config);
EntityConfig config_from_json(EntityKind kind, const nlohmann::json& j);

// --- simulation reports -----------------------------------------------------

/// Seeded-run report: everything needed to audit or replay the run.
struct SimulationReport {
    RunResult result;
    std::string version = kToolVersion;
};

nlohmann::json report_to_json(const SimulationReport& report);
SimulationReport report_from_json(const nlohmann::json& j);
std::string report_to_csv(const SimulationReport& report);
std::string report_to_text(const SimulationReport& report);

// --- quantum state dumps ----------------------------------------------------

/// States as arrays of [re, im]; matrices row-major.
nlohmann::json state_to_json(const StateVector& psi);
nlohmann::json matrix_to_json(const Eigen::MatrixXcd& m);

} // namespace contextsim
