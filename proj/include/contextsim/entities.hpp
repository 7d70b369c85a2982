#pragma once

#include "contextsim/classicality.hpp"
#include "contextsim/rng.hpp"
#include "contextsim/scenario.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace contextsim {

enum class EntityKind { Vessels, Soccer };

EntityKind entity_kind_from_string(const std::string& s);
std::string to_string(EntityKind kind);

/// How the water splits between the two sides when both siphons compete.
/// Bounds are liters of the left-collected amount; every choice leaves
/// the coincidence anti-correlated, only the up/down ratio moves.
struct UniformSplit {
    std::optional<double> lo; // defaults to 0
    std::optional<double> hi; // defaults to total_volume
};
struct FixedSplit {
    double value = 10.0;
};
struct TwoPointSplit {
    double a = 6.0;
    double b = 14.0;
    double prob_a = 0.5;
};
using SplitDistribution = std::variant<UniformSplit, FixedSplit, TwoPointSplit>;

struct VesselsConfig {
    double total_volume = 20.0; // liters
    double threshold = 10.0;    // liters
    SplitDistribution split_distribution = UniformSplit{};
    bool transparent = true;

    void validate() const;
};

/// A bribe offer: amount handed over and the receiving player's wealth,
/// both in currency units.
struct Bribe {
    double amount = 0.0;
    double player_wealth = 0.0;
};

struct SoccerConfig {
    Bribe bribe_a{1e9, 0.0};  // a fortune to a poor player
    Bribe bribe_b{1e5, 1e7};  // pocket change to a rich one
    bool referee_bad_character = true;

    void validate() const;

    /// Monotone effectiveness score: amount / (wealth + 1).
    static double effectiveness(const Bribe& bribe) {
        return bribe.amount / (bribe.player_wealth + 1.0);
    }
};

struct RunSpec {
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;

    void validate() const {
        if (trials < 1) throw ValidationError("trials must be >= 1");
    }
};

struct OutcomePair {
    Pair pair;
    Outcome left;
    Outcome right;
};

/// Single coincidence sample of the connected-vessels entity; randomness
/// comes only from the (seed, entity, pair, trial) substream.
OutcomePair vessels_sample(const VesselsConfig& config, Pair pair, std::uint64_t trial_index,
                           std::uint64_t seed);

OutcomePair soccer_sample(const SoccerConfig& config, Pair pair, std::uint64_t trial_index,
                          std::uint64_t seed);

using EntityConfig = std::variant<VesselsConfig, SoccerConfig>;

/// Outcome statistics of a seeded run: counts and exact empirical
/// distributions per pair plus the derived correlation quantities.
struct RunResult {
    EntityKind entity;
    EntityConfig config;
    RunSpec spec;
    EmpiricalTable empirical;
    CorrelationVector<Rat> correlations;
    Rat bell_value;
    BellVerdict<Rat> bell;
    ClassicalityVerdict<Rat> classicality; // correlation-polytope membership
};

/// Runs `spec.trials` samples of every pair and aggregates. `threads`
/// splits the trial range; results are identical for any thread count.
RunResult run_entity(EntityKind entity, const EntityConfig& config, const RunSpec& spec,
                     unsigned threads = 1);

} // namespace contextsim
