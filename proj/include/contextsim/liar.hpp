#pragma once

#include "contextsim/quantum.hpp"

#include <array>
#include <string>
#include <vector>

namespace contextsim {

/// The three coupled-sentence entities: A is the double liar (each
/// sentence denies/affirms the other, four-step dynamics in C4 x C4),
/// B couples both sentences affirmatively (triplet state), C denies in
/// both directions (singlet state).
enum class LiarVariant { A, B, C };

LiarVariant liar_variant_from_string(const std::string& s);
std::string to_string(LiarVariant v);

enum class TruthValue { True, False, Latent };

std::string to_string(TruthValue v);

/// Truth values read off a state through the measurement projectors.
struct TruthAssignment {
    TruthValue sentence1 = TruthValue::Latent;
    TruthValue sentence2 = TruthValue::Latent;

    bool operator==(const TruthAssignment&) const = default;
};

/// Immutable bundle of one liar variant: state space, initial state,
/// projector family and the reasoning-step generator.
struct LiarEntity {
    LiarVariant variant;
    Eigen::Index space_dim; // 4 for B/C, 16 for A
    StateVector psi0;
    // projectors[sentence-1][0]: makes the sentence true; [1]: false.
    std::array<std::array<ProjectorOperator, 2>, 2> projectors;
    HermitianOperator hamiltonian;
    double step_time;

    const ProjectorOperator& projector(int sentence, bool value) const {
        if (sentence != 1 && sentence != 2)
            throw DimensionError("sentence index must be 1 or 2");
        return projectors[sentence - 1][value ? 0 : 1];
    }
};

/// Builds the entity for a variant. step_time is the duration of one
/// reasoning step in reasoning-time units.
LiarEntity build_entity(LiarVariant variant, double step_time = 1.0);

/// The four successive reasoning states of the double liar, in cycle
/// order (sentence1 true, sentence2 false, sentence1 false, sentence2
/// true). Pairwise orthogonal; their equal-weight superposition is psi0.
std::array<StateVector, 4> reasoning_cycle_states();

struct MeasurementResult {
    double probability;
    StateVector post;
};

/// Born probability and collapsed state for making `sentence` take
/// `value`, measured from `from`.
MeasurementResult measure(const LiarEntity& entity, int sentence, bool value,
                          const StateVector& from);

/// Measurement from the entity's initial state.
MeasurementResult measure(const LiarEntity& entity, int sentence, bool value);

/// One reasoning step: exp(-iH * step_time) applied to the state.
StateVector reasoning_step(const LiarEntity& entity, const StateVector& state);

/// Reads the truth values a state assigns: a sentence is True (False)
/// iff the corresponding projector fires with probability 1 within
/// 1e-10, otherwise Latent.
TruthAssignment assignment_of(const LiarEntity& entity, const StateVector& state);

/// Collapse on the initial measurement, then n_steps reasoning steps.
/// Returns n_steps + 1 assignments.
std::vector<TruthAssignment> truth_cycle(const LiarEntity& entity, int sentence, bool value,
                                         int n_steps);

struct TruthCycleTrace {
    std::vector<TruthAssignment> assignments;
    std::vector<StateVector> states;
};

/// truth_cycle plus the intermediate states (for state dumps).
TruthCycleTrace truth_cycle_trace(const LiarEntity& entity, int sentence, bool value,
                                  int n_steps);

} // namespace contextsim
