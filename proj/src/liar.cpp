#include "contextsim/liar.hpp"

#include <cmath>
#include <numbers>

namespace contextsim {

namespace {

constexpr double kAssignmentTol = 1e-10;

Eigen::MatrixXcd qubit_diag(double first, double second) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 0) = first;
    m(1, 1) = second;
    return m;
}

// diag with a single 1 at `slot` (0-based) in dimension 4.
Eigen::MatrixXcd slot_diag4(Eigen::Index slot) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    m(slot, slot) = 1.0;
    return m;
}

std::array<std::array<ProjectorOperator, 2>, 2> coupled_qubit_projectors() {
    const Eigen::MatrixXcd id2 = Eigen::MatrixXcd::Identity(2, 2);
    return {{
        {ProjectorOperator(tensor_operator(qubit_diag(1, 0), id2)),
         ProjectorOperator(tensor_operator(qubit_diag(0, 1), id2))},
        {ProjectorOperator(tensor_operator(id2, qubit_diag(1, 0))),
         ProjectorOperator(tensor_operator(id2, qubit_diag(0, 1)))},
    }};
}

std::array<std::array<ProjectorOperator, 2>, 2> double_liar_projectors() {
    const Eigen::MatrixXcd id4 = Eigen::MatrixXcd::Identity(4, 4);
    // Basis slots 2 and 3 carry the definite truth values; slots 0 and 1
    // stay latent.
    return {{
        {ProjectorOperator(tensor_operator(slot_diag4(2), id4)),
         ProjectorOperator(tensor_operator(slot_diag4(3), id4))},
        {ProjectorOperator(tensor_operator(id4, slot_diag4(2))),
         ProjectorOperator(tensor_operator(id4, slot_diag4(3)))},
    }};
}

// Generator of the 4-cycle on the reasoning states: eigenphase theta_m on
// the m-th discrete-Fourier combination of the cycle states, chosen in
// (-pi, pi] so that exp(-iH*step_time) advances the cycle by one step,
// zero on the superposition psi0 (m = 0) and on the orthogonal
// complement.
HermitianOperator double_liar_hamiltonian(const std::array<StateVector, 4>& cycle,
                                          double step_time) {
    using std::numbers::pi;
    const std::array<double, 4> theta = {0.0, pi / 2.0, pi, -pi / 2.0};
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(16, 16);
    for (int m = 1; m < 4; ++m) {
        Eigen::VectorXcd mode = Eigen::VectorXcd::Zero(16);
        for (int k = 0; k < 4; ++k) {
            const double angle = 2.0 * pi * m * k / 4.0;
            mode += 0.5 * Complex(std::cos(angle), std::sin(angle)) * cycle[k].amplitudes;
        }
        h += (theta[m] / step_time) * (mode * mode.adjoint());
    }
    // Kill rounding asymmetry so the hermiticity check is exact enough.
    h = Eigen::MatrixXcd((h + h.adjoint()) / 2.0);
    return HermitianOperator(std::move(h));
}

// Eigenphase pi on the swap-antisymmetric subspace: exp(-iH*step_time)
// exchanges up and down on both qubits.
HermitianOperator alternation_hamiltonian(double step_time) {
    Eigen::MatrixXcd flip = Eigen::MatrixXcd::Zero(2, 2);
    flip(0, 1) = 1.0;
    flip(1, 0) = 1.0;
    const Eigen::MatrixXcd both = tensor_operator(flip, flip);
    const Eigen::MatrixXcd id4 = Eigen::MatrixXcd::Identity(4, 4);
    Eigen::MatrixXcd h = (std::numbers::pi / step_time) * 0.5 * (id4 - both);
    h = Eigen::MatrixXcd((h + h.adjoint()) / 2.0);
    return HermitianOperator(std::move(h));
}

StateVector qubit_up() { return StateVector::basis(2, 0); }
StateVector qubit_down() { return StateVector::basis(2, 1); }

} // namespace

LiarVariant liar_variant_from_string(const std::string& s) {
    if (s == "A" || s == "a") return LiarVariant::A;
    if (s == "B" || s == "b") return LiarVariant::B;
    if (s == "C" || s == "c") return LiarVariant::C;
    throw DimensionError("unknown liar variant '" + s + "' (expected A, B or C)");
}

std::string to_string(LiarVariant v) {
    switch (v) {
    case LiarVariant::A: return "A";
    case LiarVariant::B: return "B";
    default: return "C";
    }
}

std::string to_string(TruthValue v) {
    switch (v) {
    case TruthValue::True: return "true";
    case TruthValue::False: return "false";
    default: return "latent";
    }
}

std::array<StateVector, 4> reasoning_cycle_states() {
    const auto e = [](Eigen::Index i) { return StateVector::basis(4, i); };
    return {
        tensor_state(e(2), e(1)), // sentence 1 true
        tensor_state(e(1), e(3)), // sentence 2 false
        tensor_state(e(3), e(0)), // sentence 1 false
        tensor_state(e(0), e(2)), // sentence 2 true
    };
}

LiarEntity build_entity(LiarVariant variant, double step_time) {
    if (!(step_time > 0.0)) throw DimensionError("step_time must be positive");

    if (variant == LiarVariant::A) {
        const auto cycle = reasoning_cycle_states();
        Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(16);
        for (const StateVector& phi : cycle) psi0 += 0.5 * phi.amplitudes;
        return LiarEntity{variant, 16, StateVector(std::move(psi0)),
                          double_liar_projectors(),
                          double_liar_hamiltonian(cycle, step_time), step_time};
    }

    const StateVector up = qubit_up();
    const StateVector down = qubit_down();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    if (variant == LiarVariant::B) {
        Eigen::VectorXcd psi0 = inv_sqrt2 * (tensor_state(up, up).amplitudes +
                                             tensor_state(down, down).amplitudes);
        return LiarEntity{variant, 4, StateVector(std::move(psi0)), coupled_qubit_projectors(),
                          HermitianOperator::zero(4), step_time};
    }

    Eigen::VectorXcd psi0 = inv_sqrt2 * (tensor_state(up, down).amplitudes -
                                         tensor_state(down, up).amplitudes);
    return LiarEntity{variant, 4, StateVector(std::move(psi0)), coupled_qubit_projectors(),
                      alternation_hamiltonian(step_time), step_time};
}

MeasurementResult measure(const LiarEntity& entity, int sentence, bool value,
                          const StateVector& from) {
    const ProjectorOperator& p = entity.projector(sentence, value);
    const double probability = born_probability(p, from);
    return MeasurementResult{probability, collapse(p, from)};
}

MeasurementResult measure(const LiarEntity& entity, int sentence, bool value) {
    return measure(entity, sentence, value, entity.psi0);
}

StateVector reasoning_step(const LiarEntity& entity, const StateVector& state) {
    return evolve(entity.hamiltonian, entity.step_time, state);
}

TruthAssignment assignment_of(const LiarEntity& entity, const StateVector& state) {
    const auto read = [&](int sentence) {
        if (born_probability(entity.projector(sentence, true), state) >= 1.0 - kAssignmentTol)
            return TruthValue::True;
        if (born_probability(entity.projector(sentence, false), state) >= 1.0 - kAssignmentTol)
            return TruthValue::False;
        return TruthValue::Latent;
    };
    return TruthAssignment{read(1), read(2)};
}

TruthCycleTrace truth_cycle_trace(const LiarEntity& entity, int sentence, bool value,
                                  int n_steps) {
    if (n_steps < 0) throw DimensionError("n_steps must be >= 0");
    TruthCycleTrace trace;
    StateVector state = measure(entity, sentence, value).post;
    trace.assignments.push_back(assignment_of(entity, state));
    trace.states.push_back(state);
    for (int i = 0; i < n_steps; ++i) {
        state = reasoning_step(entity, state);
        trace.assignments.push_back(assignment_of(entity, state));
        trace.states.push_back(state);
    }
    return trace;
}

std::vector<TruthAssignment> truth_cycle(const LiarEntity& entity, int sentence, bool value,
                                         int n_steps) {
    return truth_cycle_trace(entity, sentence, value, n_steps).assignments;
}

} // namespace contextsim
