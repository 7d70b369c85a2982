#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace contextsim {

using Complex = std::complex<double>;

/// Attempt to collapse onto an outcome of probability ~0.
class CollapseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Structural checks (hermiticity, idempotence, normalization) use 1e-12;
// dynamical checks downstream use 1e-10.
inline constexpr double kStructuralTol = 1e-12;

/// Finite-dimensional complex state vector.
struct StateVector {
    Eigen::VectorXcd amplitudes;

    StateVector() = default;
    explicit StateVector(Eigen::VectorXcd a) : amplitudes(std::move(a)) {
        if (amplitudes.size() == 0) throw DimensionError("state vector must have dimension >= 1");
    }

    Eigen::Index dim() const { return amplitudes.size(); }
    double norm() const { return amplitudes.norm(); }
    bool is_normalized(double tol = 1e-9) const { return std::abs(norm() - 1.0) <= tol; }

    /// Unit basis vector e_index (0-based) in the given dimension.
    static StateVector basis(Eigen::Index dim, Eigen::Index index) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
        v(index) = Complex(1.0, 0.0);
        return StateVector(std::move(v));
    }
};

/// Hermitian idempotent operator (validated on construction).
struct ProjectorOperator {
    Eigen::MatrixXcd matrix;

    explicit ProjectorOperator(Eigen::MatrixXcd m);
    Eigen::Index dim() const { return matrix.rows(); }
};

/// Hermitian operator with its eigendecomposition precomputed; generates
/// unitary evolution exp(-iHt). Eigenvalues are radians per unit time.
struct HermitianOperator {
    Eigen::MatrixXcd matrix;
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXcd eigenvectors; // unitary, columns are eigenvectors

    explicit HermitianOperator(Eigen::MatrixXcd m);
    Eigen::Index dim() const { return matrix.rows(); }

    static HermitianOperator zero(Eigen::Index dim);
};

/// Kronecker product of states; amplitude (i,j) lands at i*dim(b)+j.
StateVector tensor_state(const StateVector& a, const StateVector& b);

/// Kronecker product of operators, consistent with tensor_state indexing.
Eigen::MatrixXcd tensor_operator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// ||P psi||^2, the probability of the outcome P fires on.
double born_probability(const ProjectorOperator& p, const StateVector& psi);

/// Post-measurement state P psi / ||P psi||. Throws CollapseError when the
/// outcome probability vanishes.
StateVector collapse(const ProjectorOperator& p, const StateVector& psi);

/// exp(-iHt) psi via the eigendecomposition of H.
StateVector evolve(const HermitianOperator& h, double t, const StateVector& psi);

/// The unitary exp(-iHt) as a dense matrix.
Eigen::MatrixXcd evolution_operator(const HermitianOperator& h, double t);

} // namespace contextsim
