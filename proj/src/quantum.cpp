#include "contextsim/quantum.hpp"

#include <Eigen/Eigenvalues>

namespace contextsim {

namespace {

void require_square(const Eigen::MatrixXcd& m, const char* what) {
    if (m.rows() == 0 || m.rows() != m.cols())
        throw DimensionError(std::string(what) + " must be a nonempty square matrix");
}

bool is_hermitian(const Eigen::MatrixXcd& m, double tol) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

void require_same_dim(Eigen::Index op_dim, const StateVector& psi) {
    if (op_dim != psi.dim())
        throw DimensionError("operator dimension " + std::to_string(op_dim) +
                             " does not match state dimension " + std::to_string(psi.dim()));
}

void require_normalized(const StateVector& psi) {
    if (!psi.is_normalized())
        throw DimensionError("state vector is not normalized");
}

} // namespace

ProjectorOperator::ProjectorOperator(Eigen::MatrixXcd m) : matrix(std::move(m)) {
    require_square(matrix, "projector");
    if (!is_hermitian(matrix, kStructuralTol))
        throw DimensionError("projector is not Hermitian within 1e-12");
    if (((matrix * matrix) - matrix).cwiseAbs().maxCoeff() > kStructuralTol)
        throw DimensionError("projector is not idempotent within 1e-12");
}

HermitianOperator::HermitianOperator(Eigen::MatrixXcd m) : matrix(std::move(m)) {
    require_square(matrix, "Hermitian operator");
    if (!is_hermitian(matrix, kStructuralTol))
        throw DimensionError("operator is not Hermitian within 1e-12");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition failed");
    eigenvalues = solver.eigenvalues();
    eigenvectors = solver.eigenvectors();
}

HermitianOperator HermitianOperator::zero(Eigen::Index dim) {
    return HermitianOperator(Eigen::MatrixXcd::Zero(dim, dim));
}

StateVector tensor_state(const StateVector& a, const StateVector& b) {
    const Eigen::Index da = a.dim();
    const Eigen::Index db = b.dim();
    Eigen::VectorXcd out(da * db);
    for (Eigen::Index i = 0; i < da; ++i)
        for (Eigen::Index j = 0; j < db; ++j)
            out(i * db + j) = a.amplitudes(i) * b.amplitudes(j);
    return StateVector(std::move(out));
}

Eigen::MatrixXcd tensor_operator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    require_square(a, "left factor");
    require_square(b, "right factor");
    const Eigen::Index da = a.rows();
    const Eigen::Index db = b.rows();
    Eigen::MatrixXcd out(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i)
        for (Eigen::Index j = 0; j < da; ++j)
            out.block(i * db, j * db, db, db) = a(i, j) * b;
    return out;
}

double born_probability(const ProjectorOperator& p, const StateVector& psi) {
    require_same_dim(p.dim(), psi);
    require_normalized(psi);
    return (p.matrix * psi.amplitudes).squaredNorm();
}

StateVector collapse(const ProjectorOperator& p, const StateVector& psi) {
    require_same_dim(p.dim(), psi);
    require_normalized(psi);
    Eigen::VectorXcd projected = p.matrix * psi.amplitudes;
    const double norm2 = projected.squaredNorm();
    if (norm2 <= kStructuralTol)
        throw CollapseError("impossible measurement outcome: projection probability is 0");
    projected /= std::sqrt(norm2);
    return StateVector(std::move(projected));
}

StateVector evolve(const HermitianOperator& h, double t, const StateVector& psi) {
    require_same_dim(h.dim(), psi);
    require_normalized(psi);
    const Eigen::VectorXcd phases =
        (Complex(0.0, -t) * h.eigenvalues.cast<Complex>().array()).exp();
    Eigen::VectorXcd out =
        h.eigenvectors * (phases.asDiagonal() * (h.eigenvectors.adjoint() * psi.amplitudes));
    return StateVector(std::move(out));
}

Eigen::MatrixXcd evolution_operator(const HermitianOperator& h, double t) {
    const Eigen::VectorXcd phases =
        (Complex(0.0, -t) * h.eigenvalues.cast<Complex>().array()).exp();
    return h.eigenvectors * phases.asDiagonal() * h.eigenvectors.adjoint();
}

} // namespace contextsim
