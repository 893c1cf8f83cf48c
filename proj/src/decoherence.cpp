#include "qmem/decoherence.hpp"

#include <cmath>
#include <numbers>

namespace qmem {

namespace {

constexpr double kDensityTol = 1e-12;

// Unitary basis change: columns are the generator eigenvectors, so
// W^dag rho W expresses rho in that eigenbasis. sigma3 is already diagonal;
// sigma1 diagonalizes by the Hadamard.
const Mat2& eigenbasis(Parity parity) {
    static const Mat2 hadamard =
        (Mat2() << 1, 1, 1, -1).finished() / std::numbers::sqrt2;
    static const Mat2 identity = Mat2::Identity();
    return parity == Parity::even ? hadamard : identity;
}

} // namespace

DensityMatrix DensityMatrix::from_matrix(const Mat2& rho) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kDensityTol) {
        throw DomainError("density matrix must be Hermitian");
    }
    if (std::abs(rho.trace() - Complex(1.0, 0.0)) > kDensityTol) {
        throw DomainError("density matrix must have unit trace");
    }
    DensityMatrix out{rho};
    if (out.min_eigenvalue() < -kDensityTol) {
        throw DomainError("density matrix must be positive semidefinite");
    }
    return out;
}

double DensityMatrix::min_eigenvalue() const {
    // Hermitian 2x2 with unit trace: eigenvalues 1/2 +- sqrt(1/4 - det).
    const double det = rho_.determinant().real();
    const double disc = std::max(0.25 - det, 0.0);
    return 0.5 - std::sqrt(disc);
}

DensityMatrix to_density(const MemoryState& s) {
    return DensityMatrix::from_matrix(s.vector() * s.vector().adjoint());
}

DensityMatrix imperfect_scatter(const DensityMatrix& rho, const ScatteringEvent& ev,
                                const Coupling& c, const OverlapModel& m) {
    if (std::abs(m.c) > 1.0 + kDensityTol) {
        throw DomainError("scattered-wave overlap must satisfy |c| <= 1");
    }
    const PhaseShift phi = phase_shift(ev.parity, c, ev.k);
    const Mat2& w = eigenbasis(ev.parity);
    Mat2 r = w.adjoint() * rho.matrix() * w;
    const Complex factor = m.c * std::polar(1.0, 2.0 * phi.radians);
    r(0, 1) *= factor;
    r(1, 0) *= std::conj(factor);
    return DensityMatrix::from_matrix(w * r * w.adjoint());
}

double purity(const DensityMatrix& rho) {
    return (rho.matrix() * rho.matrix()).trace().real();
}

} // namespace qmem
