#pragma once

#include "qmem/smatrix.hpp"

namespace qmem {

/// 2x2 density matrix: Hermitian, trace one, positive semidefinite
/// (all within 1e-12).
class DensityMatrix {
  public:
    /// Validates the three invariants; throws DomainError otherwise.
    static DensityMatrix from_matrix(const Mat2& rho);

    const Mat2& matrix() const { return rho_; }
    double min_eigenvalue() const;

  private:
    explicit DensityMatrix(Mat2 rho) : rho_(std::move(rho)) {}
    Mat2 rho_;
};

/// Overlap <psi_out,2 | psi_out,1> of the two scattered waves in the
/// eigenbasis of the event's generator. |c| <= 1; c = 1 is the admissible
/// (fully unitary) case. Smaller overlaps mean the out state stays
/// entangled with the scattered wave and the memory dephases.
struct OverlapModel {
    Complex c = Complex(1.0, 0.0);
};

/// rho = |s><s|, a rank-1 projector with purity 1.
DensityMatrix to_density(const MemoryState& s);

/// Scattering with an imperfect (non-admissible) incident wave. In the
/// eigenbasis of the event's generator the populations evolve exactly as in
/// the unitary case while the coherence picks up the S-matrix phase and is
/// multiplied by the overlap:
///   rho'_{+-} = m.c * e^{2 i phi} rho_{+-}.
/// m.c = 1 reduces to S rho S^dag.
DensityMatrix imperfect_scatter(const DensityMatrix& rho, const ScatteringEvent& ev,
                                const Coupling& c, const OverlapModel& m);

/// trace(rho^2), in (0, 1]; equals 1 iff rho is pure.
double purity(const DensityMatrix& rho);

} // namespace qmem
