#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qmem/errors.hpp"

namespace qmem {

using Complex = std::complex<double>;
using Vec2 = Eigen::Vector2cd;
using Mat2 = Eigen::Matrix2cd;

// Pauli matrices (module constants).
const Mat2& sigma1();
const Mat2& sigma2();
const Mat2& sigma3();

/// Normalized two-channel memory content a1|1> + a2|2>.
///
/// Values are immutable after construction and always unit-norm. The
/// canonical-phase representative has a1 real >= 0 (or, when |a1| < 1e-12,
/// a2 real > 0); states differing by a global phase are physically equal.
class MemoryState {
  public:
    /// Normalizes a raw amplitude pair. Throws NormalizationError on the
    /// zero vector.
    static MemoryState normalized(Complex a1, Complex a2);
    static MemoryState normalized(const Vec2& raw) {
        return normalized(raw(0), raw(1));
    }

    /// The standard state |1> = (1, 0).
    static MemoryState standard() { return MemoryState(Vec2(1.0, 0.0)); }

    Complex a1() const { return amps_(0); }
    Complex a2() const { return amps_(1); }
    const Vec2& vector() const { return amps_; }

    double norm() const { return amps_.norm(); }

  private:
    explicit MemoryState(Vec2 amps) : amps_(std::move(amps)) {}
    Vec2 amps_;

    friend MemoryState apply_unitary(const class Unitary2&, const MemoryState&);
    friend MemoryState canonical_phase(const MemoryState&);
};

/// Special-unitary 2x2 matrix. U(2) inputs are rescaled to det = 1 at the
/// boundary; non-unitary inputs are rejected.
class Unitary2 {
  public:
    /// Validates U^dag U = I within 1e-12 and rescales det to 1.
    /// Throws UnitaryError otherwise.
    static Unitary2 from_matrix(const Mat2& m);

    static Unitary2 identity() { return Unitary2(Mat2::Identity()); }

    /// exp(i * sigma1 * theta) = cos(theta) I + i sin(theta) sigma1.
    static Unitary2 exp_x(double theta);
    /// exp(i * sigma3 * theta) = diag(e^{i theta}, e^{-i theta}).
    static Unitary2 exp_z(double theta);

    const Mat2& matrix() const { return m_; }
    Unitary2 adjoint() const { return Unitary2(m_.adjoint()); }
    Complex det() const { return m_.determinant(); }

    Unitary2 operator*(const Unitary2& rhs) const {
        return Unitary2(m_ * rhs.m_);
    }

    /// Frobenius distance to another unitary, minimized over a +-1 global
    /// phase. Zero iff equal up to sign.
    double distance_up_to_sign(const Unitary2& other) const;

  private:
    explicit Unitary2(Mat2 m) : m_(std::move(m)) {}
    Mat2 m_;
};

/// Point-interaction strengths. The even channel couples through g1 (inverse
/// length), the odd channel through g3 (length). Both must be nonzero; units
/// follow hbar = 2m = 1.
class Coupling {
  public:
    Coupling(double g1, double g3);
    double g1() const { return g1_; }
    double g3() const { return g3_; }

  private:
    double g1_;
    double g3_;
};

/// Strictly positive wavenumber of an incident wave.
class WaveNumber {
  public:
    explicit WaveNumber(double k);
    double value() const { return k_; }

  private:
    double k_;
};

/// Normalizes a raw amplitude pair into a state; rejects the zero vector.
MemoryState normalize(Complex raw1, Complex raw2);

/// Global-phase representative with a1 real >= 0 (a2 real > 0 when a1
/// vanishes). Idempotent; physically the identity.
MemoryState canonical_phase(const MemoryState& s);

/// U * s. Norm is preserved to 1e-12; no renormalization is applied.
MemoryState apply_unitary(const Unitary2& u, const MemoryState& s);

/// |<s|t>| in [0, 1]; equals 1 iff the states differ by a global phase only.
double fidelity_up_to_phase(const MemoryState& s, const MemoryState& t);

} // namespace qmem
