#include "qmem/core.hpp"

#include <cmath>

namespace qmem {

namespace {
constexpr double kUnitaryTol = 1e-12;
constexpr double kPhaseBranchTol = 1e-12;
const Complex kI(0.0, 1.0);
} // namespace

const Mat2& sigma1() {
    static const Mat2 m = (Mat2() << 0, 1, 1, 0).finished();
    return m;
}

const Mat2& sigma2() {
    static const Mat2 m = (Mat2() << 0, -kI, kI, 0).finished();
    return m;
}

const Mat2& sigma3() {
    static const Mat2 m = (Mat2() << 1, 0, 0, -1).finished();
    return m;
}

MemoryState MemoryState::normalized(Complex a1, Complex a2) {
    const double n = std::sqrt(std::norm(a1) + std::norm(a2));
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw NormalizationError("cannot normalize zero or non-finite amplitude pair");
    }
    return MemoryState(Vec2(a1 / n, a2 / n));
}

MemoryState normalize(Complex raw1, Complex raw2) {
    return MemoryState::normalized(raw1, raw2);
}

MemoryState canonical_phase(const MemoryState& s) {
    const Complex a1 = s.a1();
    const Complex a2 = s.a2();
    Complex phase;
    if (std::abs(a1) < kPhaseBranchTol) {
        phase = std::conj(a2) / std::abs(a2);
    } else {
        phase = std::conj(a1) / std::abs(a1);
    }
    Vec2 out(phase * a1, phase * a2);
    // Scrub roundoff imaginary dust on the anchored component.
    if (std::abs(a1) < kPhaseBranchTol) {
        out(1) = Complex(std::abs(a2), 0.0);
    } else {
        out(0) = Complex(std::abs(a1), 0.0);
    }
    return MemoryState(out);
}

Unitary2 Unitary2::from_matrix(const Mat2& m) {
    const double dev = (m.adjoint() * m - Mat2::Identity()).cwiseAbs().maxCoeff();
    if (!(dev <= kUnitaryTol)) {
        throw UnitaryError("matrix is not unitary (max |U^dag U - I| = " +
                           std::to_string(dev) + ")");
    }
    const Complex d = m.determinant();
    if (std::abs(d - Complex(1.0, 0.0)) <= kUnitaryTol) {
        return Unitary2(m);
    }
    // U(2) input: divide out a det-normalizing phase.
    return Unitary2(m / std::sqrt(d));
}

Unitary2 Unitary2::exp_x(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    Mat2 m;
    m << Complex(c, 0), Complex(0, s), Complex(0, s), Complex(c, 0);
    return Unitary2(m);
}

Unitary2 Unitary2::exp_z(double theta) {
    Mat2 m;
    m << std::polar(1.0, theta), 0, 0, std::polar(1.0, -theta);
    return Unitary2(m);
}

double Unitary2::distance_up_to_sign(const Unitary2& other) const {
    const double dplus = (m_ - other.m_).norm();
    const double dminus = (m_ + other.m_).norm();
    return std::min(dplus, dminus);
}

Coupling::Coupling(double g1, double g3) : g1_(g1), g3_(g3) {
    if (g1 == 0.0 || g3 == 0.0 || !std::isfinite(g1) || !std::isfinite(g3)) {
        throw DomainError("couplings g1 and g3 must be finite and nonzero");
    }
}

WaveNumber::WaveNumber(double k) : k_(k) {
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw DomainError("wavenumber must be finite and strictly positive");
    }
}

MemoryState apply_unitary(const Unitary2& u, const MemoryState& s) {
    MemoryState out(Vec2(u.matrix() * s.vector()));
    const double drift = std::abs(out.norm() - 1.0);
    if (drift > kUnitaryTol) {
        throw UnitaryError("state norm drifted beyond tolerance under unitary");
    }
    return out;
}

double fidelity_up_to_phase(const MemoryState& s, const MemoryState& t) {
    return std::abs(s.vector().dot(t.vector()));
}

} // namespace qmem
