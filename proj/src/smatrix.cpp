#include "qmem/smatrix.hpp"

#include <cmath>

namespace qmem {

const char* to_string(Parity p) {
    return p == Parity::even ? "even" : "odd";
}

IntensityProfile::IntensityProfile(std::vector<IntensitySample> samples)
    : samples_(std::move(samples)) {
    for (const auto& s : samples_) {
        if (!(s.x > 0.0)) {
            throw DomainError("intensity samples require x > 0");
        }
    }
}

void IntensityProfile::append(double x, double intensity) {
    if (!(x > 0.0)) {
        throw DomainError("intensity samples require x > 0");
    }
    samples_.push_back({x, intensity});
}

PhaseShift phase_shift(Parity parity, const Coupling& c, const WaveNumber& k) {
    if (parity == Parity::even) {
        return PhaseShift{-2.0 * std::atan(c.g1() / (2.0 * k.value()))};
    }
    return PhaseShift{-2.0 * std::atan(c.g3() * k.value() / 2.0)};
}

Unitary2 scattering_matrix(Parity parity, const Coupling& c, const WaveNumber& k) {
    const PhaseShift phi = phase_shift(parity, c, k);
    return parity == Parity::even ? Unitary2::exp_x(phi.radians)
                                  : Unitary2::exp_z(phi.radians);
}

Unitary2 scattering_matrix(const ScatteringEvent& ev, const Coupling& c) {
    return scattering_matrix(ev.parity, c, ev.k);
}

std::pair<Vec2, Vec2> odd_total_wave(const MemoryState& s, const WaveNumber& k,
                                     PhaseShift phi_minus, double x) {
    if (!(x > 0.0)) {
        throw DomainError("odd_total_wave is defined for x > 0 only");
    }
    const Complex in_phase = std::polar(1.0, -k.value() * x);
    const Complex out_phase = std::polar(1.0, k.value() * x);
    const Vec2 incident = s.vector() * in_phase;
    Vec2 scattered;
    scattered << s.a1() * std::polar(1.0, phi_minus.radians),
        s.a2() * std::polar(1.0, -phi_minus.radians);
    scattered *= out_phase;
    return {incident, scattered};
}

namespace {

// Shared interference form 2 [1 + cos(2kx) cos(phi) - A sin(2kx) sin(phi)],
// where A is the channel observable of the state.
double interference_intensity(double a, double k, double phi, double x) {
    if (!(x > 0.0)) {
        throw DomainError("intensity is defined for x > 0 only");
    }
    const double two_kx = 2.0 * k * x;
    return 2.0 * (1.0 + std::cos(two_kx) * std::cos(phi) -
                  a * std::sin(two_kx) * std::sin(phi));
}

} // namespace

double odd_intensity(const MemoryState& s, const WaveNumber& k,
                     PhaseShift phi_minus, double x) {
    const double a1_obs = std::norm(s.a1()) - std::norm(s.a2());
    return interference_intensity(a1_obs, k.value(), phi_minus.radians, x);
}

double even_intensity(const MemoryState& s, const WaveNumber& k,
                      PhaseShift phi_plus, double x) {
    const double a2_obs = 2.0 * std::real(std::conj(s.a1()) * s.a2());
    return interference_intensity(a2_obs, k.value(), phi_plus.radians, x);
}

} // namespace qmem
