#include "qmem/readout.hpp"

#include <cmath>
#include <numbers>

namespace qmem {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBlochExcessTol = 1e-6;

double exact_intensity(Parity parity, const MemoryState& s, const Coupling& c,
                       const WaveNumber& k, double x) {
    const PhaseShift phi = phase_shift(parity, c, k);
    return parity == Parity::even ? even_intensity(s, k, phi, x)
                                  : odd_intensity(s, k, phi, x);
}

// Interference model I(x) = base(x) - A * w(x) with
//   base = 2 [1 + cos(2kx) cos(phi)],  w = 2 sin(2kx) sin(phi).
double extract_amplitude(const IntensityProfile& profile, const WaveNumber& k,
                         PhaseShift phi, double eps_phi) {
    if (std::abs(std::sin(phi.radians)) < eps_phi) {
        throw ReadoutError("readout ill-conditioned: |sin phi| below margin");
    }
    const auto& samples = profile.samples();
    if (samples.empty()) {
        throw ReadoutError("insufficient data: empty intensity profile");
    }

    const auto base = [&](double x) {
        return 2.0 * (1.0 + std::cos(2.0 * k.value() * x) * std::cos(phi.radians));
    };
    const auto weight = [&](double x) {
        return 2.0 * std::sin(2.0 * k.value() * x) * std::sin(phi.radians);
    };

    if (samples.size() == 1) {
        const double w = weight(samples[0].x);
        if (std::abs(w) < 1e-9) {
            throw ReadoutError("readout ill-conditioned: sin(2kx) vanishes at "
                               "the single sample point");
        }
        return (base(samples[0].x) - samples[0].intensity) / w;
    }
    if (samples.size() < 3) {
        throw ReadoutError("insufficient data: least-squares extraction needs "
                           "at least 3 grid points");
    }

    double wtw = 0.0;
    double wtr = 0.0;
    for (const auto& sample : samples) {
        const double w = weight(sample.x);
        wtw += w * w;
        wtr += w * (base(sample.x) - sample.intensity);
    }
    if (wtw < 1e-18) {
        throw ReadoutError("readout ill-conditioned: interference weight "
                           "vanishes on the whole grid");
    }
    return wtr / wtw;
}

} // namespace

double Observables::bloch_norm() const {
    return std::sqrt(A1 * A1 + A2 * A2 + A3 * A3);
}

Observables observables_of(const MemoryState& s) {
    const Complex coherence = std::conj(s.a1()) * s.a2();
    return {std::norm(s.a1()) - std::norm(s.a2()), 2.0 * coherence.real(),
            2.0 * coherence.imag()};
}

WaveNumber read_wavenumber(Parity parity, const Coupling& c) {
    return parity == Parity::even ? WaveNumber(std::abs(c.g1()) / 2.0)
                                  : WaveNumber(2.0 / std::abs(c.g3()));
}

std::vector<double> default_read_grid(const WaveNumber& k, int points) {
    if (points < 1) {
        throw DomainError("read grid needs at least one point");
    }
    std::vector<double> grid(points);
    const double period = kPi / k.value();
    for (int i = 0; i < points; ++i) {
        grid[i] = period * static_cast<double>(i + 1) / points;
    }
    return grid;
}

IntensityProfile sample_profile(Parity parity, const MemoryState& s,
                                const Coupling& c, const WaveNumber& k,
                                const std::vector<double>& grid,
                                const NoiseModel& noise, std::mt19937_64& rng) {
    if (noise.sigma < 0.0 || noise.samples_per_x < 1) {
        throw DomainError("noise model requires sigma >= 0 and samples_per_x >= 1");
    }
    IntensityProfile profile;
    std::normal_distribution<double> draw(0.0, noise.sigma);
    for (double x : grid) {
        double value = exact_intensity(parity, s, c, k, x);
        if (noise.sigma > 0.0) {
            double acc = 0.0;
            for (int i = 0; i < noise.samples_per_x; ++i) {
                acc += draw(rng);
            }
            value += acc / noise.samples_per_x;
        }
        profile.append(x, value);
    }
    return profile;
}

double extract_A1(const IntensityProfile& profile, const WaveNumber& k,
                  PhaseShift phi_minus, double eps_phi) {
    return extract_amplitude(profile, k, phi_minus, eps_phi);
}

double extract_A2(const IntensityProfile& profile, const WaveNumber& k,
                  PhaseShift phi_plus, double eps_phi) {
    return extract_amplitude(profile, k, phi_plus, eps_phi);
}

double extract_A3(double a2_reference, double a2_rotated, double phi0,
                  double eps_phi) {
    const double s = std::sin(2.0 * phi0);
    if (std::abs(s) < eps_phi) {
        throw ReadoutError("readout ill-conditioned: |sin 2 phi0| below margin");
    }
    return (a2_rotated - a2_reference * std::cos(2.0 * phi0)) / s;
}

ScatteringEvent a3_rotation_event(const Coupling& c) {
    // |phi_minus| = pi/4 at k = (2/|g3|) tan(pi/8).
    const double k = (2.0 / std::abs(c.g3())) * std::tan(kPi / 8.0);
    return ScatteringEvent{Parity::odd, WaveNumber(k)};
}

MemoryState reconstruct_state(const Observables& obs) {
    const double n = obs.bloch_norm();
    if (n > 1.0 + kBlochExcessTol) {
        throw ObservablesError("observables inconsistent: Bloch norm " +
                               std::to_string(n) + " exceeds 1 + 1e-6");
    }
    if (n < 1e-12) {
        throw ObservablesError("observables carry no direction (Bloch norm ~ 0)");
    }
    const double b1 = obs.A1 / n;
    const double b2 = obs.A2 / n;
    const double b3 = obs.A3 / n;

    Complex a1;
    Complex a2;
    if (b1 >= 0.0) {
        const double mag = std::sqrt((1.0 + b1) / 2.0);
        a1 = Complex(mag, 0.0);
        a2 = Complex(b2, b3) / (2.0 * mag);
    } else {
        const double mag = std::sqrt((1.0 - b1) / 2.0);
        a1 = Complex(b2, -b3) / (2.0 * mag);
        a2 = Complex(mag, 0.0);
    }
    return canonical_phase(MemoryState::normalized(a1, a2));
}

} // namespace qmem
