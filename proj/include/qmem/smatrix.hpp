#pragma once

#include <utility>
#include <vector>

#include "qmem/core.hpp"

namespace qmem {

/// Parity sector of the 1D scattering problem. The interaction is even under
/// space reflection, so the sectors never mix: even waves couple only to the
/// g1*sigma1 term, odd waves only to g3*sigma3.
enum class Parity { even, odd };

const char* to_string(Parity p);

/// S-matrix eigenphase of one parity channel, in radians. Lies in (-pi, 0)
/// for positive coupling and k > 0, in (0, pi) for negative coupling.
struct PhaseShift {
    double radians = 0.0;
};

/// One admissible incident wave: a parity channel and a wavenumber. Its
/// effect on the memory is the channel S-matrix at that wavenumber.
struct ScatteringEvent {
    Parity parity;
    WaveNumber k;
};

/// Sampled interference intensity |Psi(x)|^2 at positions x > 0. Noisy
/// acquisition may carry measured values below zero; exact profiles are
/// nonnegative.
struct IntensitySample {
    double x = 0.0;
    double intensity = 0.0;
};

class IntensityProfile {
  public:
    IntensityProfile() = default;
    explicit IntensityProfile(std::vector<IntensitySample> samples);

    void append(double x, double intensity);
    const std::vector<IntensitySample>& samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }

  private:
    std::vector<IntensitySample> samples_;
};

/// Channel eigenphase:
///   phi_plus(k)  = -2 atan(g1 / (2k))   (even; independent of g3)
///   phi_minus(k) = -2 atan(g3 k / 2)    (odd; independent of g1)
PhaseShift phase_shift(Parity parity, const Coupling& c, const WaveNumber& k);

/// Channel S-matrix: S_plus = exp(i sigma1 phi_plus), S_minus =
/// exp(i sigma3 phi_minus). Special unitary by construction.
Unitary2 scattering_matrix(Parity parity, const Coupling& c, const WaveNumber& k);

Unitary2 scattering_matrix(const ScatteringEvent& ev, const Coupling& c);

/// Total wave for an odd incident wave on memory state s, evaluated at
/// x > 0 and split into its incident and scattered terms:
///   incident  = (a1, a2)^T e^{-ikx}
///   scattered = (a1 e^{i phi}, a2 e^{-i phi})^T e^{+ikx}
/// Only x > 0 is admitted.
std::pair<Vec2, Vec2> odd_total_wave(const MemoryState& s, const WaveNumber& k,
                                     PhaseShift phi_minus, double x);

/// |Psi(x)|^2 for the odd channel,
///   2 [1 + cos(2kx) cos(phi) - A1 sin(2kx) sin(phi)],  A1 = |a1|^2 - |a2|^2.
/// Identical to the squared norm of odd_total_wave.
double odd_intensity(const MemoryState& s, const WaveNumber& k,
                     PhaseShift phi_minus, double x);

/// |Psi(x)|^2 for the even channel,
///   2 [1 + cos(2kx) cos(phi) - A2 sin(2kx) sin(phi)],  A2 = a1* a2 + a2* a1.
/// Follows from the sigma1-eigenbasis wave, where S_plus is diagonal.
double even_intensity(const MemoryState& s, const WaveNumber& k,
                      PhaseShift phi_plus, double x);

} // namespace qmem
