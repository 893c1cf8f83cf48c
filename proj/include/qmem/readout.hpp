#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qmem/smatrix.hpp"

namespace qmem {

/// Interference observables of a memory state: the Bloch components
///   A1 = |a1|^2 - |a2|^2,  A2 = a1* a2 + a2* a1,  A3 = 2 Im(a1* a2).
/// A pure state satisfies A1^2 + A2^2 + A3^2 = 1.
struct Observables {
    double A1 = 0.0;
    double A2 = 0.0;
    double A3 = 0.0;

    double bloch_norm() const;
};

/// Observables computed directly from the amplitudes.
Observables observables_of(const MemoryState& s);

/// Additive Gaussian intensity noise: each grid point averages
/// samples_per_x draws of N(0, sigma). sigma = 0 reproduces exact values.
struct NoiseModel {
    double sigma = 0.0;
    int samples_per_x = 1;
    std::uint64_t seed = 0;
};

/// Default phase margin guarding readout conditioning.
inline constexpr double kReadoutEpsPhi = 0.02;

/// Wavenumber at which the channel phase-shift magnitude is pi/2, the
/// maximum of |sin phi|: k = |g1|/2 for even reads, k = 2/|g3| for odd.
WaveNumber read_wavenumber(Parity parity, const Coupling& c);

/// Uniform grid of `points` positions covering one beat period,
/// x_i = i * pi / (k * points), i = 1..points.
std::vector<double> default_read_grid(const WaveNumber& k, int points);

/// Intensity profile of the given channel sampled on `grid`, with additive
/// noise drawn from `rng` according to the model.
IntensityProfile sample_profile(Parity parity, const MemoryState& s,
                                const Coupling& c, const WaveNumber& k,
                                const std::vector<double>& grid,
                                const NoiseModel& noise, std::mt19937_64& rng);

/// A1 from an odd-channel profile. A single-sample profile is inverted
/// point-wise; three or more samples are fit by linear least squares in A1
/// (the model is linear in the unknown). Two samples are rejected.
double extract_A1(const IntensityProfile& profile, const WaveNumber& k,
                  PhaseShift phi_minus, double eps_phi = kReadoutEpsPhi);

/// A2 from an even-channel profile; same extraction as extract_A1 with the
/// even interference model.
double extract_A2(const IntensityProfile& profile, const WaveNumber& k,
                  PhaseShift phi_plus, double eps_phi = kReadoutEpsPhi);

/// A3 from a second even read taken after a known odd rotation of phase
/// phi0: the rotated read measures
///   A2' = A2 cos(2 phi0) + A3 sin(2 phi0),
/// so A3 = (A2' - A2 cos 2phi0) / sin 2phi0. With phi0 = -pi/4, A3 = -A2'.
double extract_A3(double a2_reference, double a2_rotated, double phi0,
                  double eps_phi = kReadoutEpsPhi);

/// Odd event whose phase magnitude is pi/4, used between the two even
/// reads to expose A3.
ScatteringEvent a3_rotation_event(const Coupling& c);

/// Pure state with the given observables, canonical phase. Bloch vectors
/// with norm in (1, 1 + 1e-6] are projected back to the sphere; larger
/// norms are inconsistent with a quantum state and rejected. Sub-unit
/// norms (noisy estimates) are scaled up to the closest pure state.
MemoryState reconstruct_state(const Observables& obs);

} // namespace qmem
