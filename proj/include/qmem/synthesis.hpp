#pragma once

#include <vector>

#include "qmem/smatrix.hpp"

namespace qmem {

/// Wavenumber window available to the scheduler, 0 < k_min < k_max.
/// Together with the phase margin eps_phi it bounds the per-event phase
/// away from the k -> 0 and k -> infinity singularities.
class KBounds {
  public:
    KBounds(double k_min, double k_max);

    /// Bounds wide enough that each channel can realize any per-event phase
    /// of magnitude in [eps_phi, pi - eps_phi] for the given coupling,
    /// obtained by inverting the phase formulas at the interval endpoints.
    static KBounds for_coupling(const Coupling& c, double eps_phi = kDefaultEpsPhi);

    double k_min() const { return k_min_; }
    double k_max() const { return k_max_; }

    static constexpr double kDefaultEpsPhi = 0.02;

  private:
    double k_min_;
    double k_max_;
};

/// Ordered scattering events realizing intended_unitary: applying the events
/// in sequence multiplies to the target up to a +-1 global phase.
struct Schedule {
    std::vector<ScatteringEvent> events;
    Unitary2 intended_unitary = Unitary2::identity();
};

/// X-Z-X Euler angles of a special unitary:
///   U = exp(i sigma1 alpha) exp(i sigma3 beta) exp(i sigma1 gamma),
/// each angle in [0, 2pi). The reconstruction is exact (no residual sign).
/// At gimbal lock (beta = 0 or beta = pi/2 with a vanishing block) gamma is
/// set to 0 and the remaining rotation folds into alpha.
struct EulerXZX {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

EulerXZX euler_xzx(const Unitary2& u);

/// Events realizing exp(i sigma theta) on one channel (sigma1 for even,
/// sigma3 for odd) with 0, 1, or 2 scatterings. The angle is reduced mod
/// 2pi to the representative reachable with phases inside the feasible
/// per-event interval; an exact zero rotation yields no events.
/// Throws SchedulingError, naming the feasible interval, when the reduced
/// angle cannot be split within bounds.
std::vector<ScatteringEvent> rotation_to_events(Parity parity, double theta,
                                                const Coupling& c,
                                                const KBounds& b,
                                                double eps_phi = KBounds::kDefaultEpsPhi);

/// Full SU(2) synthesis via the X-Z-X decomposition; at most six events.
Schedule synthesize_unitary(const Unitary2& u, const Coupling& c,
                            const KBounds& b,
                            double eps_phi = KBounds::kDefaultEpsPhi);

/// Special unitary taking `from` to `to` exactly (column completion of the
/// two states with unit determinant).
Unitary2 state_transfer_unitary(const MemoryState& from, const MemoryState& to);

/// Net effect of the schedule: the ordered product of the event S-matrices,
/// last event leftmost (successive scattering order).
Unitary2 schedule_product(const Schedule& sch, const Coupling& c);

/// Feasible per-event phase interval for one channel under the bounds and
/// margin; [lo, hi] with lo <= hi, on the side of zero that the coupling
/// sign selects. Exposed for diagnostics and tests.
std::pair<double, double> feasible_phase_interval(Parity parity, const Coupling& c,
                                                  const KBounds& b, double eps_phi);

} // namespace qmem
