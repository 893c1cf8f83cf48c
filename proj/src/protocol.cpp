#include "qmem/protocol.hpp"

#include <cmath>

namespace qmem {

namespace {

constexpr double kStandardStateTol = 1e-9;

Eigen::Vector3d pauli_components(const Mat2& m) {
    return {0.5 * (sigma1() * m).trace().real(),
            0.5 * (sigma2() * m).trace().real(),
            0.5 * (sigma3() * m).trace().real()};
}

// Row of the chain-inversion system for measuring the observable generated
// by `op` on the state V s0: <V^dag op V> expressed against (A1, A2, A3).
Eigen::RowVector3d inversion_row(const Mat2& op, const Unitary2& v) {
    const Mat2 transported = v.matrix().adjoint() * op * v.matrix();
    const Eigen::Vector3d c = pauli_components(transported);
    return {c(2), c(0), c(1)}; // A1 ~ sigma3, A2 ~ sigma1, A3 ~ sigma2
}

} // namespace

void MemoryCell::advance(const ScatteringEvent& ev, const Coupling& c) {
    state_ = apply_unitary(scattering_matrix(ev, c), state_);
    history_.push_back(ev);
}

MemoryState replay_history(const MemoryState& initial,
                           const std::vector<ScatteringEvent>& events,
                           const Coupling& c) {
    MemoryState s = initial;
    for (const auto& ev : events) {
        s = apply_unitary(scattering_matrix(ev, c), s);
    }
    return s;
}

Schedule write(MemoryCell& cell, const MemoryState& target, const Coupling& c,
               const KBounds& b, double eps_phi) {
    if (fidelity_up_to_phase(cell.state(), MemoryState::standard()) <
        1.0 - kStandardStateTol) {
        throw ProtocolError("memory is not in the standard state; reset it "
                            "before writing");
    }
    const Unitary2 transfer = state_transfer_unitary(MemoryState::standard(), target);
    const Schedule schedule = synthesize_unitary(transfer, c, b, eps_phi);
    for (const auto& ev : schedule.events) {
        cell.advance(ev, c);
    }
    return schedule;
}

ReadReport read(MemoryCell& cell, const Coupling& c, const KBounds& b,
                const NoiseModel& noise, int grid_points, double eps_phi) {
    std::mt19937_64 rng(noise.seed);

    const ScatteringEvent odd_read{Parity::odd, read_wavenumber(Parity::odd, c)};
    const ScatteringEvent even_read{Parity::even, read_wavenumber(Parity::even, c)};
    const ScatteringEvent rotation = a3_rotation_event(c);

    struct Step {
        ScatteringEvent event;
        bool measured;
    };
    const Step chain[] = {
        {odd_read, true}, {even_read, true}, {rotation, false}, {even_read, true}};

    // Run the chain. Each measured step samples the interference profile of
    // the state entering that scattering, then the scattering itself rotates
    // the memory (a_out of one step is a_in of the next).
    Eigen::Vector3d measured = Eigen::Vector3d::Zero();
    Eigen::Matrix3d system = Eigen::Matrix3d::Zero();
    Unitary2 accumulated = Unitary2::identity();
    std::vector<ScatteringEvent> applied;
    int row = 0;
    for (const Step& step : chain) {
        const Parity parity = step.event.parity;
        if (step.measured) {
            const PhaseShift phi = phase_shift(parity, c, step.event.k);
            const auto grid = default_read_grid(step.event.k, grid_points);
            const IntensityProfile profile = sample_profile(
                parity, cell.state(), c, step.event.k, grid, noise, rng);
            const double value =
                parity == Parity::odd
                    ? extract_A1(profile, step.event.k, phi, eps_phi)
                    : extract_A2(profile, step.event.k, phi, eps_phi);
            const Mat2& op = parity == Parity::odd ? sigma3() : sigma1();
            system.row(row) = inversion_row(op, accumulated);
            measured(row) = value;
            ++row;
        }
        cell.advance(step.event, c);
        applied.push_back(step.event);
        accumulated = scattering_matrix(step.event, c) * accumulated;
    }

    if (std::abs(system.determinant()) < 1e-9) {
        throw ReadoutError("measurement chain is ill-conditioned: transported "
                           "read axes are nearly dependent");
    }
    const Eigen::Vector3d bloch = system.fullPivLu().solve(measured);
    const Observables observables{bloch(0), bloch(1), bloch(2)};

    ReadReport report;
    report.observables = observables;
    report.reconstructed = reconstruct_state(observables);
    report.events_applied = Schedule{applied, accumulated};

    // Undo the exactly known net unitary; estimation noise never enters here.
    report.restoration = synthesize_unitary(accumulated.adjoint(), c, b, eps_phi);
    for (const auto& ev : report.restoration.events) {
        cell.advance(ev, c);
    }
    return report;
}

ReadReport reset(MemoryCell& cell, const Coupling& c, const KBounds& b,
                 const NoiseModel& noise, int grid_points, double eps_phi) {
    ReadReport report = read(cell, c, b, noise, grid_points, eps_phi);
    const Unitary2 transfer =
        state_transfer_unitary(report.reconstructed, MemoryState::standard());
    const Schedule schedule = synthesize_unitary(transfer, c, b, eps_phi);
    for (const auto& ev : schedule.events) {
        cell.advance(ev, c);
    }
    return report;
}

} // namespace qmem
