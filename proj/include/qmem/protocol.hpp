#pragma once

#include "qmem/readout.hpp"
#include "qmem/synthesis.hpp"

namespace qmem {

/// A memory with its scattering history. The state stays normalized after
/// every event, and replaying the history from the initial state reproduces
/// the current state. Single-writer: operations mutate a cell sequentially.
class MemoryCell {
  public:
    /// A freshly reset memory in the standard state |1>.
    static MemoryCell fresh() { return MemoryCell(MemoryState::standard()); }
    static MemoryCell with_state(const MemoryState& s) { return MemoryCell(s); }

    const MemoryState& state() const { return state_; }
    const MemoryState& initial_state() const { return initial_; }
    const std::vector<ScatteringEvent>& history() const { return history_; }

    /// Scatters one event off the memory: applies its S-matrix and records it.
    void advance(const ScatteringEvent& ev, const Coupling& c);

  private:
    explicit MemoryCell(MemoryState s) : initial_(s), state_(s) {}
    MemoryState initial_;
    MemoryState state_;
    std::vector<ScatteringEvent> history_;
};

/// Folds the events over the initial state; used to check the history
/// replay invariant.
MemoryState replay_history(const MemoryState& initial,
                           const std::vector<ScatteringEvent>& events,
                           const Coupling& c);

/// Everything a read produces: the extracted observables, the state
/// reconstructed from them, the measurement events that were applied, and
/// the restoration schedule that undid them.
struct ReadReport {
    Observables observables;
    MemoryState reconstructed = MemoryState::standard();
    Schedule events_applied;
    Schedule restoration;
};

/// Writes `target` onto a reset memory by synthesizing the state-transfer
/// unitary |1> -> target into scattering events. Throws ProtocolError if
/// the cell is not in the standard state (reset it first). Returns the
/// schedule that was applied.
Schedule write(MemoryCell& cell, const MemoryState& target, const Coupling& c,
               const KBounds& b, double eps_phi = KBounds::kDefaultEpsPhi);

/// Reads the memory through the measurement chain
///   odd read (A1) -> even read (A2) -> odd rotation phi0 -> even read (A2')
/// where every scattering also rotates the memory. Each extracted value
/// refers to the state at its own step; the known per-step unitaries are
/// composed and inverted to recover the pre-read observables. A restoration
/// schedule for the exact inverse of the net applied unitary then returns
/// the memory to its pre-read state (up to a global phase).
ReadReport read(MemoryCell& cell, const Coupling& c, const KBounds& b,
                const NoiseModel& noise = {}, int grid_points = 64,
                double eps_phi = KBounds::kDefaultEpsPhi);

/// Resets an arbitrary pure state to |1>: reads the memory (which restores
/// it), then applies the state transfer reconstructed -> |1>. Unitary
/// throughout. Returns the read report of step one.
ReadReport reset(MemoryCell& cell, const Coupling& c, const KBounds& b,
                 const NoiseModel& noise = {}, int grid_points = 64,
                 double eps_phi = KBounds::kDefaultEpsPhi);

} // namespace qmem
