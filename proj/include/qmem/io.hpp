#pragma once

#include <iosfwd>
#include <string>

#include "qmem/protocol.hpp"

namespace qmem {
namespace io {

inline constexpr int kFormatVersion = 1;

/// State document: {"format_version": 1, "a1": [re, im], "a2": [re, im]}.
/// Loading rejects malformed documents and amplitude pairs whose norm
/// deviates from 1 by more than 1e-9.
std::string state_to_json(const MemoryState& s);
MemoryState state_from_json(const std::string& text);

void save_state(const MemoryState& s, const std::string& path);
MemoryState load_state(const std::string& path);

/// Unitary document: {"format_version": 1, "matrix": [[[re,im],[re,im]],
/// [[re,im],[re,im]]]}. Validated through Unitary2::from_matrix.
std::string unitary_to_json(const Unitary2& u);
Unitary2 unitary_from_json(const std::string& text);
Unitary2 load_unitary(const std::string& path);

/// Schedule document: {"format_version": 1, "events": [{"parity": "even",
/// "k": ..., "phi": ...}]}. The phi field is informational and recomputed
/// from the coupling on load.
std::string schedule_to_json(const Schedule& sch, const Coupling& c);
std::vector<ScatteringEvent> schedule_events_from_json(const std::string& text);
void save_schedule(const Schedule& sch, const Coupling& c, const std::string& path);

/// Read-report document with observables, the reconstructed state, the
/// fidelity to the pre-read state, and both schedules.
std::string report_to_json(const ReadReport& report, const Coupling& c,
                           double fidelity);

/// Two-column CSV "x,intensity" with one header row, >= 12 significant
/// digits per value.
void write_profile_csv(std::ostream& out, const IntensityProfile& profile);

/// Two-column CSV "event_index,purity".
void write_purity_csv(std::ostream& out, const std::vector<double>& purities);

/// Formats a double with 15 significant digits (diff-stable output).
std::string format_double(double v);

} // namespace io
} // namespace qmem
