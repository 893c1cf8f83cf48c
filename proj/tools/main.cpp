// Command-line surface for the two-channel scattering quantum memory:
// phase shifts, schedule synthesis, write/read/reset on a state file,
// intensity and purity traces as CSV, and the closed-form cross-check.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qmem/decoherence.hpp"
#include "qmem/io.hpp"
#include "qmem/oracle.hpp"
#include "qmem/protocol.hpp"

namespace {

// Exit codes, also documented in the README.
enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kProtocol = 3,
    kScheduling = 4,
    kVerification = 5,
    kFormat = 6,
    kReadout = 7,
};

struct Options {
    double g1 = 2.0;
    double g3 = 2.0;
    double k_min = 0.0; // 0 = derive from the coupling
    double k_max = 0.0;
    double eps_phi = qmem::KBounds::kDefaultEpsPhi;
    double noise_sigma = 0.0;
    int grid_points = 64;
    std::uint64_t seed = 0;

    qmem::Coupling coupling() const { return {g1, g3}; }

    qmem::KBounds bounds() const {
        if (k_min > 0.0 && k_max > 0.0) {
            return {k_min, k_max};
        }
        return qmem::KBounds::for_coupling(coupling(), eps_phi);
    }

    qmem::NoiseModel noise() const { return {noise_sigma, 1, seed}; }
};

std::string fmt(double v) { return qmem::io::format_double(v); }

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw qmem::FormatError("cannot write " + out_path);
    }
    out << text;
}

qmem::MemoryState parse_inline_state(const std::vector<double>& v) {
    if (v.size() != 4) {
        throw qmem::DomainError("inline state needs exactly four numbers: "
                                "a1_re,a1_im,a2_re,a2_im");
    }
    return qmem::MemoryState::normalized({v[0], v[1]}, {v[2], v[3]});
}

int run(int argc, char** argv) {
    CLI::App app{"Two-channel scattering quantum memory simulator"};
    app.require_subcommand(1);
    app.fallthrough(true);
    app.set_config("--config", "", "Flat key=value configuration file; "
                                   "command-line flags win");

    Options opt;
    app.add_option("--g1", opt.g1, "Even-channel coupling (nonzero)")
        ->capture_default_str();
    app.add_option("--g3", opt.g3, "Odd-channel coupling (nonzero)")
        ->capture_default_str();
    app.add_option("--k-min", opt.k_min,
                   "Scheduler wavenumber lower bound (default: derived)");
    app.add_option("--k-max", opt.k_max,
                   "Scheduler wavenumber upper bound (default: derived)");
    app.add_option("--eps-phi", opt.eps_phi, "Per-event phase margin, rad")
        ->capture_default_str();
    app.add_option("--noise-sigma", opt.noise_sigma,
                   "Additive intensity noise standard deviation")
        ->capture_default_str();
    app.add_option("--grid-points", opt.grid_points, "Readout grid size")
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "Noise RNG seed")->capture_default_str();

    // phases
    auto* cmd_phases = app.add_subcommand("phases", "Print phi_plus, phi_minus at k");
    double phases_k = 0.0;
    cmd_phases->add_option("--k", phases_k, "Wavenumber (> 0)")->required();

    // synth
    auto* cmd_synth =
        app.add_subcommand("synth", "Synthesize a schedule for a target");
    std::string synth_target_file;
    std::string synth_unitary_file;
    std::vector<double> synth_inline;
    std::string synth_out;
    cmd_synth->add_option("--target-file", synth_target_file,
                          "Target state document (transfer from |1>)");
    cmd_synth->add_option("--unitary-file", synth_unitary_file,
                          "Target unitary document");
    cmd_synth->add_option("--target", synth_inline,
                          "Inline target state a1_re,a1_im,a2_re,a2_im")
        ->delimiter(',');
    cmd_synth->add_option("--out", synth_out, "Schedule output path (default stdout)");

    // write / read / reset
    auto* cmd_write = app.add_subcommand("write", "Write a target onto a reset memory");
    std::string write_state_file;
    std::string write_target_file;
    std::vector<double> write_inline;
    cmd_write->add_option("--state-file", write_state_file, "Memory state document")
        ->required();
    cmd_write->add_option("--target-file", write_target_file, "Target state document");
    cmd_write->add_option("--target", write_inline,
                          "Inline target state a1_re,a1_im,a2_re,a2_im")
        ->delimiter(',');

    auto* cmd_read = app.add_subcommand("read", "Read the memory and restore it");
    std::string read_state_file;
    std::string read_report_file;
    cmd_read->add_option("--state-file", read_state_file, "Memory state document")
        ->required();
    cmd_read->add_option("--report", read_report_file,
                         "Read-report output path (default stdout)");

    auto* cmd_reset = app.add_subcommand("reset", "Reset the memory to |1>");
    std::string reset_state_file;
    cmd_reset->add_option("--state-file", reset_state_file, "Memory state document")
        ->required();

    // intensity
    auto* cmd_intensity =
        app.add_subcommand("intensity", "Exact interference intensity as CSV");
    std::string intensity_parity = "odd";
    double intensity_k = 0.0;
    double intensity_xmin = 0.0;
    double intensity_xmax = 0.0;
    int intensity_points = 0;
    std::string intensity_state_file;
    std::string intensity_out;
    cmd_intensity->add_option("--parity", intensity_parity, "even | odd")
        ->check(CLI::IsMember({"even", "odd"}))
        ->capture_default_str();
    cmd_intensity->add_option("--k", intensity_k, "Wavenumber (> 0)")->required();
    cmd_intensity->add_option("--x-min", intensity_xmin, "Range start (> 0)")
        ->check(CLI::PositiveNumber);
    cmd_intensity->add_option("--x-max", intensity_xmax, "Range end")
        ->check(CLI::PositiveNumber);
    cmd_intensity->add_option("--points", intensity_points,
                              "Sample count (default: grid-points)")
        ->check(CLI::PositiveNumber);
    cmd_intensity->add_option("--state-file", intensity_state_file,
                              "Memory state document (default: standard state)");
    cmd_intensity->add_option("--out", intensity_out, "CSV output path");

    // verify
    auto* cmd_verify =
        app.add_subcommand("verify", "Cross-check closed-form S-matrices");
    double verify_klo = 1e-2;
    double verify_khi = 1e2;
    std::size_t verify_points = 100;
    double verify_tol = 1e-10;
    cmd_verify->add_option("--k-lo", verify_klo, "Grid start")->capture_default_str();
    cmd_verify->add_option("--k-hi", verify_khi, "Grid end")->capture_default_str();
    cmd_verify->add_option("--points", verify_points, "Grid size")
        ->capture_default_str();
    cmd_verify->add_option("--tol", verify_tol, "Max allowed deviation")
        ->capture_default_str();

    // decohere
    auto* cmd_decohere = app.add_subcommand(
        "decohere", "Purity trace under repeated imperfect scattering");
    double overlap_re = 1.0;
    double overlap_im = 0.0;
    int decohere_events = 0;
    std::string decohere_parity = "odd";
    std::string decohere_state_file;
    std::string decohere_out;
    cmd_decohere->add_option("--overlap-re", overlap_re, "Re of the scattered-wave overlap")
        ->capture_default_str();
    cmd_decohere->add_option("--overlap-im", overlap_im, "Im of the scattered-wave overlap")
        ->capture_default_str();
    cmd_decohere->add_option("--events", decohere_events, "Number of events (>= 1)")
        ->required();
    cmd_decohere->add_option("--parity", decohere_parity, "even | odd")
        ->check(CLI::IsMember({"even", "odd"}))
        ->capture_default_str();
    cmd_decohere->add_option("--state-file", decohere_state_file,
                             "Initial state document (default: standard state)");
    cmd_decohere->add_option("--out", decohere_out, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    if (cmd_phases->parsed()) {
        const qmem::Coupling c = opt.coupling();
        const qmem::WaveNumber k(phases_k);
        const auto plus = qmem::phase_shift(qmem::Parity::even, c, k);
        const auto minus = qmem::phase_shift(qmem::Parity::odd, c, k);
        std::cout << fmt(plus.radians) << ", " << fmt(minus.radians) << "\n";
        return kOk;
    }

    if (cmd_synth->parsed()) {
        const qmem::Coupling c = opt.coupling();
        qmem::Unitary2 target = qmem::Unitary2::identity();
        if (!synth_unitary_file.empty()) {
            target = qmem::io::load_unitary(synth_unitary_file);
        } else if (!synth_target_file.empty()) {
            target = qmem::state_transfer_unitary(
                qmem::MemoryState::standard(), qmem::io::load_state(synth_target_file));
        } else if (!synth_inline.empty()) {
            target = qmem::state_transfer_unitary(qmem::MemoryState::standard(),
                                                  parse_inline_state(synth_inline));
        } else {
            throw qmem::DomainError(
                "synth needs --target-file, --unitary-file, or --target");
        }
        const qmem::Schedule schedule =
            qmem::synthesize_unitary(target, c, opt.bounds(), opt.eps_phi);
        const qmem::Unitary2 product = qmem::schedule_product(schedule, c);
        const double residual =
            std::abs((target.adjoint() * product).matrix().trace()) - 2.0;
        emit(qmem::io::schedule_to_json(schedule, c), synth_out);
        std::cout << "events = " << schedule.events.size()
                  << "\nresidual = " << fmt(residual) << "\n";
        return kOk;
    }

    if (cmd_write->parsed()) {
        const qmem::Coupling c = opt.coupling();
        qmem::MemoryState target = qmem::MemoryState::standard();
        if (!write_target_file.empty()) {
            target = qmem::io::load_state(write_target_file);
        } else if (!write_inline.empty()) {
            target = parse_inline_state(write_inline);
        } else {
            throw qmem::DomainError("write needs --target-file or --target");
        }
        auto cell = qmem::MemoryCell::with_state(qmem::io::load_state(write_state_file));
        qmem::write(cell, target, c, opt.bounds(), opt.eps_phi);
        qmem::io::save_state(qmem::canonical_phase(cell.state()), write_state_file);
        return kOk;
    }

    if (cmd_read->parsed()) {
        const qmem::Coupling c = opt.coupling();
        const qmem::MemoryState before = qmem::io::load_state(read_state_file);
        auto cell = qmem::MemoryCell::with_state(before);
        const qmem::ReadReport report = qmem::read(
            cell, c, opt.bounds(), opt.noise(), opt.grid_points, opt.eps_phi);
        const double fidelity =
            qmem::fidelity_up_to_phase(report.reconstructed, before);
        emit(qmem::io::report_to_json(report, c, fidelity), read_report_file);
        qmem::io::save_state(qmem::canonical_phase(cell.state()), read_state_file);
        return kOk;
    }

    if (cmd_reset->parsed()) {
        const qmem::Coupling c = opt.coupling();
        auto cell = qmem::MemoryCell::with_state(qmem::io::load_state(reset_state_file));
        qmem::reset(cell, c, opt.bounds(), opt.noise(), opt.grid_points, opt.eps_phi);
        qmem::io::save_state(qmem::canonical_phase(cell.state()), reset_state_file);
        return kOk;
    }

    if (cmd_intensity->parsed()) {
        const qmem::Coupling c = opt.coupling();
        const qmem::WaveNumber k(intensity_k);
        const qmem::Parity parity =
            intensity_parity == "even" ? qmem::Parity::even : qmem::Parity::odd;
        const qmem::MemoryState state =
            intensity_state_file.empty() ? qmem::MemoryState::standard()
                                         : qmem::io::load_state(intensity_state_file);
        const int points =
            intensity_points > 0 ? intensity_points : opt.grid_points;
        if (points < 1) {
            throw qmem::DomainError("points must be >= 1");
        }
        double xmax = intensity_xmax;
        double xmin = intensity_xmin;
        if (xmax == 0.0) {
            xmax = 3.14159265358979323846 / k.value();
        }
        if (xmin == 0.0) {
            xmin = xmax / points;
        }
        if (!(xmin > 0.0) || !(xmax >= xmin)) {
            throw qmem::DomainError("intensity range must satisfy 0 < x-min <= x-max");
        }
        const qmem::PhaseShift phi = qmem::phase_shift(parity, c, k);
        qmem::IntensityProfile profile;
        for (int i = 0; i < points; ++i) {
            const double x =
                points == 1 ? xmin
                            : xmin + (xmax - xmin) * static_cast<double>(i) /
                                         static_cast<double>(points - 1);
            const double value = parity == qmem::Parity::even
                                     ? qmem::even_intensity(state, k, phi, x)
                                     : qmem::odd_intensity(state, k, phi, x);
            profile.append(x, value);
        }
        std::ostringstream csv;
        qmem::io::write_profile_csv(csv, profile);
        emit(csv.str(), intensity_out);
        return kOk;
    }

    if (cmd_verify->parsed()) {
        const qmem::Coupling c = opt.coupling();
        const auto grid = qmem::oracle::log_grid(verify_klo, verify_khi, verify_points);
        const auto report = qmem::oracle::verify_closed_form(c, grid, verify_tol);
        std::cout << report.summary() << "\n";
        return report.pass ? kOk : kVerification;
    }

    if (cmd_decohere->parsed()) {
        const qmem::Coupling c = opt.coupling();
        if (decohere_events < 1) {
            throw qmem::DomainError("decohere needs --events >= 1");
        }
        const qmem::Parity parity =
            decohere_parity == "even" ? qmem::Parity::even : qmem::Parity::odd;
        const qmem::MemoryState state =
            decohere_state_file.empty() ? qmem::MemoryState::standard()
                                        : qmem::io::load_state(decohere_state_file);
        const qmem::OverlapModel overlap{{overlap_re, overlap_im}};
        const qmem::ScatteringEvent ev{parity, qmem::read_wavenumber(parity, c)};
        qmem::DensityMatrix rho = qmem::to_density(state);
        std::vector<double> purities;
        purities.reserve(decohere_events);
        for (int i = 0; i < decohere_events; ++i) {
            rho = qmem::imperfect_scatter(rho, ev, c, overlap);
            purities.push_back(qmem::purity(rho));
        }
        std::ostringstream csv;
        qmem::io::write_purity_csv(csv, purities);
        emit(csv.str(), decohere_out);
        return kOk;
    }

    return kUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qmem::ProtocolError& e) {
        std::cerr << "protocol error: " << e.what() << "\n";
        return kProtocol;
    } catch (const qmem::SchedulingError& e) {
        std::cerr << "scheduling error: " << e.what() << "\n";
        return kScheduling;
    } catch (const qmem::FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kFormat;
    } catch (const qmem::ReadoutError& e) {
        std::cerr << "readout error: " << e.what() << "\n";
        return kReadout;
    } catch (const qmem::ObservablesError& e) {
        std::cerr << "readout error: " << e.what() << "\n";
        return kReadout;
    } catch (const qmem::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
