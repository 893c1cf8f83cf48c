#include "qmem/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace qmem {
namespace io {

using nlohmann::json;

namespace {

json complex_to_json(const Complex& z) {
    return json::array({z.real(), z.imag()});
}

Complex complex_from_json(const json& j, const char* field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw FormatError(std::string(field) + " must be a [re, im] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw FormatError("document is not valid JSON");
    }
    return j;
}

void check_version(const json& j) {
    if (!j.contains("format_version") || !j["format_version"].is_number_integer() ||
        j["format_version"].get<int>() != kFormatVersion) {
        throw FormatError("missing or unsupported format_version");
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& text, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw FormatError("cannot write " + path);
    }
    out << text;
}

json event_to_json(const ScatteringEvent& ev, const Coupling& c) {
    return json{{"parity", to_string(ev.parity)},
                {"k", ev.k.value()},
                {"phi", phase_shift(ev.parity, c, ev.k).radians}};
}

} // namespace

std::string state_to_json(const MemoryState& s) {
    json j{{"format_version", kFormatVersion},
           {"a1", complex_to_json(s.a1())},
           {"a2", complex_to_json(s.a2())}};
    return j.dump(2) + "\n";
}

MemoryState state_from_json(const std::string& text) {
    const json j = parse(text);
    check_version(j);
    if (!j.contains("a1") || !j.contains("a2")) {
        throw FormatError("state document needs a1 and a2 amplitude pairs");
    }
    const Complex a1 = complex_from_json(j["a1"], "a1");
    const Complex a2 = complex_from_json(j["a2"], "a2");
    const double norm = std::sqrt(std::norm(a1) + std::norm(a2));
    if (std::abs(norm - 1.0) > 1e-9) {
        throw FormatError("state amplitudes are not normalized (|norm - 1| > 1e-9)");
    }
    return MemoryState::normalized(a1, a2);
}

void save_state(const MemoryState& s, const std::string& path) {
    spit(state_to_json(s), path);
}

MemoryState load_state(const std::string& path) {
    return state_from_json(slurp(path));
}

std::string unitary_to_json(const Unitary2& u) {
    const Mat2& m = u.matrix();
    json rows = json::array();
    for (int r = 0; r < 2; ++r) {
        json row = json::array();
        for (int col = 0; col < 2; ++col) {
            row.push_back(complex_to_json(m(r, col)));
        }
        rows.push_back(row);
    }
    json j{{"format_version", kFormatVersion}, {"matrix", rows}};
    return j.dump(2) + "\n";
}

Unitary2 unitary_from_json(const std::string& text) {
    const json j = parse(text);
    check_version(j);
    if (!j.contains("matrix") || !j["matrix"].is_array() || j["matrix"].size() != 2) {
        throw FormatError("unitary document needs a 2x2 matrix");
    }
    Mat2 m;
    for (int r = 0; r < 2; ++r) {
        const json& row = j["matrix"][r];
        if (!row.is_array() || row.size() != 2) {
            throw FormatError("unitary document needs a 2x2 matrix");
        }
        for (int col = 0; col < 2; ++col) {
            m(r, col) = complex_from_json(row[col], "matrix entry");
        }
    }
    return Unitary2::from_matrix(m);
}

Unitary2 load_unitary(const std::string& path) {
    return unitary_from_json(slurp(path));
}

std::string schedule_to_json(const Schedule& sch, const Coupling& c) {
    json events = json::array();
    for (const auto& ev : sch.events) {
        events.push_back(event_to_json(ev, c));
    }
    json j{{"format_version", kFormatVersion}, {"events", events}};
    return j.dump(2) + "\n";
}

std::vector<ScatteringEvent> schedule_events_from_json(const std::string& text) {
    const json j = parse(text);
    check_version(j);
    if (!j.contains("events") || !j["events"].is_array()) {
        throw FormatError("schedule document needs an events list");
    }
    std::vector<ScatteringEvent> events;
    for (const json& e : j["events"]) {
        if (!e.contains("parity") || !e.contains("k")) {
            throw FormatError("schedule event needs parity and k");
        }
        const std::string parity = e["parity"].get<std::string>();
        if (parity != "even" && parity != "odd") {
            throw FormatError("schedule event parity must be even or odd");
        }
        events.push_back({parity == "even" ? Parity::even : Parity::odd,
                          WaveNumber(e["k"].get<double>())});
    }
    return events;
}

void save_schedule(const Schedule& sch, const Coupling& c, const std::string& path) {
    spit(schedule_to_json(sch, c), path);
}

std::string report_to_json(const ReadReport& report, const Coupling& c,
                           double fidelity) {
    json j{{"format_version", kFormatVersion},
           {"observables",
            {{"A1", report.observables.A1},
             {"A2", report.observables.A2},
             {"A3", report.observables.A3}}},
           {"reconstructed",
            {{"a1", complex_to_json(report.reconstructed.a1())},
             {"a2", complex_to_json(report.reconstructed.a2())}}},
           {"fidelity", fidelity}};
    json applied = json::array();
    for (const auto& ev : report.events_applied.events) {
        applied.push_back(event_to_json(ev, c));
    }
    json restoration = json::array();
    for (const auto& ev : report.restoration.events) {
        restoration.push_back(event_to_json(ev, c));
    }
    j["events_applied"] = applied;
    j["restoration"] = restoration;
    return j.dump(2) + "\n";
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

void write_profile_csv(std::ostream& out, const IntensityProfile& profile) {
    out << "x,intensity\n";
    for (const auto& s : profile.samples()) {
        out << format_double(s.x) << ',' << format_double(s.intensity) << '\n';
    }
}

void write_purity_csv(std::ostream& out, const std::vector<double>& purities) {
    out << "event_index,purity\n";
    for (std::size_t i = 0; i < purities.size(); ++i) {
        out << (i + 1) << ',' << format_double(purities[i]) << '\n';
    }
}

} // namespace io
} // namespace qmem
