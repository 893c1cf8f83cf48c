#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "qmem/io.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace qmem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CliFixture {
    fs::path dir;
    std::string cli;

    CliFixture() {
        const char* env = std::getenv("QMEM_CLI");
        REQUIRE_MESSAGE(env != nullptr,
                        "QMEM_CLI must point at the qmem binary (set by ctest)");
        cli = env;
        dir = fs::temp_directory_path() /
              ("qmem_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~CliFixture() { fs::remove_all(dir); }

    RunResult run(const std::string& args) const {
        const fs::path out = dir / "stdout.txt";
        const std::string cmd =
            cli + " " + args + " > " + out.string() + " 2> " + (dir / "stderr.txt").string();
        const int status = std::system(cmd.c_str());
        RunResult r;
        r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        r.out = slurp(out);
        return r;
    }
};

} // namespace

TEST_CASE("cli: phases prints both shifts and rejects bad wavenumbers") {
    CliFixture cli;
    const RunResult ok = cli.run("phases --k 1");
    CHECK(ok.exit_code == 0);
    double plus = 0.0, minus = 0.0;
    CHECK(std::sscanf(ok.out.c_str(), "%lf, %lf", &plus, &minus) == 2);
    CHECK(std::abs(plus + 1.5707963267948966) <= 1e-12);
    CHECK(std::abs(minus + 1.5707963267948966) <= 1e-12);

    CHECK(cli.run("phases --k 0").exit_code == 2);
    CHECK(cli.run("phases").exit_code == 2);

    // small-angle regime
    const RunResult tiny = cli.run("phases --k 1e6");
    CHECK(tiny.exit_code == 0);
    CHECK(std::sscanf(tiny.out.c_str(), "%lf, %lf", &plus, &minus) == 2);
    CHECK(std::abs(plus + 2e-6) <= 1e-9);
}

TEST_CASE("cli: reset, write, read flow on a state file") {
    CliFixture cli;
    const fs::path state = cli.dir / "state.json";
    io::save_state(normalize(Complex(0.6, 0.0), Complex(0.0, 0.8)), state.string());

    // write onto a non-reset memory is a protocol error
    CHECK(cli.run("write --state-file " + state.string() + " --target 0,0,1,0")
              .exit_code == 3);

    CHECK(cli.run("reset --state-file " + state.string()).exit_code == 0);
    MemoryState after_reset = io::load_state(state.string());
    CHECK(fidelity_up_to_phase(after_reset, MemoryState::standard()) >= 1.0 - 1e-9);
    CHECK(std::abs(after_reset.a1().imag()) <= 1e-12); // canonicalized

    CHECK(cli.run("write --state-file " + state.string() + " --target 0,0,1,0")
              .exit_code == 0);
    const MemoryState written = io::load_state(state.string());
    CHECK(fidelity_up_to_phase(written, normalize(0.0, 1.0)) >= 1.0 - 1e-9);

    const fs::path report = cli.dir / "report.json";
    CHECK(cli.run("read --state-file " + state.string() + " --report " +
                  report.string())
              .exit_code == 0);
    const auto report_json = nlohmann::json::parse(slurp(report));
    CHECK(report_json["fidelity"].get<double>() >= 1.0 - 1e-9);
    CHECK(report_json["format_version"].get<int>() == 1);
    const MemoryState after_read = io::load_state(state.string());
    CHECK(fidelity_up_to_phase(after_read, written) >= 1.0 - 1e-9);
}

TEST_CASE("cli: synth emits a schedule whose residual is tiny") {
    CliFixture cli;
    const fs::path sched = cli.dir / "schedule.json";
    const RunResult r =
        cli.run("synth --target 0,0,1,0 --out " + sched.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("residual = ") != std::string::npos);
    double residual = 1.0;
    const auto pos = r.out.find("residual = ");
    CHECK(std::sscanf(r.out.c_str() + pos, "residual = %lf", &residual) == 1);
    CHECK(std::abs(residual) <= 1e-9);

    const auto events =
        io::schedule_events_from_json(slurp(sched));
    CHECK(events.size() <= 6);

    // identity target: empty schedule
    const fs::path id_sched = cli.dir / "identity.json";
    io::save_state(MemoryState::standard(), (cli.dir / "std.json").string());
    CHECK(cli.run("synth --target-file " + (cli.dir / "std.json").string() +
                  " --out " + id_sched.string())
              .exit_code == 0);
    CHECK(io::schedule_events_from_json(slurp(id_sched)).empty());
}

TEST_CASE("cli: intensity CSV matches the closed form") {
    CliFixture cli;
    // state (1,0), odd channel, k = 1, phi = -pi/2: intensity at x = pi/4 is 4
    const RunResult r = cli.run(
        "intensity --parity odd --k 1 --x-min 0.78539816339744831 --x-max "
        "1.5707963267948966 --points 2");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string header, row1;
    std::getline(lines, header);
    std::getline(lines, row1);
    CHECK(header == "x,intensity");
    double x = 0.0, intensity = 0.0;
    CHECK(std::sscanf(row1.c_str(), "%lf,%lf", &x, &intensity) == 2);
    CHECK(std::abs(intensity - 4.0) <= 1e-9);

    CHECK(cli.run("intensity --parity odd --k 1 --points 0").exit_code == 2);
    CHECK(cli.run("intensity --parity odd --k 1 --x-min -1 --x-max 2").exit_code ==
          2);
}

TEST_CASE("cli: verify passes on the default grid") {
    CliFixture cli;
    const RunResult r = cli.run("verify");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);

    const RunResult custom = cli.run("--g1 -2 --g3 1 verify --points 37");
    CHECK(custom.exit_code == 0);
}

TEST_CASE("cli: decohere emits a nonincreasing purity column") {
    CliFixture cli;
    const fs::path state = cli.dir / "plus.json";
    io::save_state(normalize(1.0, 1.0), state.string());
    const RunResult r = cli.run("decohere --overlap-re 0.9 --events 5 "
                                "--parity odd --state-file " +
                                state.string());
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "event_index,purity");
    int n = 0;
    double prev = 1.0;
    while (std::getline(lines, line)) {
        int idx = 0;
        double p = 0.0;
        REQUIRE(std::sscanf(line.c_str(), "%d,%lf", &idx, &p) == 2);
        ++n;
        CHECK(idx == n);
        CHECK(p <= prev + 1e-12);
        CHECK(std::abs(p - 0.5 * (1.0 + std::pow(0.81, n))) <= 1e-12);
        prev = p;
    }
    CHECK(n == 5);

    // overlap 1: constant purity 1
    const RunResult unit = cli.run("decohere --overlap-re 1 --events 3 "
                                   "--state-file " +
                                   state.string());
    CHECK(unit.exit_code == 0);
    CHECK(unit.out == "event_index,purity\n1,1\n2,1\n3,1\n");

    CHECK(cli.run("decohere --overlap-re 1.2 --events 3 --state-file " +
                  state.string())
              .exit_code == 2);
}

TEST_CASE("cli: seeded noisy read is byte-deterministic") {
    CliFixture cli;
    const fs::path s1 = cli.dir / "s1.json";
    const fs::path s2 = cli.dir / "s2.json";
    io::save_state(normalize(1.0, Complex(0.0, 1.0)), s1.string());
    io::save_state(normalize(1.0, Complex(0.0, 1.0)), s2.string());
    const fs::path r1 = cli.dir / "r1.json";
    const fs::path r2 = cli.dir / "r2.json";

    const std::string flags = " --noise-sigma 0.01 --seed 42 --grid-points 128 ";
    CHECK(cli.run("read" + flags + "--state-file " + s1.string() + " --report " +
                  r1.string())
              .exit_code == 0);
    CHECK(cli.run("read" + flags + "--state-file " + s2.string() + " --report " +
                  r2.string())
              .exit_code == 0);
    CHECK(slurp(r1) == slurp(r2));
    CHECK(slurp(s1) == slurp(s2));
}

TEST_CASE("cli: config file sets defaults and flags win") {
    CliFixture cli;
    const fs::path cfg = cli.dir / "qmem.cfg";
    {
        std::ofstream out(cfg);
        out << "g1=4\n"
            << "g3=4\n";
    }
    const RunResult from_cfg =
        cli.run("--config " + cfg.string() + " phases --k 1");
    CHECK(from_cfg.exit_code == 0);
    double plus = 0.0, minus = 0.0;
    CHECK(std::sscanf(from_cfg.out.c_str(), "%lf, %lf", &plus, &minus) == 2);
    CHECK(std::abs(plus + 2.0 * std::atan(2.0)) <= 1e-12);

    const RunResult overridden =
        cli.run("--config " + cfg.string() + " --g1 2 --g3 2 phases --k 1");
    CHECK(std::sscanf(overridden.out.c_str(), "%lf, %lf", &plus, &minus) == 2);
    CHECK(std::abs(plus + 1.5707963267948966) <= 1e-12);
}
