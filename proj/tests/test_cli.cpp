// End-to-end checks of the command-line driver through run_cli: output
// contract, exit codes, file emission, and byte-level determinism.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fringelab/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = fringelab::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

// value printed after "key=" in the output block, or "" when absent
std::string printed(const std::string& out, const std::string& key) {
    const std::string label = key + "=";
    for (std::size_t pos = 0; pos < out.size();) {
        std::size_t eol = out.find('\n', pos);
        if (eol == std::string::npos) eol = out.size();
        const std::string line = out.substr(pos, eol - pos);
        if (line.rfind(label, 0) == 0) return line.substr(label.size());
        pos = eol + 1;
    }
    return {};
}

// scratch file that cleans up after itself
struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& stem) {
        path = std::filesystem::temp_directory_path() /
               (stem + "-" + std::to_string(::getpid()) + ".csv");
    }
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }
    std::string str() const { return path.string(); }
    std::string slurp() const {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }
};

} // namespace

TEST_CASE("simulate-optical prints the headline numbers") {
    const CliResult r = run({"simulate-optical", "--model", "finite-avg"});
    CHECK(r.code == 0);
    CHECK(printed(r.out, "model") == "optical-finite-avg");
    CHECK(printed(r.out, "visibility") == "0.760995");
    CHECK(printed(r.out, "fringe_spacing_um") == "71.9529");

    const CliResult delta = run({"simulate-optical", "--model", "delta"});
    CHECK(printed(delta.out, "visibility") == "0.88115");
    CHECK(printed(delta.out, "fringe_spacing_um") == "73.0404");
}

TEST_CASE("simulate-quantum at the operating point") {
    const CliResult r = run({"simulate-quantum", "--mode", "gaussian", "--lambda", "0.63"});
    CHECK(r.code == 0);
    CHECK(printed(r.out, "visibility") == "0.612771");
    CHECK(printed(r.out, "lambda") == "0.63");
    CHECK(printed(r.out, "t_flight_s") == "0.0233188");

    // same damping requested through the coherence time (tau_c for 0.63)
    const CliResult via_tau = run(
        {"simulate-quantum", "--mode", "gaussian", "--tau-c", "0.022492563519662064"});
    CHECK(via_tau.code == 0);
    CHECK(printed(via_tau.out, "visibility") == "0.612771");
}

TEST_CASE("simulate-quantum writes the profile file") {
    TempFile tmp("cli-quantum");
    const CliResult r = run({"simulate-quantum", "--lambda", "0.63", "--out", tmp.str()});
    CHECK(r.code == 0);
    const std::string text = tmp.slurp();
    CHECK(contains(text, "x_um,intensity"));
    CHECK(contains(text, "# quantum-gaussian"));
    // 4001 grid rows plus headers
    CHECK(std::count(text.begin(), text.end(), '\n') >= 4001);
}

TEST_CASE("visibility subcommand reads back emitted profiles") {
    TempFile tmp("cli-vis");
    REQUIRE(run({"simulate-optical", "--model", "delta-avg", "--out", tmp.str()}).code == 0);
    const CliResult r = run({"visibility", "--data", tmp.str()});
    CHECK(r.code == 0);
    CHECK(printed(r.out, "visibility") == "0.769948");
    CHECK(printed(r.out, "x_max_um") == "0");
}

TEST_CASE("fit recovers the planted coherence degree through the file interface") {
    TempFile tmp("cli-fit");
    REQUIRE(run({"simulate-quantum", "--lambda", "0.63", "--out", tmp.str()}).code == 0);
    const CliResult r = run({"fit", "--data", tmp.str()});
    CHECK(r.code == 0);
    CHECK(printed(r.out, "lambda_hat") == "0.629999");
    CHECK(printed(r.out, "at_boundary") == "0");
    CHECK(printed(r.out, "tau_c_s") == "0.0224925");
}

TEST_CASE("sweep prints a monotone five-row table") {
    const CliResult r = run({"sweep", "--lambda", "0:1:0.25"});
    CHECK(r.code == 0);

    std::istringstream rows(r.out);
    std::string line;
    std::getline(rows, line);
    CHECK(line == "lambda,visibility");
    double prev = -1.0;
    int n_rows = 0;
    while (std::getline(rows, line)) {
        const std::size_t comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        const double vis = std::stod(line.substr(comma + 1));
        CHECK(vis > prev);
        prev = vis;
        ++n_rows;
    }
    CHECK(n_rows == 5);
}

TEST_CASE("compare reports shape metrics between two emitted profiles") {
    TempFile a("cli-cmp-a"), b("cli-cmp-b");
    REQUIRE(run({"simulate-optical", "--model", "finite-avg", "--out", a.str()}).code == 0);
    REQUIRE(run({"simulate-quantum", "--lambda", "1", "--out", b.str()}).code == 0);
    const CliResult r = run({"compare", a.str(), b.str()});
    CHECK(r.code == 0);
    CHECK(!printed(r.out, "rms").empty());
    CHECK(!printed(r.out, "max_abs").empty());
    CHECK(!printed(r.out, "visibility_delta").empty());
}

TEST_CASE("config file and grid flag are honored") {
    TempFile cfg("cli-config");
    {
        std::ofstream out(cfg.path);
        out << "w = 40um\n"; // halve the source coherence
    }
    const CliResult narrow = run({"simulate-optical", "--model", "delta",
                                  "--config", cfg.str()});
    const CliResult standard = run({"simulate-optical", "--model", "delta"});
    CHECK(narrow.code == 0);
    // wider entrance slit -> lower visibility
    CHECK(std::stod(printed(narrow.out, "visibility")) <
          std::stod(printed(standard.out, "visibility")));

    const CliResult gridded =
        run({"simulate-optical", "--model", "delta", "--grid", "-200:200:1601"});
    CHECK(gridded.code == 0);
    CHECK(printed(gridded.out, "visibility") == "0.88115");
}

TEST_CASE("exit codes") {
    SUBCASE("usage and validation problems exit 2") {
        CHECK(run({"no-such-command"}).code == 2);
        CHECK(run({"simulate-optical", "--model", "cubic"}).code == 2);
        CHECK(run({"simulate-quantum", "--lambda", "1.5"}).code == 2);
        CHECK(run({"simulate-quantum", "--lambda", "0.5", "--tau-c", "0.1"}).code == 2);
        CHECK(run({"visibility", "--data", "/no/such/file.csv"}).code == 2);
        CHECK(run({"simulate-optical", "--grid", "100:-100:4001"}).code == 2);
        CHECK(run({"sweep", "--lambda", "0:2:0.5"}).code == 2);
        CHECK(run({"visibility"}).code == 2); // --data is required
    }
    SUBCASE("validation failure messages go to standard error") {
        const CliResult r = run({"simulate-optical", "--model", "cubic"});
        CHECK(r.out.empty());
        CHECK(!r.err.empty());
    }
    SUBCASE("numerical failure exits 3") {
        TempFile tmp("cli-flat");
        REQUIRE(run({"simulate-quantum", "--lambda", "0", "--out", tmp.str()}).code == 0);
        const CliResult r = run({"visibility", "--data", tmp.str()});
        CHECK(r.code == 3);
        CHECK(contains(r.err, "numerical failure"));
    }
    SUBCASE("help exits 0") {
        const CliResult r = run({"--help"});
        CHECK(r.code == 0);
        CHECK(contains(r.out, "simulate-optical"));
    }
}

TEST_CASE("byte-identical determinism, independent of the thread budget") {
    TempFile a("cli-det-a"), b("cli-det-b");
    const CliResult r1 = run({"simulate-quantum", "--lambda", "0.63", "--out", a.str()});
    const std::string text1 = a.slurp();

    ::setenv("FRINGELAB_THREADS", "1", 1);
    const CliResult r2 = run({"simulate-quantum", "--lambda", "0.63", "--out", b.str()});
    ::unsetenv("FRINGELAB_THREADS");

    CHECK(r1.out == r2.out);
    CHECK(text1 == b.slurp());
    CHECK(!text1.empty());
}
