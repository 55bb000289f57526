#include "cli/commands.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace cli = resonance::cli;

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

std::vector<std::string> split_args(const std::string& line) {
    std::vector<std::string> args;
    std::istringstream in(line);
    for (std::string w; in >> w;) args.push_back(w);
    return args;
}

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    Run r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

Run run(const std::string& line) { return run(split_args(line)); }

struct GoldenCase {
    std::string name;
    std::string args;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(' ');
    const auto e = s.find_last_not_of(' ');
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<GoldenCase> golden_cases() {
    std::ifstream in("tests/golden/cases.txt");
    REQUIRE(in);
    std::vector<GoldenCase> cases;
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#') continue;
        const auto bar = line.find('|');
        cases.push_back({trim(line.substr(0, bar)), trim(line.substr(bar + 1))});
    }
    return cases;
}

std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Drops the lines that legitimately differ between rank modes.
std::string without_mode_lines(const std::string& text) {
    std::istringstream in(text);
    std::string out;
    for (std::string line; std::getline(in, line);) {
        const std::string key = line.substr(std::min(line.find_first_not_of(' '), line.size()));
        if (key.rfind("command:", 0) == 0 || key.rfind("mode:", 0) == 0) continue;
        if (key.rfind("\"command\":", 0) == 0 || key.rfind("\"mode\":", 0) == 0) continue;
        out += line + "\n";
    }
    return out;
}

class ThreadsGuard {
public:
    explicit ThreadsGuard(const char* value) {
        if (const char* old = std::getenv("RESONANCE_THREADS")) saved_ = old;
        setenv("RESONANCE_THREADS", value, 1);
    }
    ~ThreadsGuard() {
        if (saved_.empty()) unsetenv("RESONANCE_THREADS");
        else setenv("RESONANCE_THREADS", saved_.c_str(), 1);
    }

private:
    std::string saved_;
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("golden outputs") {
    const bool update = std::getenv("RESONANCE_UPDATE_GOLDENS") != nullptr;
    for (const auto& c : golden_cases()) {
        CAPTURE(c.name);
        const Run r = run(c.args);
        CHECK(r.code == cli::kExitOk);
        const std::string path = "tests/golden/" + c.name + ".txt";
        if (update) std::ofstream(path, std::ios::binary) << r.out;
        CHECK(r.out == read(path));
    }
}

TEST_CASE("exact and modular modes agree on every golden") {
    for (const auto& c : golden_cases()) {
        if (c.args.rfind("identities", 0) == 0) continue;
        CAPTURE(c.name);
        const Run exact = run(c.args + " --exact");
        CHECK(exact.code == cli::kExitOk);
        CHECK(without_mode_lines(exact.out) == without_mode_lines(read("tests/golden/" + c.name + ".txt")));
    }
}

TEST_CASE("output does not depend on the worker count") {
    for (const char* args : {"hilbert --input data/surface_g3.json --qmax 5", "raag --graph data/p4_graph.json --theta",
                             "check --input data/c4.json --qmax 6 --json", "identities --gmax 12"}) {
        CAPTURE(args);
        std::string one, many;
        {
            ThreadsGuard g("1");
            one = run(std::string(args)).out;
        }
        {
            ThreadsGuard g("7");
            many = run(std::string(args)).out;
        }
        CHECK(one == many);
    }
}

TEST_CASE("json output parses") {
    const Run r = run("check --input data/ccml.json --qmax 2 --json");
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "resonance check --input data/ccml.json --qmax 2 --json");
    CHECK(doc["tables"]["components"][0]["separable"] == true);
    CHECK(doc["tables"]["components"][0]["isotropic"] == false);
    CHECK(doc["tables"]["components"][0]["dim_Kbar"] == 1);
}

TEST_CASE("timing goes to stderr only") {
    const Run plain = run("hilbert --input data/p4.json --qmax 2");
    const Run timed = run("hilbert --input data/p4.json --qmax 2 --timing");
    CHECK(timed.out == plain.out);
    CHECK(timed.err.rfind("timing:", 0) == 0);
}

TEST_CASE("parse errors exit 64") {
    CHECK(run("hilbert --input data/does_not_exist.json").code == cli::kExitParse);
    CHECK(run("bogus").code == cli::kExitParse);
    CHECK(run("").code == cli::kExitParse);
    CHECK(run("hilbert --input data/p4.json --exact --modular").code == cli::kExitParse);
    CHECK(run("check --input data/p4.json --component 1,0,0;0,1,0").code == cli::kExitParse);
    CHECK(run("check --input data/p4.json --component 1,0,0,0;2,0,0,0").code == cli::kExitParse);
    CHECK(run("check --input data/p4.json --component 1,1,1,1 --validate").code == cli::kExitParse);
    CHECK(run("chen --surface 2 --input data/p4.json").code == cli::kExitParse);
    const Run r = run("hilbert --input data/does_not_exist.json");
    CHECK(r.out.empty());
    CHECK(r.err.find("cannot open") != std::string::npos);
}

TEST_CASE("guards exit 65 unless forced") {
    CHECK(run("hilbert --input data/full_n4.json --qmax 9").code == cli::kExitGuard);
    CHECK(run("hilbert --input data/full_n4.json --qmax 9 --force").code == cli::kExitOk);
    CHECK(run("hilbert --input data/ccml.json --qmax 7").code == cli::kExitGuard);
    CHECK(run("raag --graph data/k5_graph.json --qmax 7").code == cli::kExitGuard);
    CHECK_NOTHROW(cli::cli_degree_guard(4, 8, false));
    CHECK_NOTHROW(cli::cli_degree_guard(6, 6, false));
}

TEST_CASE("validated components pass") {
    CHECK(run("check --input data/p4.json --validate").code == cli::kExitOk);
    CHECK(run("check --input data/c4.json --component 1,0,1,0 --validate").code == cli::kExitOk);
}

TEST_CASE("help exits 0") {
    CHECK(run("--help").code == cli::kExitOk);
    CHECK(run("hilbert --help").code == cli::kExitOk);
}

}
