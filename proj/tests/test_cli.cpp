#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace {

namespace fs = std::filesystem;

struct Result {
    int status = -1;
    std::string out;
};

Result cli(const std::string& args, const std::string& env = {}) {
    const std::string cmd = env + " " FEASIKIT_CLI " " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int raw = ::pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

// Error column of a trace CSV as doubles (they underflow to 0 below 1e-308).
std::vector<double> errors_of(const std::string& csv) {
    std::vector<double> out;
    bool data = false;
    for (const auto& line : lines(csv)) {
        if (line == "iter,error,step_seconds") {
            data = true;
            continue;
        }
        if (!data) continue;
        const auto a = line.find(',');
        const auto b = line.find(',', a + 1);
        out.push_back(std::strtod(line.substr(a + 1, b - a - 1).c_str(), nullptr));
    }
    return out;
}

// Drops the wall-clock column, which legitimately differs between runs.
std::string mask_timing(const std::string& csv) {
    std::string out;
    for (const auto& line : lines(csv)) {
        const auto last = line.rfind(',');
        out += (line.starts_with("#") || last == std::string::npos ? line : line.substr(0, last)) + "\n";
    }
    return out;
}

std::string meta(const std::string& csv, const std::string& key) {
    for (const auto& line : lines(csv)) {
        if (line.starts_with("# " + key + ": ")) return line.substr(key.size() + 4);
    }
    return {};
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / ("feasikit_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("run: dr on circle/line decays linearly and hits the budget") {
    const Result r = cli("run --problem circle-line --method dr --precision 120");
    CHECK(r.status == 3);
    CHECK(meta(r.out, "terminated_by") == "max_iter");
    CHECK(meta(r.out, "reference") == "known solution");
    const auto e = errors_of(r.out);
    REQUIRE(e.size() == 201);
    for (std::size_t k = 150; k < e.size(); ++k) CHECK(e[k] / e[k - 1] == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("run: lt on circle/line decays quadratically") {
    const Result r = cli("run --problem circle-line --method lt");
    CHECK(r.status == 0);
    CHECK(meta(r.out, "terminated_by") == "tolerance");
    const auto e = errors_of(r.out);
    REQUIRE(e.size() >= 5);
    CHECK(e.size() <= 15);
    // Digits double from step to step once in the quadratic regime.
    const std::size_t k = e.size() - 3;
    CHECK(std::log10(e[k + 1]) / std::log10(e[k]) == doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("run: lt solves two lines in one step") {
    const Result r = cli("run --problem graph:linear:1 --method lt");
    CHECK(r.status == 0);
    CHECK(meta(r.out, "iterations") == "1");
    CHECK(meta(r.out, "terminated_by") == "exact_zero");
    CHECK(errors_of(r.out).back() < 1e-100);
}

TEST_CASE("run: matrix problems record the reference policy and dimension") {
    const Result r = cli("run --problem psdb-s1 --method plt --dim 4 --seed 3");
    CHECK(r.status == 0);
    CHECK(meta(r.out, "dim") == "4");
    CHECK(meta(r.out, "reference").starts_with("fixed point of plt"));
    for (const char* key : {"method", "problem", "precision", "seed", "tol"}) CHECK_FALSE(meta(r.out, key).empty());
}

TEST_CASE("run: identical configs give identical CSV apart from wall time") {
    const std::string args = "run --problem psdb-s11 --method dr --seed 9 --max-iter 50";
    const Result a = cli(args);
    const Result b = cli(args);
    CHECK(mask_timing(a.out) == mask_timing(b.out));
    const Result c = cli("run --problem circle-line --method lt --start 0.9,0.6");
    const Result d = cli("run --problem circle-line --method lt --start 0.9,0.6");
    CHECK(mask_timing(c.out) == mask_timing(d.out));
}

TEST_CASE("run: precision comes from the flag or FEASIKIT_PRECISION") {
    CHECK(meta(cli("run --problem graph:linear:2 --method lt", "FEASIKIT_PRECISION=50").out, "precision") == "50");
    CHECK(meta(cli("run --problem graph:linear:2 --method lt --precision 70", "FEASIKIT_PRECISION=50").out,
               "precision") == "70");
    CHECK(cli("run --problem graph:linear:2 --method lt --precision 10").status == 2);
}

TEST_CASE("run: bad input is a usage error") {
    CHECK(cli("run --problem nowhere --method dr").status == 2);
    CHECK(cli("run --problem circle-line --method crm").status == 2);
    CHECK(cli("run --method dr").status == 2);
    CHECK(cli("frobnicate").status == 2);
    CHECK(cli("run --problem psd-s1 --start 1,2").status == 2);
}

TEST_CASE("bench: writes iteration and time profiles") {
    const fs::path dir = scratch_dir();
    const fs::path out = dir / "profile.csv";
    const Result r = cli("bench --problem circle-line --methods dr,lt --trials 2 --max-iter 500 --out " + out.string() +
                         " --orders " + (dir / "orders.jsonl").string());
    CHECK(r.status == 0);
    const std::string iters = slurp(out);
    const std::string times = slurp(dir / "profile.time.csv");
    CHECK(meta(iters, "metric") == "iterations");
    CHECK(meta(times, "metric") == "seconds");
    for (const auto& csv : {iters, times}) {
        auto rows = lines(csv);
        std::vector<std::string> data;
        for (const auto& l : rows) {
            if (!l.starts_with("#")) data.push_back(l);
        }
        REQUIRE(data.size() >= 2);
        CHECK(data.front() == "tau,rho_dr,rho_lt");
        double prev_dr = 0;
        double prev_lt = 0;
        for (std::size_t i = 1; i < data.size(); ++i) {
            double tau = 0;
            double dr = 0;
            double lt = 0;
            REQUIRE(std::sscanf(data[i].c_str(), "%lf,%lf,%lf", &tau, &dr, &lt) == 3);
            CHECK(dr >= prev_dr);
            CHECK(lt >= prev_lt);
            CHECK(dr <= 1.0);
            CHECK(lt <= 1.0);
            prev_dr = dr;
            prev_lt = lt;
        }
    }
    CHECK(lines(slurp(dir / "orders.jsonl")).size() == 4);
    fs::remove_all(dir);
}

TEST_CASE("bench: iteration profiles are byte-identical across runs and job counts") {
    const fs::path dir = scratch_dir();
    const std::string base = "bench --problem psdb-s1 --methods dr,lt,plt --trials 3 --seed 5 --max-iter 80 --out ";
    CHECK(cli(base + (dir / "a.csv").string() + " --jobs 1").status == 0);
    CHECK(cli(base + (dir / "b.csv").string() + " --jobs 3").status == 0);
    CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
    fs::remove_all(dir);
}

TEST_CASE("bench: needs two methods") {
    CHECK(cli("bench --problem circle-line --methods dr --trials 4").status == 2);
    CHECK(cli("bench --problem circle-line --methods dr,lt --trials 1").status == 2);
}

TEST_CASE("probe: ratio on quad passes") {
    const Result r = cli("probe ratio quad");
    CHECK(r.status == 0);
    CHECK(meta(r.out, "verdict") == "pass");
    CHECK(meta(r.out, "bounded_below") == "true");
    CHECK(std::strtod(meta(r.out, "m_est").c_str(), nullptr) > 0.0);
}

TEST_CASE("probe: zeta on a line is identically zero") {
    const Result r = cli("probe zeta linear:2 --radius-count 4 --angles 6");
    CHECK(r.status == 0);
    bool data = false;
    int rows = 0;
    for (const auto& line : lines(r.out)) {
        if (line.starts_with("R,")) {
            data = true;
            continue;
        }
        if (!data) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
        REQUIRE(f.size() == 6);
        CHECK(std::abs(std::strtod(f[2].c_str(), nullptr)) < 1e-90);
        CHECK(f[3] == "0");
        ++rows;
    }
    CHECK(rows == 24);
}

TEST_CASE("probe: denominator limit on quad is a = 1") {
    const Result r = cli("probe denominator quad --radius-count 3 --angles 4");
    CHECK(r.status == 0);
    int denominators = 0;
    for (const auto& line : lines(r.out)) {
        if (line.ends_with(",denominator")) {
            std::vector<std::string> f;
            std::stringstream ss(line);
            for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
            CHECK(f[3] == "1");
            ++denominators;
        }
    }
    CHECK(denominators == 12);
}

TEST_CASE("probe: unknown ids are usage errors") {
    CHECK(cli("probe nope quad").status == 2);
    CHECK(cli("probe zeta quintic").status == 2);
}
