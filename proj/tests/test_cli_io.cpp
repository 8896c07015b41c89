#include <doctest.h>

#include <ccinull/cli.hpp>
#include <ccinull/csv_io.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace ccinull;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    const fs::path p = fs::temp_directory_path() / "ccinull_test_io";
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("ccinull");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

SweepResult tiny_result() {
    SweepResult r;
    r.config.mode = Mode::proposed_quantized;
    r.config.constellation = make_pam(2);
    r.config.feedback_bits = 4;
    r.config.ebno_db = {0.0, 2.5};
    BerPoint p;
    p.ebno_db = 0.0;
    p.trials = 1000;
    p.bit_errors = 123;
    p.ber = 0.123;
    p.ci95_low = 0.102;
    p.ci95_high = 0.143;
    r.points.push_back(p);
    p.ebno_db = 2.5;
    p.bit_errors = 70;
    p.ber = 0.07;
    r.points.push_back(p);
    return r;
}

}  // namespace

TEST_CASE("csv header and field formatting") {
    const fs::path out = scratch_dir() / "fmt.csv";
    SweepResult r = tiny_result();
    r.analytic_ber = {0.1464466094067262, 0.1052};
    emit_csv(r, make_run_manifest(r.config, true), out.string());

    const auto lines = split_lines(slurp(out));
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] ==
          "ebno_db,mode,modulation,feedback_bits,nr,trials,bit_errors,ber,"
          "ci95_low,ci95_high,analytic_ber");
    CHECK(lines[1] ==
          "0.00,proposed-quantized,bpsk,4,1,1000,123,1.23000e-01,"
          "1.02000e-01,1.43000e-01,1.46447e-01");
    CHECK(lines[2].substr(0, 5) == "2.50,");
}

TEST_CASE("analytic column stays empty unless requested") {
    const fs::path out = scratch_dir() / "noanalytic.csv";
    const SweepResult r = tiny_result();
    emit_csv(r, make_run_manifest(r.config, false), out.string());
    const auto lines = split_lines(slurp(out));
    REQUIRE(lines.size() == 3);
    CHECK(lines[1].back() == ',');
}

TEST_CASE("feedback_bits column is empty for modes without feedback") {
    const fs::path out = scratch_dir() / "nofb.csv";
    SweepResult r = tiny_result();
    r.config.mode = Mode::joint_ml;
    r.config.feedback_bits = 0;
    emit_csv(r, make_run_manifest(r.config, false), out.string());
    const auto lines = split_lines(slurp(out));
    CHECK(lines[1].find("0.00,joint-ml,bpsk,,1,") == 0);
}

TEST_CASE("manifest is written alongside with the run identity") {
    const fs::path out = scratch_dir() / "withmanifest.csv";
    const SweepResult r = tiny_result();
    emit_csv(r, make_run_manifest(r.config, false), out.string());
    const std::string m = slurp(out.string() + ".manifest");
    CHECK(m.find("tool=ccinull\n") != std::string::npos);
    CHECK(m.find("rng=philox4x32-10\n") != std::string::npos);
    CHECK(m.find("mode=proposed-quantized\n") != std::string::npos);
    CHECK(m.find("feedback_bits=4\n") != std::string::npos);
    CHECK(m.find("seed=") != std::string::npos);
    CHECK(m.find("created_utc=") != std::string::npos);
}

TEST_CASE("empty results are refused") {
    SweepResult r;
    r.config.ebno_db = {};
    CHECK_THROWS_AS(
        emit_csv(r, make_run_manifest(r.config, false), "/tmp/never.csv"),
        EmptyResultError);
    CHECK_THROWS_AS(emit_samples_csv({}, {}, "/tmp/never.csv"),
                    EmptyResultError);
}

TEST_CASE("unwritable path raises an I/O error") {
    const SweepResult r = tiny_result();
    CHECK_THROWS_AS(emit_csv(r, make_run_manifest(r.config, false),
                             "/nonexistent-dir/x/y.csv"),
                    IoError);
}

TEST_CASE("cli: sweep runs, output is byte-stable under reruns") {
    const fs::path out = scratch_dir() / "sweep.csv";
    const std::vector<std::string> args = {
        "--mode", "proposed-ideal", "--mod",        "bpsk",
        "--ebno", "0:4:2",          "--trials",     "20000",
        "--min-errors", "100",      "--seed",       "5",
        "--out",  out.string(),     "--analytic",   "--gnuplot"};
    REQUIRE(cli(args) == 0);
    const std::string first = slurp(out);
    const auto lines = split_lines(first);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == kCsvHeader);
    CHECK(lines[1].substr(0, 20) == "0.00,proposed-ideal,");
    CHECK(slurp(out.string() + ".gp").find("set logscale y") !=
          std::string::npos);

    REQUIRE(cli(args) == 0);
    CHECK(slurp(out) == first);
}

TEST_CASE("cli: distribution dump and grid export") {
    const fs::path dist = scratch_dir() / "dist.csv";
    REQUIRE(cli({"--dist", "sin-eps2", "--feedback-bits", "3", "--count",
                 "500", "--seed", "2", "--out", dist.string()}) == 0);
    const auto dlines = split_lines(slurp(dist));
    REQUIRE(dlines.size() == 501);
    CHECK(dlines[0] == "sample");

    const fs::path grid = scratch_dir() / "grid.csv";
    REQUIRE(cli({"--grid-out", grid.string(), "--feedback-bits", "4",
                 "--grid-step", "0.125"}) == 0);
    const auto glines = split_lines(slurp(grid));
    CHECK(glines[0] == "t,cdf,pdf");
    CHECK(glines.size() > 50);
}

TEST_CASE("cli: usage errors exit with 2") {
    // quantized mode without a codebook size
    CHECK(cli({"--mode", "proposed-quantized", "--ebno", "0:10:5"}) == 2);
    // complex constellation with a real-statistic mode
    CHECK(cli({"--mode", "proposed-ideal", "--mod", "4qam", "--ebno", "0"}) ==
          2);
    // unknown mode, unknown flag, missing sweep arguments
    CHECK(cli({"--mode", "bogus", "--ebno", "0"}) == 2);
    CHECK(cli({"--frobnicate"}) == 2);
    CHECK(cli({"--mode", "proposed-ideal"}) == 2);
    // stopping target below the supported floor
    CHECK(cli({"--mode", "proposed-ideal", "--ebno", "0", "--min-errors",
               "99"}) == 2);
    // malformed range
    CHECK(cli({"--mode", "proposed-ideal", "--ebno", "10:0:2"}) == 2);
    // extra antennas outside the combining mode
    CHECK(cli({"--mode", "joint-ml", "--nr", "2", "--ebno", "0"}) == 2);
    // analytic column is undefined for the joint search
    CHECK(cli({"--mode", "joint-ml", "--ebno", "0", "--trials", "20000",
               "--min-errors", "100", "--analytic"}) == 2);
}

TEST_CASE("cli: unwritable output exits with 4") {
    CHECK(cli({"--mode", "proposed-ideal", "--ebno", "0", "--trials",
               "20000", "--min-errors", "100", "--out",
               "/nonexistent-dir/x/y.csv"}) == 4);
}
