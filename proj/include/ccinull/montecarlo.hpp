#pragma once

#include <ccinull/constellation.hpp>

#include <cstdint>
#include <string_view>
#include <vector>

namespace ccinull {

enum class Mode {
    proposed_ideal,      // exact phase feedback, interference nulled
    proposed_quantized,  // codebook phase feedback
    joint_ml,            // unprecoded exhaustive pair search
    single_user_naive,   // unprecoded, slices as if the interferer were absent
    proposed_mrc,        // multi-antenna receiver with combining phase rule
};

// Canonical spelling used on the command line and in CSV output.
const char* mode_name(Mode m);
Mode mode_from_name(std::string_view name);  // throws on unknown spelling

struct SweepConfig {
    Mode mode = Mode::proposed_ideal;
    Constellation constellation = make_pam(2);
    std::vector<double> ebno_db;
    unsigned feedback_bits = 0;  // proposed_quantized: codebook size 2^bits
    unsigned nr = 1;             // receive antennas, proposed_mrc only
    double g = 1.0;              // mean square link gain
    double es = 1.0;             // symbol energy
    std::uint64_t max_trials = 100000000;
    std::uint64_t min_errors = 200;  // 0 = no target, run max_trials exactly
    std::uint64_t seed = 1;
    unsigned threads = 1;
    bool pin_equal_links = false;  // second link copies the first, per trial
    bool track_user2 = false;
    bool drop_interferer = false;  // reference runs: second user stays silent
};

struct BerPoint {
    double ebno_db = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t bit_errors_user2 = 0;
    double ber = 0.0;
    double ci95_low = 0.0;
    double ci95_high = 1.0;
    bool low_confidence = false;  // stopped by max_trials before min_errors
};

// One Eb/No point. Trial t always maps to the same random stream, so the
// outcome is a pure function of (config, ebno_db) regardless of thread count.
BerPoint estimate_ber(const SweepConfig& cfg, double ebno_db);

// Maps estimate_ber over cfg.ebno_db.
std::vector<BerPoint> sweep(const SweepConfig& cfg);

enum class DistKind {
    sin_eps2,  // residual projection produced by the full feedback chain
    gain_z,    // direct draw from the uniform-residual gain model
};

// Draws `count` samples of the requested quantity. feedback_levels is the
// codebook size B (not a bit count).
std::vector<double> sample_distribution(DistKind kind, unsigned feedback_levels,
                                        double g, std::uint64_t count,
                                        std::uint64_t seed);

}  // namespace ccinull
