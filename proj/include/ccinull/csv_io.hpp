#pragma once

#include <ccinull/analysis.hpp>
#include <ccinull/montecarlo.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ccinull {

inline constexpr const char* kToolName = "ccinull";
inline constexpr const char* kToolVersion = "0.1.0";

// Header is part of the output contract; downstream plot scripts index these
// columns by position.
inline constexpr const char* kCsvHeader =
    "ebno_db,mode,modulation,feedback_bits,nr,trials,bit_errors,ber,"
    "ci95_low,ci95_high,analytic_ber";

struct EmptyResultError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SweepResult {
    SweepConfig config;
    std::vector<BerPoint> points;
    std::vector<double> analytic_ber;  // empty, or one value per point
};

// Ordered key/value pairs, written one `key=value` per line.
using RunManifest = std::vector<std::pair<std::string, std::string>>;

// Current wall-clock time as `YYYY-mm-ddTHH:MM:SSZ`, for manifest rows.
std::string utc_timestamp();

// Resolved run description: tool identity, RNG identity, seed, and every
// config field that affects the numbers. The timestamp lives here and not in
// the CSV, keeping CSV bytes reproducible.
RunManifest make_run_manifest(const SweepConfig& cfg, bool analytic_column);

void write_manifest(const RunManifest& manifest, const std::string& path);

// Writes the sweep CSV to `path` and its manifest to `path + ".manifest"`.
// Refuses empty results. ber fields use scientific notation with 6
// significant digits; ebno_db uses 2 fixed decimals.
void emit_csv(const SweepResult& result, const RunManifest& manifest,
              const std::string& path);

// Ready-to-run gnuplot script plotting ber (and the analytic column when
// present) from an emitted CSV.
void emit_gnuplot(const SweepResult& result, const std::string& csv_path,
                  const std::string& script_path);

// Distribution dump: header `sample`, one value per line, manifest alongside.
void emit_samples_csv(const std::vector<double>& samples,
                      const RunManifest& manifest, const std::string& path);

// Tabulated gain distribution: header `t,cdf,pdf`, manifest alongside.
void emit_grid_csv(const DistributionGrid& grid, const RunManifest& manifest,
                   const std::string& path);

}  // namespace ccinull
