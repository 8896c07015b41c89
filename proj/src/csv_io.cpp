#include <ccinull/csv_io.hpp>

#include <cinttypes>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

namespace ccinull {

namespace {

std::string sci6(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.5e", x);
    return buf;
}

std::string fixed2(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    return out;
}

void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[40];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

RunManifest make_run_manifest(const SweepConfig& cfg, bool analytic_column) {
    RunManifest m;
    m.emplace_back("tool", kToolName);
    m.emplace_back("version", kToolVersion);
    m.emplace_back("rng", "philox4x32-10");
    m.emplace_back("seed", std::to_string(cfg.seed));
    m.emplace_back("mode", mode_name(cfg.mode));
    m.emplace_back("modulation", cfg.constellation.name);
    if (cfg.mode == Mode::proposed_quantized)
        m.emplace_back("feedback_bits", std::to_string(cfg.feedback_bits));
    m.emplace_back("nr", std::to_string(cfg.nr));
    m.emplace_back("g", num(cfg.g));
    m.emplace_back("es", num(cfg.es));
    std::string ebno;
    for (std::size_t i = 0; i < cfg.ebno_db.size(); ++i) {
        if (i) ebno += ',';
        ebno += num(cfg.ebno_db[i]);
    }
    m.emplace_back("ebno_db", ebno);
    m.emplace_back("min_errors", std::to_string(cfg.min_errors));
    m.emplace_back("max_trials", std::to_string(cfg.max_trials));
    m.emplace_back("threads", std::to_string(cfg.threads));
    m.emplace_back("pin_equal_links", cfg.pin_equal_links ? "1" : "0");
    m.emplace_back("track_user2", cfg.track_user2 ? "1" : "0");
    if (cfg.drop_interferer) m.emplace_back("drop_interferer", "1");
    m.emplace_back("analytic", analytic_column ? "1" : "0");
    m.emplace_back("created_utc", utc_timestamp());
    return m;
}

void write_manifest(const RunManifest& manifest, const std::string& path) {
    std::ofstream out = open_for_write(path);
    for (const auto& [k, v] : manifest) out << k << '=' << v << '\n';
    finish(out, path);
}

void emit_csv(const SweepResult& result, const RunManifest& manifest,
              const std::string& path) {
    if (result.points.empty())
        throw EmptyResultError("emit_csv: no points to write");
    if (!result.analytic_ber.empty() &&
        result.analytic_ber.size() != result.points.size())
        throw std::invalid_argument(
            "emit_csv: analytic column size does not match points");

    const SweepConfig& cfg = result.config;
    const std::string feedback =
        cfg.mode == Mode::proposed_quantized
            ? std::to_string(cfg.feedback_bits)
            : std::string();

    std::ofstream out = open_for_write(path);
    out << kCsvHeader << '\n';
    for (std::size_t i = 0; i < result.points.size(); ++i) {
        const BerPoint& p = result.points[i];
        out << fixed2(p.ebno_db) << ',' << mode_name(cfg.mode) << ','
            << cfg.constellation.name << ',' << feedback << ',' << cfg.nr
            << ',' << p.trials << ',' << p.bit_errors << ',' << sci6(p.ber)
            << ',' << sci6(p.ci95_low) << ',' << sci6(p.ci95_high) << ',';
        if (!result.analytic_ber.empty()) out << sci6(result.analytic_ber[i]);
        out << '\n';
    }
    finish(out, path);
    write_manifest(manifest, path + ".manifest");
}

void emit_gnuplot(const SweepResult& result, const std::string& csv_path,
                  const std::string& script_path) {
    std::ofstream out = open_for_write(script_path);
    const std::string title = std::string(mode_name(result.config.mode)) +
                              " " + result.config.constellation.name;
    out << "set datafile separator ','\n"
        << "set logscale y\n"
        << "set grid\n"
        << "set xlabel 'Eb/No (dB)'\n"
        << "set ylabel 'BER'\n"
        << "set key top right\n"
        << "set terminal pngcairo size 900,600\n"
        << "set output '" << csv_path << ".png'\n"
        << "plot '" << csv_path << "' skip 1 using 1:8 with linespoints"
        << " title '" << title << "'";
    if (!result.analytic_ber.empty())
        out << ", \\\n     '" << csv_path
            << "' skip 1 using 1:11 with lines title 'analytic'";
    out << '\n';
    finish(out, script_path);
}

void emit_samples_csv(const std::vector<double>& samples,
                      const RunManifest& manifest, const std::string& path) {
    if (samples.empty())
        throw EmptyResultError("emit_samples_csv: no samples to write");
    std::ofstream out = open_for_write(path);
    out << "sample\n";
    char buf[48];
    for (double s : samples) {
        std::snprintf(buf, sizeof buf, "%.9e\n", s);
        out << buf;
    }
    finish(out, path);
    write_manifest(manifest, path + ".manifest");
}

void emit_grid_csv(const DistributionGrid& grid, const RunManifest& manifest,
                   const std::string& path) {
    if (grid.t.empty())
        throw EmptyResultError("emit_grid_csv: empty grid");
    std::ofstream out = open_for_write(path);
    out << "t,cdf,pdf\n";
    char buf[96];
    for (std::size_t i = 0; i < grid.t.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.9e,%.9e,%.9e\n", grid.t[i],
                      grid.cdf[i], grid.pdf[i]);
        out << buf;
    }
    finish(out, path);
    write_manifest(manifest, path + ".manifest");
}

}  // namespace ccinull
