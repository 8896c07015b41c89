#include <ccinull/cli.hpp>

#include <ccinull/analysis.hpp>
#include <ccinull/csv_io.hpp>
#include <ccinull/montecarlo.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccinull {

namespace {

double parse_double(const std::string& s) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: " + s);
    }
}

std::vector<double> parse_ebno(const std::string& spec) {
    std::vector<double> out;
    if (spec.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= spec.size(); ++i) {
            if (i == spec.size() || spec[i] == ':') {
                parts.push_back(spec.substr(start, i - start));
                start = i + 1;
            }
        }
        if (parts.size() != 3)
            throw std::invalid_argument("--ebno range must be A:B:STEP");
        const double a = parse_double(parts[0]);
        const double b = parse_double(parts[1]);
        const double step = parse_double(parts[2]);
        if (!(step > 0.0) || b < a)
            throw std::invalid_argument(
                "--ebno range needs STEP > 0 and B >= A");
        const double span = (b - a) / step;
        if (span > 10000.0)
            throw std::invalid_argument("--ebno range has too many points");
        const auto n = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(a + static_cast<double>(i) * step);
    } else {
        std::size_t start = 0;
        for (std::size_t i = 0; i <= spec.size(); ++i) {
            if (i == spec.size() || spec[i] == ',') {
                const std::string item = spec.substr(start, i - start);
                if (!item.empty()) out.push_back(parse_double(item));
                start = i + 1;
            }
        }
    }
    if (out.empty())
        throw std::invalid_argument("--ebno produced no points");
    return out;
}

Constellation constellation_from_name(const std::string& s) {
    if (s == "bpsk") return make_pam(2);
    if (s == "4pam") return make_pam(4);
    if (s == "4qam") return make_qam(4);
    throw std::invalid_argument("unknown --mod: " + s);
}

struct Options {
    std::string mode;
    std::string mod = "bpsk";
    std::string ebno;
    std::string out;
    std::string dist;
    std::string grid_out;
    unsigned feedback_bits = 0;
    unsigned nr = 1;
    unsigned threads = 1;
    double g = 1.0;
    double grid_step = 0.0;
    std::uint64_t trials = 100000000;
    std::uint64_t min_errors = 200;
    std::uint64_t seed = 1;
    std::uint64_t count = 1000000;
    bool analytic = false;
    bool gnuplot = false;
    bool pin_equal_links = false;
    bool track_user2 = false;
};

RunManifest tool_preamble() {
    RunManifest m;
    m.emplace_back("tool", kToolName);
    m.emplace_back("version", kToolVersion);
    m.emplace_back("rng", "philox4x32-10");
    return m;
}

int run_dist(const Options& opt) {
    if (opt.feedback_bits < 1 || opt.feedback_bits > 20)
        throw std::invalid_argument("--dist needs --feedback-bits in [1, 20]");
    DistKind kind;
    if (opt.dist == "sin-eps2") {
        kind = DistKind::sin_eps2;
    } else if (opt.dist == "z") {
        kind = DistKind::gain_z;
    } else {
        throw std::invalid_argument("--dist must be sin-eps2 or z");
    }
    if (opt.count == 0)
        throw std::invalid_argument("--count must be positive");

    const unsigned levels = 1u << opt.feedback_bits;
    const auto samples =
        sample_distribution(kind, levels, opt.g, opt.count, opt.seed);

    RunManifest m = tool_preamble();
    m.emplace_back("kind", "distribution");
    m.emplace_back("dist", opt.dist);
    m.emplace_back("feedback_bits", std::to_string(opt.feedback_bits));
    m.emplace_back("g", std::to_string(opt.g));
    m.emplace_back("count", std::to_string(opt.count));
    m.emplace_back("seed", std::to_string(opt.seed));
    m.emplace_back("created_utc", utc_timestamp());

    const std::string path = opt.out.empty() ? "dist.csv" : opt.out;
    emit_samples_csv(samples, m, path);
    std::printf("wrote %s (%llu samples)\n", path.c_str(),
                static_cast<unsigned long long>(samples.size()));
    return 0;
}

int run_grid(const Options& opt) {
    if (opt.feedback_bits < 1 || opt.feedback_bits > 20)
        throw std::invalid_argument(
            "--grid-out needs --feedback-bits in [1, 20]");
    const unsigned levels = 1u << opt.feedback_bits;
    const double step =
        opt.grid_step > 0.0 ? opt.grid_step : std::sqrt(opt.g) / 16.0;
    const DistributionGrid grid = build_gain_grid(opt.g, levels, step);

    RunManifest m = tool_preamble();
    m.emplace_back("kind", "gain-grid");
    m.emplace_back("feedback_bits", std::to_string(opt.feedback_bits));
    m.emplace_back("g", std::to_string(opt.g));
    m.emplace_back("step", std::to_string(step));
    m.emplace_back("norm", std::to_string(grid.norm));
    m.emplace_back("created_utc", utc_timestamp());

    emit_grid_csv(grid, m, opt.grid_out);
    std::printf("wrote %s (%zu nodes, mass %.6f)\n", opt.grid_out.c_str(),
                grid.t.size(), grid.norm);
    return 0;
}

int run_sweep(const Options& opt) {
    if (opt.mode.empty())
        throw std::invalid_argument("missing --mode");
    if (opt.ebno.empty())
        throw std::invalid_argument("missing --ebno");
    if (opt.min_errors < 100)
        throw std::invalid_argument("--min-errors must be at least 100");

    SweepConfig cfg;
    cfg.mode = mode_from_name(opt.mode);
    cfg.constellation = constellation_from_name(opt.mod);
    cfg.ebno_db = parse_ebno(opt.ebno);
    cfg.feedback_bits = opt.feedback_bits;
    cfg.nr = opt.nr;
    cfg.g = opt.g;
    cfg.max_trials = opt.trials;
    cfg.min_errors = opt.min_errors;
    cfg.seed = opt.seed;
    cfg.threads = opt.threads;
    cfg.pin_equal_links = opt.pin_equal_links;
    cfg.track_user2 = opt.track_user2;

    SweepResult result;
    result.config = cfg;
    if (opt.analytic) {
        const bool bpsk =
            cfg.constellation.is_real && cfg.constellation.order == 2;
        if (!bpsk)
            throw std::invalid_argument(
                "--analytic is only available for BPSK runs");
        result.analytic_ber.reserve(cfg.ebno_db.size());
        for (double e : cfg.ebno_db) {
            switch (cfg.mode) {
                case Mode::proposed_ideal:
                    result.analytic_ber.push_back(ber_ideal_bpsk_rayleigh(e));
                    break;
                case Mode::proposed_quantized:
                    if (cfg.feedback_bits < 1 || cfg.feedback_bits > 20)
                        throw std::invalid_argument(
                            "--analytic with proposed-quantized needs "
                            "--feedback-bits in [1, 20]");
                    result.analytic_ber.push_back(ber_semi_analytic(
                        e, cfg.g, 1u << cfg.feedback_bits));
                    break;
                case Mode::proposed_mrc:
                    result.analytic_ber.push_back(
                        ber_mrc_bpsk_rayleigh(e, cfg.nr));
                    break;
                default:
                    throw std::invalid_argument(
                        "--analytic is unavailable for this mode");
            }
        }
    }

    result.points = sweep(cfg);
    for (const BerPoint& p : result.points) {
        std::printf("ebno=%6.2f dB  ber=%.5e  (%llu errors / %llu trials)",
                    p.ebno_db, p.ber,
                    static_cast<unsigned long long>(p.bit_errors),
                    static_cast<unsigned long long>(p.trials));
        if (cfg.track_user2) {
            const double nbits = static_cast<double>(p.trials) *
                                 cfg.constellation.bits_per_symbol;
            std::printf("  user2_ber=%.5e",
                        static_cast<double>(p.bit_errors_user2) / nbits);
        }
        std::printf("%s\n", p.low_confidence ? "  [low confidence]" : "");
    }

    const std::string path = opt.out.empty() ? "ber.csv" : opt.out;
    emit_csv(result, make_run_manifest(cfg, opt.analytic), path);
    std::printf("wrote %s (%zu points)\n", path.c_str(),
                result.points.size());
    if (opt.gnuplot) {
        emit_gnuplot(result, path, path + ".gp");
        std::printf("wrote %s\n", (path + ".gp").c_str());
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"link-level BER simulator for two-user phase-nulling "
                 "precoding over Rayleigh fading",
                 "ccinull"};
    Options opt;

    app.add_option("--mode", opt.mode,
                   "proposed-ideal | proposed-quantized | joint-ml | "
                   "single-user-naive | proposed-mrc");
    app.add_option("--mod", opt.mod, "bpsk | 4pam | 4qam (default bpsk)");
    app.add_option("--feedback-bits", opt.feedback_bits,
                   "phase codebook size 2^N (proposed-quantized, --dist, "
                   "--grid-out)");
    app.add_option("--nr", opt.nr, "receive antennas (proposed-mrc only)");
    app.add_option("--ebno", opt.ebno, "A:B:STEP or comma list, in dB");
    app.add_option("--g", opt.g, "mean square link gain (default 1)");
    app.add_option("--trials", opt.trials, "max trials per point");
    app.add_option("--min-errors", opt.min_errors,
                   "bit errors to collect per point (>= 100)");
    app.add_option("--seed", opt.seed, "RNG seed");
    app.add_option("--threads", opt.threads, "worker threads (default 1)");
    app.add_option("--out", opt.out, "output CSV path (default ber.csv)");
    app.add_flag("--analytic", opt.analytic,
                 "fill the analytic_ber column (BPSK modes only)");
    app.add_option("--dist", opt.dist,
                   "dump distribution samples instead of sweeping: "
                   "sin-eps2 | z");
    app.add_option("--count", opt.count, "sample count for --dist");
    app.add_flag("--pin-equal-links", opt.pin_equal_links,
                 "second link copies the first in every trial");
    app.add_flag("--track-user2", opt.track_user2,
                 "also count second-user bit errors");
    app.add_flag("--gnuplot", opt.gnuplot,
                 "write a ready-to-run plot script next to the CSV");
    app.add_option("--grid-out", opt.grid_out,
                   "export the gain distribution grid (t,cdf,pdf) to CSV");
    app.add_option("--grid-step", opt.grid_step,
                   "grid step for --grid-out (default sqrt(g)/16)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!opt.dist.empty()) return run_dist(opt);
        if (!opt.grid_out.empty()) return run_grid(opt);
        return run_sweep(opt);
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const EmptyResultError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}

}  // namespace ccinull
