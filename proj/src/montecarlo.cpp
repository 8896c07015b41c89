#include <ccinull/montecarlo.hpp>

#include <ccinull/channel.hpp>
#include <ccinull/detection.hpp>
#include <ccinull/precoding.hpp>
#include <ccinull/rng.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace ccinull {

namespace {

// Trials between stopping checks grow geometrically so short runs stay short
// and long runs are not dominated by bookkeeping. Counts are summed as
// integers, so splitting a round across threads cannot change the result.
constexpr std::uint64_t kRoundStart = 1ull << 14;
constexpr std::uint64_t kRoundCap = 1ull << 22;

cdouble expj(double a) { return {std::cos(a), std::sin(a)}; }

struct Counts {
    std::uint64_t u1 = 0;
    std::uint64_t u2 = 0;
};

struct TrialContext {
    const SweepConfig* cfg = nullptr;
    const PhaseCodebook* codebook = nullptr;  // proposed_quantized only
    double sigma2 = 0.0;
    double root_es = 1.0;
};

struct MrcScratch {
    std::vector<cdouble> h1, h2, r;
};

// Draw order per trial is fixed: links, precoding phase, symbols, noise.
// Changing it invalidates every pinned simulation value.
Counts run_one(const TrialContext& ctx, std::uint64_t trial,
               MrcScratch& scratch) {
    const SweepConfig& cfg = *ctx.cfg;
    const Constellation& c = cfg.constellation;
    RandomStream rs(cfg.seed, stream_ns::sweep, trial);
    Counts out;

    if (cfg.mode == Mode::proposed_mrc) {
        const unsigned nr = cfg.nr;
        auto& h1 = scratch.h1;
        auto& h2 = scratch.h2;
        auto& r = scratch.r;
        h1.resize(nr);
        h2.resize(nr);
        r.resize(nr);
        const double cs = std::sqrt(cfg.g / 2.0);
        for (unsigned k = 0; k < nr; ++k)
            h1[k] = cdouble(rs.next_normal() * cs, rs.next_normal() * cs);
        if (cfg.pin_equal_links) {
            h2 = h1;
        } else {
            for (unsigned k = 0; k < nr; ++k)
                h2[k] = cdouble(rs.next_normal() * cs, rs.next_normal() * cs);
        }
        const double b1 = rs.next_angle();
        const MrcPhase mp = beta2_mrc(h1, h2, b1);
        const unsigned i1 = rs.next_u32() % c.order;
        const unsigned i2 = rs.next_u32() % c.order;
        const cdouble x1 = ctx.root_es * expj(b1) * c.points[i1];
        const cdouble x2 = cfg.drop_interferer
                               ? cdouble(0.0, 0.0)
                               : ctx.root_es * expj(mp.beta2) * c.points[i2];
        const double ns = std::sqrt(ctx.sigma2 / 2.0);
        for (unsigned k = 0; k < nr; ++k) {
            const cdouble n(rs.next_normal() * ns, rs.next_normal() * ns);
            r[k] = h1[k] * x1 + h2[k] * x2 + n;
        }
        out.u1 = slice_and_count(mrc_statistic(r, h1, b1, cfg.es), c, i1);
        if (cfg.track_user2 && !cfg.drop_interferer)
            out.u2 = slice_and_count(mrc_statistic(r, h2, mp.beta2, cfg.es),
                                     c, i2);
        return out;
    }

    const Link l1 = draw_link(cfg.g, rs);
    const Link l2 = cfg.pin_equal_links ? l1 : draw_link(cfg.g, rs);
    double b1 = 0.0, b2 = 0.0;
    if (cfg.mode == Mode::proposed_ideal) {
        b1 = rs.next_angle();
        b2 = ideal_beta2(l1.alpha, l2.alpha, b1);
    } else if (cfg.mode == Mode::proposed_quantized) {
        b1 = rs.next_angle();
        b2 = quantize_phase(*ctx.codebook,
                            ideal_beta2(l1.alpha, l2.alpha, b1))
                 .angle;
    }
    const unsigned i1 = rs.next_u32() % c.order;
    const unsigned i2 = rs.next_u32() % c.order;
    const cdouble x1 = ctx.root_es * expj(b1) * c.points[i1];
    const cdouble x2 = cfg.drop_interferer
                           ? cdouble(0.0, 0.0)
                           : ctx.root_es * expj(b2) * c.points[i2];
    const cdouble n = draw_noise(ctx.sigma2, rs);
    const cdouble r = received_signal(l1.h, x1, l2.h, x2, n);

    if (cfg.mode == Mode::joint_ml) {
        const auto [j1, j2] =
            joint_ml(r, ctx.root_es * l1.h, ctx.root_es * l2.h, c);
        out.u1 = static_cast<std::uint64_t>(std::popcount(i1 ^ j1));
        if (cfg.track_user2)
            out.u2 = static_cast<std::uint64_t>(std::popcount(i2 ^ j2));
        return out;
    }

    out.u1 = slice_and_count(
        sufficient_statistic(r, l1.gamma, l1.alpha, b1, cfg.es), c, i1);
    if (cfg.track_user2)
        out.u2 = slice_and_count(
            sufficient_statistic(r, l2.gamma, l2.alpha, b2, cfg.es), c, i2);
    return out;
}

Counts run_range(const TrialContext& ctx, std::uint64_t lo, std::uint64_t hi) {
    Counts total;
    MrcScratch scratch;
    for (std::uint64_t t = lo; t < hi; ++t) {
        const Counts one = run_one(ctx, t, scratch);
        total.u1 += one.u1;
        total.u2 += one.u2;
    }
    return total;
}

Counts run_round(const TrialContext& ctx, std::uint64_t begin,
                 std::uint64_t count) {
    const unsigned workers = std::max(1u, ctx.cfg->threads);
    if (workers == 1) return run_range(ctx, begin, begin + count);

    std::vector<Counts> part(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = begin + count * w / workers;
        const std::uint64_t hi = begin + count * (w + 1) / workers;
        pool.emplace_back(
            [&ctx, &part, w, lo, hi] { part[w] = run_range(ctx, lo, hi); });
    }
    Counts total;
    for (unsigned w = 0; w < workers; ++w) {
        pool[w].join();
        total.u1 += part[w].u1;
        total.u2 += part[w].u2;
    }
    return total;
}

void validate(const SweepConfig& cfg) {
    if (!(cfg.g > 0.0) || !(cfg.es > 0.0))
        throw std::invalid_argument("sweep: g and es must be positive");
    if (cfg.max_trials == 0)
        throw std::invalid_argument("sweep: max_trials must be positive");
    if (cfg.threads < 1)
        throw std::invalid_argument("sweep: need at least one worker");
    if (cfg.mode == Mode::proposed_mrc) {
        if (cfg.nr < 1 || cfg.nr > 64)
            throw std::invalid_argument("sweep: nr must lie in [1, 64]");
    } else if (cfg.nr != 1) {
        throw std::invalid_argument(
            "sweep: nr applies to proposed-mrc only");
    }
    if (cfg.mode == Mode::proposed_quantized &&
        (cfg.feedback_bits < 1 || cfg.feedback_bits > 20))
        throw std::invalid_argument(
            "sweep: proposed-quantized needs feedback_bits in [1, 20]");
    if (cfg.mode != Mode::joint_ml && !cfg.constellation.is_real)
        throw std::invalid_argument(
            "sweep: this mode slices a one-dimensional statistic; "
            "use a PAM-family constellation");
}

}  // namespace

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::proposed_ideal: return "proposed-ideal";
        case Mode::proposed_quantized: return "proposed-quantized";
        case Mode::joint_ml: return "joint-ml";
        case Mode::single_user_naive: return "single-user-naive";
        case Mode::proposed_mrc: return "proposed-mrc";
    }
    throw std::logic_error("mode_name: unknown mode");
}

Mode mode_from_name(std::string_view name) {
    if (name == "proposed-ideal") return Mode::proposed_ideal;
    if (name == "proposed-quantized") return Mode::proposed_quantized;
    if (name == "joint-ml") return Mode::joint_ml;
    if (name == "single-user-naive" || name == "single-user")
        return Mode::single_user_naive;
    if (name == "proposed-mrc") return Mode::proposed_mrc;
    throw std::invalid_argument("unknown mode: " + std::string(name));
}

BerPoint estimate_ber(const SweepConfig& cfg, double ebno_db) {
    validate(cfg);
    PhaseCodebook codebook;
    TrialContext ctx;
    ctx.cfg = &cfg;
    ctx.sigma2 = ebno_to_sigma2(ebno_db, cfg.es, cfg.g);
    ctx.root_es = std::sqrt(cfg.es);
    if (cfg.mode == Mode::proposed_quantized) {
        codebook = make_codebook(1u << cfg.feedback_bits);
        ctx.codebook = &codebook;
    }

    const std::uint64_t target = cfg.min_errors == 0
                                     ? std::numeric_limits<std::uint64_t>::max()
                                     : cfg.min_errors;
    std::uint64_t trials = 0;
    std::uint64_t round = kRoundStart;
    Counts total;
    while (trials < cfg.max_trials && total.u1 < target) {
        const std::uint64_t todo = std::min(round, cfg.max_trials - trials);
        const Counts got = run_round(ctx, trials, todo);
        total.u1 += got.u1;
        total.u2 += got.u2;
        trials += todo;
        round = std::min(round * 2, kRoundCap);
    }

    BerPoint p;
    p.ebno_db = ebno_db;
    p.trials = trials;
    p.bit_errors = total.u1;
    p.bit_errors_user2 = total.u2;
    if (trials > 0) {
        const double nbits =
            static_cast<double>(trials) * cfg.constellation.bits_per_symbol;
        p.ber = static_cast<double>(total.u1) / nbits;
        const double half =
            1.96 * std::sqrt(std::max(p.ber * (1.0 - p.ber), 0.0) / nbits);
        p.ci95_low = std::max(0.0, p.ber - half);
        p.ci95_high = std::min(1.0, p.ber + half);
    }
    p.low_confidence = cfg.min_errors > 0 && total.u1 < cfg.min_errors;
    return p;
}

std::vector<BerPoint> sweep(const SweepConfig& cfg) {
    validate(cfg);
    std::vector<BerPoint> points;
    points.reserve(cfg.ebno_db.size());
    for (double e : cfg.ebno_db) points.push_back(estimate_ber(cfg, e));
    return points;
}

std::vector<double> sample_distribution(DistKind kind,
                                        unsigned feedback_levels, double g,
                                        std::uint64_t count,
                                        std::uint64_t seed) {
    if (!(g > 0.0))
        throw std::invalid_argument("sample_distribution: g must be positive");
    if (feedback_levels < 2)
        throw std::invalid_argument(
            "sample_distribution: need at least 2 codewords");
    const PhaseCodebook codebook = make_codebook(feedback_levels);
    const double a = M_PI / feedback_levels;
    std::vector<double> out(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        RandomStream rs(seed, stream_ns::distribution, i);
        if (kind == DistKind::sin_eps2) {
            const Link l1 = draw_link(g, rs);
            const Link l2 = draw_link(g, rs);
            const double b1 = rs.next_angle();
            const QuantizedPhase q =
                quantize_phase(codebook, ideal_beta2(l1.alpha, l2.alpha, b1));
            out[i] = std::sin(q.eps2);
        } else {
            const double g1 = rs.next_rayleigh(g);
            const double g2 = rs.next_rayleigh(g);
            const double v = a * (2.0 * rs.next_unit() - 1.0);
            out[i] = g1 + g2 * v;
        }
    }
    return out;
}

}  // namespace ccinull
