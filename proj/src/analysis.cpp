#include <ccinull/analysis.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ccinull {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_gain_args(double g, unsigned levels) {
    if (!(g > 0.0))
        throw std::invalid_argument("gain model: g must be positive");
    if (levels < 2)
        throw std::invalid_argument("gain model: need at least 2 codewords");
}

double rayleigh_cdf(double x, double g) {
    return x <= 0.0 ? 0.0 : 1.0 - std::exp(-x * x / g);
}

double rayleigh_pdf(double x, double g) {
    return x <= 0.0 ? 0.0 : (2.0 * x / g) * std::exp(-x * x / g);
}

// Shared weight of the reduced-form integrands. Vanishes at v = 0 and t = 0.
double psi(double t, double v, double g) {
    const double w = 1.0 + v * v;
    return std::sqrt(kPi / (g * w)) * t * v / w * std::exp(-t * t / (g * w));
}

DistributionGrid tabulate(double g, unsigned levels, double lo, double hi,
                          double step) {
    const auto n_neg = std::max<std::size_t>(
        4, static_cast<std::size_t>(std::ceil(-lo / step)));
    const auto n_pos = std::max<std::size_t>(
        4, static_cast<std::size_t>(std::ceil(hi / step)));
    const std::size_t n = n_neg + n_pos + 1;

    DistributionGrid grid;
    grid.zero_index = n_neg;
    grid.t.resize(n);
    grid.cdf.resize(n);
    grid.pdf.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double ti =
            (static_cast<double>(i) - static_cast<double>(n_neg)) * step;
        grid.t[i] = ti;
        grid.cdf[i] = ti < 0.0 ? cdf_z_neg(ti, g, levels)
                               : cdf_z_pos(ti, g, levels);
    }

    // Second-order stencils throughout; the t = 0 node blends the two
    // one-sided derivatives because the CDF has a corner there.
    const auto& F = grid.cdf;
    const double h2 = 2.0 * step;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0) {
            grid.pdf[i] = (-3.0 * F[0] + 4.0 * F[1] - F[2]) / h2;
        } else if (i == n - 1) {
            grid.pdf[i] = (3.0 * F[n - 1] - 4.0 * F[n - 2] + F[n - 3]) / h2;
        } else if (i == grid.zero_index) {
            const double left =
                (3.0 * F[i] - 4.0 * F[i - 1] + F[i - 2]) / h2;
            const double right =
                (-3.0 * F[i] + 4.0 * F[i + 1] - F[i + 2]) / h2;
            grid.pdf[i] = 0.5 * (left + right);
        } else {
            grid.pdf[i] = (F[i + 1] - F[i - 1]) / h2;
        }
    }

    double mass = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i)
        mass += 0.5 * step * (grid.pdf[i] + grid.pdf[i + 1]);
    grid.norm = mass;
    return grid;
}

}  // namespace

double q_func(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double cdf_v(double v, unsigned levels) {
    check_gain_args(1.0, levels);
    const double a = kPi / levels;
    if (v <= -a) return 0.0;
    if (v >= a) return 1.0;
    return (v + a) / (2.0 * a);
}

double cdf_z(double t, double g, unsigned levels) {
    return t < 0.0 ? cdf_z_neg(t, g, levels) : cdf_z_pos(t, g, levels);
}

double cdf_z_pos(double t, double g, unsigned levels) {
    check_gain_args(g, levels);
    if (t < 0.0) throw std::invalid_argument("cdf_z_pos: t must be >= 0");
    const double B = levels;
    const double a = kPi / B;
    const double c1 = B / kPi;
    const double c2 = B / (2.0 * kPi);

    const auto i_exp = [t, g](double v) {
        if (v <= 0.0) return 0.0;
        return v * v / (1.0 + v * v) * std::exp(-t * t / (g * v * v));
    };
    const auto i_psi = [t, g](double v) { return psi(t, v, g); };
    const auto i_erf_near = [t, g](double v) {
        if (v <= 0.0) return 0.0;
        const double w = 1.0 + v * v;
        return psi(t, v, g) * std::erf(t * v / std::sqrt(g * w));
    };
    const auto i_erf_far = [t, g](double v) {
        if (v <= 0.0) return 0.0;
        const double w = 1.0 + v * v;
        return psi(t, v, g) * std::erf(t / (v * std::sqrt(g * w)));
    };

    return 1.0 - c1 * std::exp(-t * t / g) * std::atan(a) -
           c2 * integrate(i_exp, 0.0, a) + c2 * integrate(i_psi, 0.0, a) -
           c1 * integrate(i_erf_near, 0.0, a) -
           c2 * integrate(i_erf_far, 0.0, a);
}

double cdf_z_pos_region(double t, double g, unsigned levels) {
    check_gain_args(g, levels);
    if (t < 0.0)
        throw std::invalid_argument("cdf_z_pos_region: t must be >= 0");
    const double a = kPi / levels;
    const double y_max = 8.0 * std::sqrt(g);
    const QuadratureSpec outer{};
    const QuadratureSpec inner = inner_spec(outer);

    // Additive residual half: condition on the first link strength.
    const auto half_add = [&](double v) {
        if (v <= 0.0) return rayleigh_cdf(t, g);
        if (t <= 0.0) return 0.0;
        return integrate(
            [&](double x) {
                return rayleigh_pdf(x, g) * rayleigh_cdf((t - x) / v, g);
            },
            0.0, t, inner);
    };
    // Subtractive half: condition on the second link strength.
    const auto half_sub = [&](double u) {
        return integrate(
            [&](double y) {
                return rayleigh_pdf(y, g) * rayleigh_cdf(t + u * y, g);
            },
            0.0, y_max, inner);
    };
    return levels / (2.0 * kPi) *
           (integrate(half_add, 0.0, a, outer) +
            integrate(half_sub, 0.0, a, outer));
}

double cdf_z_neg(double t, double g, unsigned levels) {
    check_gain_args(g, levels);
    if (t >= 0.0) throw std::invalid_argument("cdf_z_neg: t must be < 0");
    const double a = kPi / levels;
    const double y_max = 8.0 * std::sqrt(g);
    const QuadratureSpec outer{};
    const QuadratureSpec inner = inner_spec(outer);

    // z <= t < 0 requires the interfering link to overpower the direct one:
    // gamma2 > -t / u for residual magnitude u.
    const auto half = [&](double u) {
        if (u <= 0.0) return 0.0;
        const double y0 = -t / u;
        if (y0 >= y_max) return 0.0;
        return integrate(
            [&](double y) {
                return rayleigh_pdf(y, g) * rayleigh_cdf(t + u * y, g);
            },
            y0, y_max, inner);
    };
    return levels / (2.0 * kPi) * integrate(half, 0.0, a, outer);
}

DistributionGrid build_gain_grid(double g, unsigned levels, double max_step) {
    check_gain_args(g, levels);
    if (!(max_step > 0.0))
        throw std::invalid_argument("build_gain_grid: max_step must be > 0");
    const double s = std::sqrt(g);
    const double lo = -(kPi / levels) * 8.0 * s;
    const double hi = 9.0 * s;

    double step = std::min(max_step, s / 16.0);
    for (int attempt = 0; attempt < 9; ++attempt) {
        DistributionGrid grid = tabulate(g, levels, lo, hi, step);
        if (std::abs(grid.norm - 1.0) <= 1e-3) return grid;
        step *= 0.5;
    }
    throw std::runtime_error(
        "build_gain_grid: density mass did not converge to 1");
}

double ber_semi_analytic(double ebno_db, double g,
                         const DistributionGrid& grid) {
    const double ebno = std::pow(10.0, ebno_db / 10.0);
    const double c = std::sqrt(2.0 * ebno / g);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < grid.t.size(); ++i) {
        const double h = grid.t[i + 1] - grid.t[i];
        acc += 0.5 * h *
               (q_func(c * grid.t[i]) * grid.pdf[i] +
                q_func(c * grid.t[i + 1]) * grid.pdf[i + 1]);
    }
    return acc;
}

double ber_semi_analytic(double ebno_db, double g, unsigned levels) {
    const double ebno = std::pow(10.0, ebno_db / 10.0);
    const double c = std::sqrt(2.0 * ebno / g);
    // Step fine enough to resolve the conditional error curve, whose
    // transition width scales as 1/c.
    return ber_semi_analytic(ebno_db, g,
                             build_gain_grid(g, levels, 0.125 / c));
}

double ber_ideal_bpsk_rayleigh(double ebno_db) {
    const double r = std::pow(10.0, ebno_db / 10.0);
    return 0.5 * (1.0 - std::sqrt(r / (1.0 + r)));
}

double ebno_db_for_ideal_ber(double ber) {
    if (!(ber > 0.0) || !(ber < 0.5))
        throw std::invalid_argument(
            "ebno_db_for_ideal_ber: rate must lie in (0, 0.5)");
    const double mu = 1.0 - 2.0 * ber;
    const double r = mu * mu / (1.0 - mu * mu);
    return 10.0 * std::log10(r);
}

double ber_mrc_bpsk_rayleigh(double ebno_db, unsigned branches) {
    if (branches == 0)
        throw std::invalid_argument(
            "ber_mrc_bpsk_rayleigh: need at least one branch");
    const double r = std::pow(10.0, ebno_db / 10.0);
    const double mu = std::sqrt(r / (1.0 + r));
    const double p = 0.5 * (1.0 - mu);
    const double q = 0.5 * (1.0 + mu);
    double sum = 1.0, comb = 1.0, qk = 1.0;
    for (unsigned k = 1; k < branches; ++k) {
        comb *= static_cast<double>(branches - 1 + k) / static_cast<double>(k);
        qk *= q;
        sum += comb * qk;
    }
    return std::pow(p, branches) * sum;
}

}  // namespace ccinull
