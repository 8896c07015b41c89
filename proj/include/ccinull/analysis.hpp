#pragma once

#include <ccinull/quadrature.hpp>

#include <cstddef>
#include <vector>

namespace ccinull {

// Gaussian tail probability Q(x) = P(N(0,1) > x).
double q_func(double x);

// ---------------------------------------------------------------------------
// Residual-gain model for quantized phase feedback.
//
// With a B-codeword codebook the phase quantization error lies in
// [-pi/B, pi/B]. The detection statistic of the protected user then carries
// amplitude gain z = gamma1 + gamma2 * v, where gamma1, gamma2 are the
// Rayleigh link strengths (mean square g each) and v is the residual
// projection, modeled as uniform on [-pi/B, pi/B]. The simulator applies
// sin(eps) where the model uses eps itself; the gap this opens is below the
// tolerances asserted in the tests.
//
// Conditional on z, a BPSK bit errs with probability
// q_func(sqrt(2 * ebno_lin / g) * z).
// ---------------------------------------------------------------------------

// CDF of the residual projection v for a B-codeword codebook.
double cdf_v(double v, unsigned levels);

// CDF of the gain z. Dispatches on sign: the nonnegative branch uses a
// single-integral reduction, the negative branch nested quadrature over the
// (gamma2, v) region that makes z negative.
double cdf_z(double t, double g, unsigned levels);

// Nonnegative branch, reduced to one-dimensional integrals.
double cdf_z_pos(double t, double g, unsigned levels);

// Same quantity by nested quadrature over the conditional law. Slower;
// kept as an independent cross-check of the reduction.
double cdf_z_pos_region(double t, double g, unsigned levels);

// Negative branch (requires gamma2 * |v| > gamma1, hence small probability).
double cdf_z_neg(double t, double g, unsigned levels);

// Tabulated gain distribution. The grid always contains t = 0 as a node so
// the derivative kink there never sits inside a difference stencil.
struct DistributionGrid {
    std::vector<double> t;
    std::vector<double> cdf;
    std::vector<double> pdf;
    double norm = 0.0;           // trapezoid mass of pdf, should be ~1
    std::size_t zero_index = 0;  // position of the t = 0 node
};

// Builds the grid on [-(pi/B)*8*sqrt(g), 9*sqrt(g)], differencing the CDF
// for the density. Starts at max_step and halves the step until the
// trapezoid mass is within 1e-3 of unity.
DistributionGrid build_gain_grid(double g, unsigned levels, double max_step);

// BPSK error rate under quantized feedback: E_z[ q_func(c z) ] with
// c = sqrt(2 * ebno_lin / g), integrated against the tabulated density.
double ber_semi_analytic(double ebno_db, double g, unsigned levels);
double ber_semi_analytic(double ebno_db, double g,
                         const DistributionGrid& grid);

// BPSK over a single Rayleigh link with perfect phase alignment:
// 0.5 * (1 - sqrt(r / (1 + r))), r the mean SNR in linear units.
double ber_ideal_bpsk_rayleigh(double ebno_db);

// Inverse of the above: the mean SNR in dB at which the ideal link reaches
// the given error rate. Domain (0, 0.5).
double ebno_db_for_ideal_ber(double ber);

// BPSK with maximum ratio combining over `branches` interference-free
// Rayleigh branches, mean SNR per branch = ebno_lin.
double ber_mrc_bpsk_rayleigh(double ebno_db, unsigned branches);

}  // namespace ccinull
