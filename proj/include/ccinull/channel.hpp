#pragma once
// Flat Rayleigh links and AWGN for the two-user uplink
//   r = h1 x1 + h2 x2 + n,  h_i = gamma_i exp(j alpha_i),  E{|h_i|^2} = g.
//
// EbNo here is the average symbol-energy-to-noise ratio of one link,
// EbNo = Es g / sigma^2, which is the x-axis used throughout.

#include <ccinull/rng.hpp>

#include <complex>
#include <vector>

namespace ccinull {

using cdouble = std::complex<double>;

struct Link {
    double gamma = 0;  // envelope, Rayleigh with E{gamma^2} = g
    double alpha = 0;  // phase, uniform [0, 2pi)
    cdouble h{0, 0};
};

struct LinkVector {
    std::vector<cdouble> h;  // i.i.d. CN(0, g) entries
};

Link draw_link(double g, RandomStream& rs);

LinkVector draw_link_vector(unsigned nr, double g, RandomStream& rs);

// Complex AWGN with total variance sigma2 (sigma2/2 per component).
cdouble draw_noise(double sigma2, RandomStream& rs);

std::vector<cdouble> draw_noise_vector(unsigned nr, double sigma2, RandomStream& rs);

// sigma^2 = Es g / 10^(ebno_db/10). Throws for non-positive Es or g.
double ebno_to_sigma2(double ebno_db, double es, double g);

// r = h1 x1 + h2 x2 + n
cdouble received_signal(cdouble h1, cdouble x1, cdouble h2, cdouble x2, cdouble n);

}  // namespace ccinull
