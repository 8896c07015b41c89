#pragma once
// Receive-side processing: the single-user phase-derotated statistic, the
// joint maximum-likelihood pair search, and the MRC combiner statistic.

#include <ccinull/constellation.hpp>

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace ccinull {

// y_hat = Re{ e^{-j(alpha+beta)} r } / (sqrt(Es) gamma)
//       = s1 + (gamma2/gamma1) cos(beta2+alpha2-beta1-alpha1) s2 + noise term.
// A fully faded link (gamma == 0) yields statistic 0; the trial still counts.
double sufficient_statistic(cdouble r, double gamma, double alpha, double beta, double es);

// Exhaustive argmin over M^2 symbol pairs of |y - h1 s1 - h2 s2|.
// h1, h2 are the effective complex gains (channel x precoder x sqrt(Es)).
// Exact metric ties resolve to the lexicographically first (i1, i2).
std::pair<unsigned, unsigned> joint_ml(cdouble y, cdouble h1, cdouble h2,
                                       const Constellation& c);

// y_hat = Re{ e^{-j beta} h^H r } / (sqrt(Es) ||h||^2); zero if ||h|| == 0.
double mrc_statistic(const std::vector<cdouble>& r, const std::vector<cdouble>& h,
                     double beta, double es);

// Slice the statistic and count label bit errors against the transmitted index.
// Labels are binary-valued indices, so the error count is popcount(i ^ j).
unsigned slice_and_count(double stat, const Constellation& c, unsigned tx_index);
unsigned slice_and_count(cdouble stat, const Constellation& c, unsigned tx_index);

}  // namespace ccinull
