#include <ccinull/detection.hpp>

#include <bit>
#include <cmath>

namespace ccinull {

double sufficient_statistic(cdouble r, double gamma, double alpha, double beta, double es) {
    if (gamma == 0.0) return 0.0;
    const double th = alpha + beta;
    // Re{ e^{-j th} r }
    const double re = r.real() * std::cos(th) + r.imag() * std::sin(th);
    return re / (std::sqrt(es) * gamma);
}

std::pair<unsigned, unsigned> joint_ml(cdouble y, cdouble h1, cdouble h2,
                                       const Constellation& c) {
    unsigned b1 = 0, b2 = 0;
    double best = 1e300;
    for (unsigned i = 0; i < c.order; ++i) {
        const cdouble y1 = y - h1 * c.points[i];
        for (unsigned k = 0; k < c.order; ++k) {
            const double d = std::norm(y1 - h2 * c.points[k]);
            if (d < best) {  // strict: first (lexicographic) minimum kept
                best = d;
                b1 = i;
                b2 = k;
            }
        }
    }
    return {b1, b2};
}

double mrc_statistic(const std::vector<cdouble>& r, const std::vector<cdouble>& h,
                     double beta, double es) {
    cdouble acc(0, 0);
    double h2 = 0;
    for (size_t i = 0; i < h.size(); ++i) {
        acc += std::conj(h[i]) * r[i];
        h2 += std::norm(h[i]);
    }
    if (h2 == 0.0) return 0.0;
    const double re = acc.real() * std::cos(beta) + acc.imag() * std::sin(beta);
    return re / (std::sqrt(es) * h2);
}

unsigned slice_and_count(double stat, const Constellation& c, unsigned tx_index) {
    return slice_and_count(cdouble(stat, 0.0), c, tx_index);
}

unsigned slice_and_count(cdouble stat, const Constellation& c, unsigned tx_index) {
    const unsigned rx = slice(c, stat);
    return static_cast<unsigned>(std::popcount(rx ^ tx_index));
}

}  // namespace ccinull
