#include <ccinull/channel.hpp>

#include <cmath>
#include <stdexcept>

namespace ccinull {

Link draw_link(double g, RandomStream& rs) {
    if (g <= 0) throw std::invalid_argument("draw_link: g must be positive");
    Link l;
    l.gamma = rs.next_rayleigh(g);
    l.alpha = rs.next_angle();
    l.h = cdouble(l.gamma * std::cos(l.alpha), l.gamma * std::sin(l.alpha));
    return l;
}

LinkVector draw_link_vector(unsigned nr, double g, RandomStream& rs) {
    if (nr == 0) throw std::invalid_argument("draw_link_vector: nr must be >= 1");
    if (g <= 0) throw std::invalid_argument("draw_link_vector: g must be positive");
    LinkVector v;
    v.h.resize(nr);
    const double s = std::sqrt(g / 2.0);
    for (unsigned i = 0; i < nr; ++i)
        v.h[i] = cdouble(s * rs.next_normal(), s * rs.next_normal());
    return v;
}

cdouble draw_noise(double sigma2, RandomStream& rs) {
    const double s = std::sqrt(sigma2 / 2.0);
    return cdouble(s * rs.next_normal(), s * rs.next_normal());
}

std::vector<cdouble> draw_noise_vector(unsigned nr, double sigma2, RandomStream& rs) {
    std::vector<cdouble> n(nr);
    const double s = std::sqrt(sigma2 / 2.0);
    for (unsigned i = 0; i < nr; ++i)
        n[i] = cdouble(s * rs.next_normal(), s * rs.next_normal());
    return n;
}

double ebno_to_sigma2(double ebno_db, double es, double g) {
    if (es <= 0 || g <= 0)
        throw std::invalid_argument("ebno_to_sigma2: Es and g must be positive");
    return es * g / std::pow(10.0, ebno_db / 10.0);
}

cdouble received_signal(cdouble h1, cdouble x1, cdouble h2, cdouble x2, cdouble n) {
    return h1 * x1 + h2 * x2 + n;
}

}  // namespace ccinull
