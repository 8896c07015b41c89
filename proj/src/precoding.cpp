#include <ccinull/precoding.hpp>

#include <cmath>
#include <stdexcept>

namespace ccinull {

namespace {
constexpr double kTwoPi = 6.283185307179586476925287;
constexpr double kPi = 3.141592653589793238462643;
constexpr double kHalfPi = 1.570796326794896619231322;
}  // namespace

double wrap_two_pi(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0) r += kTwoPi;
    // fmod can return exactly kTwoPi after the correction when a is a tiny
    // negative number; fold that back to 0
    if (r >= kTwoPi) r = 0.0;
    return r;
}

double wrap_pm_pi(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r > kPi) r -= kTwoPi;
    if (r <= -kPi) r += kTwoPi;
    return r;
}

PhaseCodebook make_codebook(unsigned levels) {
    if (levels < 2) throw std::invalid_argument("make_codebook: need at least 2 levels");
    PhaseCodebook cb;
    cb.levels = levels;
    cb.codewords.resize(levels);
    for (unsigned k = 0; k < levels; ++k) {
        const double a = kTwoPi * k / levels;
        cb.codewords[k] = cdouble(std::cos(a), std::sin(a));
    }
    return cb;
}

double ideal_beta2(double alpha1, double alpha2, double beta1) {
    return wrap_two_pi(beta1 + alpha1 - alpha2 + kHalfPi);
}

QuantizedPhase quantize_phase(const PhaseCodebook& cb, double beta2) {
    const unsigned B = cb.levels;
    const double b = wrap_two_pi(beta2);
    // Equal sectors: nearest codeword on the circle is round(b * B / 2pi).
    // |e^{jb} - e^{ja}|^2 = 2 - 2 cos(b - a) is monotone in the wrapped angular
    // distance, so this is the Euclidean argmin over the codebook.
    const double u = b * B / kTwoPi;  // in [0, B)
    double k = std::floor(u + 0.5);
    if (u + 0.5 == k) {
        // exact sector midpoint: candidates k-1 and k (mod B); lower index wins
        const unsigned lo = static_cast<unsigned>(k - 1.0) % B;
        const unsigned hi = static_cast<unsigned>(k) % B;
        k = static_cast<double>(std::min(lo, hi));
    }
    QuantizedPhase q;
    q.index = static_cast<unsigned>(k) % B;
    q.angle = kTwoPi * q.index / B;
    q.eps2 = wrap_pm_pi(q.angle - b);
    return q;
}

MrcPhase beta2_mrc(const std::vector<cdouble>& h1, const std::vector<cdouble>& h2,
                   double beta1) {
    if (h1.size() != h2.size() || h1.empty())
        throw std::invalid_argument("beta2_mrc: vectors must be non-empty, equal length");
    cdouble ip(0, 0);  // h1^H h2
    for (size_t i = 0; i < h1.size(); ++i) ip += std::conj(h1[i]) * h2[i];
    MrcPhase m;
    if (ip == cdouble(0, 0)) {
        m.beta2 = wrap_two_pi(beta1);
        m.degenerate = true;
        return m;
    }
    m.beta2 = wrap_two_pi(beta1 + kHalfPi - std::arg(ip));
    return m;
}

}  // namespace ccinull
