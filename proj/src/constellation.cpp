#include <ccinull/constellation.hpp>

#include <cmath>
#include <stdexcept>

namespace ccinull {
namespace {

unsigned ilog2(unsigned m) {
    unsigned b = 0;
    while ((1u << b) < m) ++b;
    return b;
}

uint32_t gray_inverse(uint32_t gcode) {
    uint32_t x = gcode;
    for (uint32_t s = 1; s < 32; s <<= 1) x ^= x >> s;
    return x;
}

std::vector<uint8_t> label_bits(uint32_t value, unsigned nbits) {
    std::vector<uint8_t> b(nbits);
    for (unsigned k = 0; k < nbits; ++k)
        b[k] = static_cast<uint8_t>((value >> (nbits - 1 - k)) & 1u);
    return b;
}

// Amplitude of the PAM level whose Gray label value is `idx`, in units of the
// raw grid {..,-3,-1,+1,+3,..}. Ascending amplitude rank r carries label
// gray(M-1-r), which puts label 0 on the most positive level (BPSK: bit 0 <-> +1)
// while keeping adjacent levels one bit apart.
int pam_raw_level(uint32_t idx, unsigned M) {
    const uint32_t rank = M - 1 - gray_inverse(idx);
    return 2 * static_cast<int>(rank) - static_cast<int>(M - 1);
}

}  // namespace

Constellation make_pam(unsigned M) {
    if (M != 2 && M != 4 && M != 8 && M != 16)
        throw std::invalid_argument("make_pam: order must be 2, 4, 8 or 16");
    Constellation c;
    c.order = M;
    c.bits_per_symbol = ilog2(M);
    c.is_real = true;
    c.name = (M == 2) ? "bpsk" : std::to_string(M) + "pam";
    // mean square of {+/-1, +/-3, ...} over M levels is (M^2 - 1)/3
    const double norm = std::sqrt((M * M - 1) / 3.0);
    c.points.resize(M);
    c.bit_labels.resize(M);
    for (uint32_t i = 0; i < M; ++i) {
        c.points[i] = cdouble(pam_raw_level(i, M) / norm, 0.0);
        c.bit_labels[i] = label_bits(i, c.bits_per_symbol);
    }
    return c;
}

Constellation make_qam(unsigned M) {
    if (M != 4 && M != 16 && M != 64)
        throw std::invalid_argument("make_qam: order must be 4, 16 or 64");
    Constellation c;
    c.order = M;
    c.bits_per_symbol = ilog2(M);
    c.is_real = false;
    c.name = std::to_string(M) + "qam";
    const unsigned rail = static_cast<unsigned>(std::lround(std::sqrt(double(M))));
    const unsigned rail_bits = ilog2(rail);
    // per-rail mean square (rail^2 - 1)/3, two rails
    const double norm = std::sqrt(2.0 * (rail * rail - 1) / 3.0);
    c.points.resize(M);
    c.bit_labels.resize(M);
    for (uint32_t i = 0; i < M; ++i) {
        const uint32_t ilab = i >> rail_bits;          // leading bits -> I rail
        const uint32_t qlab = i & (rail - 1);          // trailing bits -> Q rail
        c.points[i] = cdouble(pam_raw_level(ilab, rail) / norm,
                              pam_raw_level(qlab, rail) / norm);
        c.bit_labels[i] = label_bits(i, c.bits_per_symbol);
    }
    return c;
}

cdouble modulate(const Constellation& c, const std::vector<uint8_t>& bits) {
    if (bits.size() != c.bits_per_symbol)
        throw std::invalid_argument("modulate: bit count does not match constellation");
    uint32_t idx = 0;
    for (uint8_t b : bits) {
        if (b > 1) throw std::invalid_argument("modulate: bits must be 0 or 1");
        idx = (idx << 1) | b;
    }
    return c.points[idx];
}

unsigned slice(const Constellation& c, cdouble stat) {
    unsigned best = 0;
    double best_d = 1e300;
    for (unsigned i = 0; i < c.order; ++i) {
        double d;
        if (c.is_real) {
            const double e = stat.real() - c.points[i].real();
            d = e * e;
        } else {
            d = std::norm(stat - c.points[i]);
        }
        if (d < best_d) {  // strict: ties keep the lowest index
            best_d = d;
            best = i;
        }
    }
    return best;
}

}  // namespace ccinull
