#pragma once
// Counter-based random numbers (Philox4x32-10, Salmon et al. 2011).
//
// Every trial owns a private stream addressed by (seed, namespace, trial index),
// so aggregate Monte Carlo counts do not depend on how trials are partitioned
// across workers. The generator name "philox4x32-10" is recorded in run manifests.

#include <array>
#include <cstdint>
#include <cmath>

namespace ccinull {

// One keyed 128-bit block. Exposed for known-answer tests.
inline std::array<uint32_t, 4> philox4x32_10(const uint32_t ctr[4], const uint32_t key[2]) {
    constexpr uint32_t M0 = 0xD2511F53u, M1 = 0xCD9E8D57u;
    constexpr uint32_t W0 = 0x9E3779B9u, W1 = 0xBB67AE85u;
    uint32_t c0 = ctr[0], c1 = ctr[1], c2 = ctr[2], c3 = ctr[3];
    uint32_t k0 = key[0], k1 = key[1];
    for (int r = 0; r < 10; ++r) {
        if (r) { k0 += W0; k1 += W1; }
        const uint64_t p0 = static_cast<uint64_t>(M0) * c0;
        const uint64_t p1 = static_cast<uint64_t>(M1) * c2;
        const uint32_t hi0 = static_cast<uint32_t>(p0 >> 32), lo0 = static_cast<uint32_t>(p0);
        const uint32_t hi1 = static_cast<uint32_t>(p1 >> 32), lo1 = static_cast<uint32_t>(p1);
        const uint32_t n0 = hi1 ^ c1 ^ k0;
        const uint32_t n1 = lo1;
        const uint32_t n2 = hi0 ^ c3 ^ k1;
        const uint32_t n3 = lo0;
        c0 = n0; c1 = n1; c2 = n2; c3 = n3;
    }
    return {c0, c1, c2, c3};
}

// Draw stream for one (seed, namespace, trial). Words come from successive
// counter blocks; c2 is the intra-trial block counter.
class RandomStream {
  public:
    RandomStream(uint64_t seed, uint32_t stream_namespace, uint64_t trial)
        : ctr_{static_cast<uint32_t>(trial), static_cast<uint32_t>(trial >> 32),
               0u, stream_namespace},
          key_{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)} {}

    uint32_t next_u32() {
        if (pos_ == 4) refill();
        return buf_[pos_++];
    }

    // Uniform on (0,1]: 53-bit mantissa, never 0 (safe under log()).
    double next_unit_open0() {
        const uint64_t hi = next_u32(), lo = next_u32();
        const uint64_t b = (hi << 32) | lo;
        return static_cast<double>((b >> 11) + 1) * 0x1.0p-53;
    }

    // Uniform on [0,1).
    double next_unit() {
        const uint64_t hi = next_u32(), lo = next_u32();
        const uint64_t b = (hi << 32) | lo;
        return static_cast<double>(b >> 11) * 0x1.0p-53;
    }

    double next_angle() { return 6.283185307179586476925287 * next_unit(); }

    // Standard normal, Box-Muller; pairs are generated together.
    double next_normal() {
        if (have_normal_) {
            have_normal_ = false;
            return cached_normal_;
        }
        const double u1 = next_unit_open0();
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925287 * u2;
        cached_normal_ = r * std::sin(a);
        have_normal_ = true;
        return r * std::cos(a);
    }

    // Rayleigh with E{x^2} = g, by inverse CDF.
    double next_rayleigh(double g) { return std::sqrt(-g * std::log(next_unit_open0())); }

  private:
    void refill() {
        const uint32_t c[4] = {ctr_[0], ctr_[1], ctr_[2]++, ctr_[3]};
        buf_ = philox4x32_10(c, key_);
        pos_ = 0;
    }

    uint32_t ctr_[4];
    uint32_t key_[2];
    std::array<uint32_t, 4> buf_{};
    int pos_ = 4;
    bool have_normal_ = false;
    double cached_normal_ = 0.0;
};

// Stream namespaces (counter word c3): keeps trial streams for different
// purposes disjoint under one seed.
namespace stream_ns {
inline constexpr uint32_t sweep = 0;
inline constexpr uint32_t distribution = 1;
}  // namespace stream_ns

}  // namespace ccinull
