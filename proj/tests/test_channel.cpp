#include <doctest.h>

#include <ccinull/channel.hpp>

#include "test_support.hpp"

#include <cmath>

using namespace ccinull;

TEST_CASE("ebno_to_sigma2") {
    CHECK(ebno_to_sigma2(0.0, 1.0, 1.0) == doctest::Approx(1.0));
    CHECK(ebno_to_sigma2(10.0, 1.0, 1.0) == doctest::Approx(0.1));
    CHECK(ebno_to_sigma2(10.0, 2.0, 3.0) == doctest::Approx(0.6));
    CHECK(ebno_to_sigma2(-10.0, 1.0, 1.0) == doctest::Approx(10.0));
    CHECK_THROWS_AS(ebno_to_sigma2(0.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ebno_to_sigma2(0.0, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("received_signal composes linearly") {
    const cdouble h1(0.5, -0.25), h2(-1.0, 2.0), x1(1.0, 0.0), x2(0.0, 1.0), n(0.01, -0.02);
    const cdouble r = received_signal(h1, x1, h2, x2, n);
    CHECK(r == h1 * x1 + h2 * x2 + n);
    CHECK(received_signal(h1, {0, 0}, h2, {0, 0}, {0, 0}) == cdouble(0, 0));
}

TEST_CASE("draw_link envelope statistics") {
    RandomStream rs(31, 0, 0);
    const double g = 1.7;
    const int n = 300000;
    double sumsq = 0, sum_cos = 0, sum_h2 = 0;
    for (int i = 0; i < n; ++i) {
        const Link l = draw_link(g, rs);
        sumsq += l.gamma * l.gamma;
        sum_cos += std::cos(l.alpha);
        sum_h2 += std::norm(l.h);
        CHECK(l.alpha >= 0.0);
        CHECK(l.alpha < 6.2831853072);
    }
    CHECK(sumsq / n == doctest::Approx(g).epsilon(0.02));
    CHECK(sum_h2 / n == doctest::Approx(g).epsilon(0.02));
    CHECK(std::abs(sum_cos / n) < 0.01);
}

TEST_CASE("draw_link envelope distribution is Rayleigh (one-sample KS)") {
    RandomStream rs(77, 0, 3);
    const double g = 1.0;
    std::vector<double> mags;
    mags.reserve(200000);
    for (int i = 0; i < 200000; ++i) mags.push_back(draw_link(g, rs).gamma);
    const double d = testsupport::ks_statistic(
        mags, [g](double x) { return x <= 0 ? 0.0 : 1.0 - std::exp(-x * x / g); });
    CHECK(d < 0.005);  // 1.36/sqrt(2e5) ~ 0.003
}

TEST_CASE("vector entries match scalar link magnitudes at nr=1 (two-sample KS)") {
    // different arithmetic paths (inverse CDF vs Box-Muller) must give one law
    RandomStream rs1(5, 0, 0), rs2(6, 0, 0);
    const double g = 2.0;
    std::vector<double> a, b;
    for (int i = 0; i < 150000; ++i) {
        a.push_back(draw_link(g, rs1).gamma);
        b.push_back(std::abs(draw_link_vector(1, g, rs2).h[0]));
    }
    CHECK(testsupport::ks_two_sample(a, b) < 0.006);
}

TEST_CASE("noise variance splits across components") {
    RandomStream rs(12, 0, 9);
    const double sigma2 = 0.36;
    const int n = 300000;
    double re2 = 0, im2 = 0, cross = 0;
    for (int i = 0; i < n; ++i) {
        const cdouble z = draw_noise(sigma2, rs);
        re2 += z.real() * z.real();
        im2 += z.imag() * z.imag();
        cross += z.real() * z.imag();
    }
    CHECK(re2 / n == doctest::Approx(sigma2 / 2).epsilon(0.02));
    CHECK(im2 / n == doctest::Approx(sigma2 / 2).epsilon(0.02));
    CHECK(std::abs(cross / n) < 0.002);
}

TEST_CASE("degenerate parameters throw") {
    RandomStream rs(1, 0, 0);
    CHECK_THROWS_AS(draw_link(0.0, rs), std::invalid_argument);
    CHECK_THROWS_AS(draw_link(-1.0, rs), std::invalid_argument);
    CHECK_THROWS_AS(draw_link_vector(0, 1.0, rs), std::invalid_argument);
}
