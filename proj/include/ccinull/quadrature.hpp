#pragma once

#include <functional>

namespace ccinull {

// One-dimensional quadrature on a finite interval. The adaptive rule is the
// default everywhere; Gauss-Legendre is kept as a cross-check since the two
// fail in different ways (subdivision starvation vs panel under-resolution).
struct QuadratureSpec {
    enum class Kind { adaptive_simpson, gauss_legendre };
    Kind kind = Kind::adaptive_simpson;
    double abs_tol = 1e-9;
    double rel_tol = 1e-7;
    int max_depth = 30;  // adaptive only
    int panels = 64;     // gauss_legendre only
};

// Spec for the inner integral of a nested quadrature. Inner error feeds the
// outer integrand, so it gets 10x tighter tolerances.
QuadratureSpec inner_spec(const QuadratureSpec& outer);

// Integrates f over [a, b]. Orientation-aware: a > b flips the sign.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

}  // namespace ccinull
