#include <ccinull/quadrature.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace ccinull {

namespace {

using Fn = std::function<double(double)>;

double simpson_estimate(double fa, double fm, double fb, double a, double b) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const Fn& f, double a, double fa, double m, double fm, double b,
             double fb, double whole, double abs_tol, double rel_tol,
             int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson_estimate(fa, flm, fm, a, m);
    const double right = simpson_estimate(fm, frm, fb, m, b);
    const double delta = left + right - whole;
    const double tol =
        std::max(abs_tol, rel_tol * std::abs(left + right));
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adapt(f, a, fa, lm, flm, m, fm, left, 0.5 * abs_tol, rel_tol,
                 depth - 1) +
           adapt(f, m, fm, rm, frm, b, fb, right, 0.5 * abs_tol, rel_tol,
                 depth - 1);
}

double adaptive_simpson(const Fn& f, double a, double b,
                        const QuadratureSpec& spec) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = simpson_estimate(fa, fm, fb, a, b);
    return adapt(f, a, fa, m, fm, b, fb, whole, spec.abs_tol, spec.rel_tol,
                 spec.max_depth);
}

// 16-point Gauss-Legendre abscissae/weights on [-1, 1], positive half.
constexpr double kGlNode[8] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
    0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
    0.9445750230732326, 0.9894009349916499};
constexpr double kGlWeight[8] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
    0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
    0.0622535239386479, 0.0271524594117541};

double gauss_legendre(const Fn& f, double a, double b,
                      const QuadratureSpec& spec) {
    const int n = std::max(1, spec.panels);
    const double h = (b - a) / n;
    double total = 0.0;
    for (int p = 0; p < n; ++p) {
        const double c = a + (p + 0.5) * h;
        const double r = 0.5 * h;
        double panel = 0.0;
        for (int k = 0; k < 8; ++k)
            panel += kGlWeight[k] *
                     (f(c - r * kGlNode[k]) + f(c + r * kGlNode[k]));
        total += panel * r;
    }
    return total;
}

}  // namespace

QuadratureSpec inner_spec(const QuadratureSpec& outer) {
    QuadratureSpec inner = outer;
    inner.abs_tol = outer.abs_tol * 0.1;
    inner.rel_tol = outer.rel_tol * 0.1;
    return inner;
}

double integrate(const Fn& f, double a, double b, const QuadratureSpec& spec) {
    if (!std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("integrate: endpoints must be finite");
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    switch (spec.kind) {
        case QuadratureSpec::Kind::adaptive_simpson:
            return sign * adaptive_simpson(f, a, b, spec);
        case QuadratureSpec::Kind::gauss_legendre:
            return sign * gauss_legendre(f, a, b, spec);
    }
    throw std::logic_error("integrate: unknown quadrature kind");
}

}  // namespace ccinull
