#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace ouvol {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GlRule {
    std::vector<double> x;
    std::vector<double> w;
};

/// Returns the (cached) Gauss-Legendre rule of the given order.
const GlRule& gl_rule(int order);

/// Result of a 1-D quadrature: value and an error estimate in the same units.
template <class T>
struct QuadResult {
    T value{};
    double error = 0.0;
};

namespace detail {

template <class T, class F>
T gl_panel(F&& f, double a, double b, const GlRule& rule) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    T sum{};
    for (std::size_t k = 0; k < rule.x.size(); ++k)
        sum += static_cast<T>(rule.w[k] * 1.0) * f(mid + half * rule.x[k]);
    return sum * half;
}

} // namespace detail

/// Composite fixed-panel Gauss-Legendre quadrature of f over [a, b].
template <class F>
auto integrate_fixed(F&& f, double a, double b, int panels, int order = 16)
    -> decltype(f(a)) {
    using T = decltype(f(a));
    const GlRule& rule = gl_rule(order);
    T sum{};
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p)
        sum += detail::gl_panel<T>(f, a + p * h, a + (p + 1) * h, rule);
    return sum;
}

struct AdaptiveOptions {
    double rel_tol = 1e-12;
    double abs_tol = 0.0;     // used when the integral is (near) zero
    int max_segments = 4000;  // refinement budget
    int order = 16;
    int initial_panels = 4;
};

/// Globally adaptive Gauss-Legendre quadrature: repeatedly bisects the
/// segment with the largest error estimate until the summed estimate is
/// below max(abs_tol, rel_tol * |integral|). Throws tolerance_error if the
/// segment budget is exhausted first.
QuadResult<double> integrate_adaptive(const std::function<double(double)>& f,
                                      double a, double b,
                                      const AdaptiveOptions& opt = {});

QuadResult<std::complex<double>>
integrate_adaptive_complex(const std::function<std::complex<double>(double)>& f,
                           double a, double b, const AdaptiveOptions& opt = {});

/// Integrates f over [a, inf) by adaptive integration of geometrically
/// growing segments [a, a+h], [a+h, a+3h], ...; stops once two consecutive
/// segments contribute less than rel_tol * |accumulated| each.
QuadResult<double> integrate_to_infinity(const std::function<double(double)>& f,
                                         double a, double first_width,
                                         const AdaptiveOptions& opt = {},
                                         int max_doublings = 60);

/// Natural cubic spline through (x_i, y_i); x strictly increasing.
class CubicSpline {
public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    bool empty() const { return x_.empty(); }
    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

private:
    std::vector<double> x_, y_, m_; // m_: second derivatives at knots
};

} // namespace ouvol
