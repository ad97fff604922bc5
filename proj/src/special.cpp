#include "ouvol/special.hpp"
#include "ouvol/error.hpp"
#include "ouvol/quadrature.hpp"

#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

namespace ouvol {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrt2Pi = 2.506628274631000502415765284811045253;
} // namespace

double normal_pdf(double x, double mean, double var) {
    if (!(var > 0.0))
        return 0.0;
    double z = x - mean;
    return std::exp(-0.5 * z * z / var) / (kSqrt2Pi * std::sqrt(var));
}

double log_normal_pdf(double x, double mean, double var) {
    double z = x - mean;
    return -0.5 * z * z / var - std::log(kSqrt2Pi) - 0.5 * std::log(var);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double upper_gamma(double a, double x) { return boost::math::tgamma(a, x); }

double upper_gamma_neg(double alpha, double x) {
    // Γ(1-α, x) = -α Γ(-α, x) + x^{-α} e^{-x}
    return (std::pow(x, -alpha) * std::exp(-x) - boost::math::tgamma(1.0 - alpha, x)) / alpha;
}

double expint_e1(double x) { return boost::math::expint(1, x); }

namespace {

// Zolotarev's A(u) for the standard positive stable law, u in (0, pi):
// A(u) = sin(αu)^{α/(1-α)} sin((1-α)u) / sin(u)^{1/(1-α)}.
// Increasing on (0, pi) with A(0+) = α^{α/(1-α)} (1-α).
double zolotarev_a(double alpha, double u) {
    double a = alpha / (1.0 - alpha);
    return std::exp(a * std::log(std::sin(alpha * u)) +
                    std::log(std::sin((1.0 - alpha) * u)) -
                    (1.0 + a) * std::log(std::sin(u)));
}

// Pareto-type series for the right tail: f(x) = (1/π) Σ_k (-1)^{k-1}
// Γ(kα+1)/k! sin(kπα) x^{-kα-1}.
double stable_tail_series(double alpha, double x, int terms) {
    double sum = 0.0, sign = 1.0;
    for (int k = 1; k <= terms; ++k) {
        double term = boost::math::tgamma(k * alpha + 1.0) /
                      boost::math::tgamma(k + 1.0) * std::sin(k * kPi * alpha) *
                      std::pow(x, -k * alpha - 1.0);
        sum += sign * term;
        sign = -sign;
    }
    return sum / kPi;
}

} // namespace

double stable_std_density(double alpha, double x, bool fast) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw domain_error("stable_std_density: alpha must lie in (0,1)");
    if (!(x > 0.0))
        return 0.0;

    // Switch to the tail series once its terms decay geometrically by >= 20x.
    double x_tail = std::pow(20.0, 1.0 / alpha);
    if (x >= x_tail)
        return stable_tail_series(alpha, x, 8);

    double a = alpha / (1.0 - alpha);
    double xa = std::pow(x, -a);
    double a_min = std::pow(alpha, a) * (1.0 - alpha);
    double m = a_min * xa;
    if (m > 700.0)
        return 0.0; // left tail underflows: f ~ exp(-A(0) x^{-a})

    auto integrand = [&](double u) {
        double A = zolotarev_a(alpha, u);
        double e = A * xa - m;
        return e > 700.0 ? 0.0 : A * std::exp(-e);
    };
    double integral;
    if (fast) {
        integral = integrate_fixed(integrand, 1e-12, kPi - 1e-12, 4, 24);
    } else {
        AdaptiveOptions opt;
        opt.rel_tol = 1e-11;
        opt.abs_tol = 1e-300;
        integral = integrate_adaptive(integrand, 1e-12, kPi - 1e-12, opt).value;
    }
    return a / kPi * std::pow(x, -a - 1.0) * std::exp(-m) * integral;
}

double stable_half_density(double k, double t) {
    if (!(t > 0.0))
        return 0.0;
    double e = k * k / (4.0 * t);
    if (e > 700.0)
        return 0.0;
    return k / (2.0 * std::sqrt(kPi)) * std::pow(t, -1.5) * std::exp(-e);
}

double stable_std_sample(double alpha, Rng& rng) {
    double u = rng.uniform(1e-12, kPi - 1e-12);
    double w = rng.exponential();
    return std::pow(zolotarev_a(alpha, u) / w, (1.0 - alpha) / alpha);
}

void stable_std_quantile_bracket(double alpha, double p_lo, double p_hi,
                                 double& x_lo, double& x_hi) {
    double a = alpha / (1.0 - alpha);
    double a_min = std::pow(alpha, a) * (1.0 - alpha);
    // P(S<=x) <= exp(-A(0) x^{-a}); P(S>x) ~ x^{-α}/Γ(1-α).
    x_lo = 0.5 * std::pow(a_min / std::log(1.0 / p_lo), 1.0 / a);
    double q = 1.0 - p_hi;
    x_hi = 2.0 * std::pow(1.0 / (q * boost::math::tgamma(1.0 - alpha)), 1.0 / alpha);
}

double kolmogorov_sf(double x) {
    if (x < 0.02)
        return 1.0;
    double sum = 0.0, sign = 1.0;
    for (int j = 1; j <= 200; ++j) {
        double term = std::exp(-2.0 * j * j * x * x);
        sum += sign * term;
        sign = -sign;
        if (term < 1e-16)
            break;
    }
    return std::min(1.0, std::max(0.0, 2.0 * sum));
}

} // namespace ouvol
