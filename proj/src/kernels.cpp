#include "ouvol/kernels.hpp"
#include "ouvol/error.hpp"

#include <cmath>

namespace ouvol {

std::string variant_name(Variant v) {
    return v == Variant::bns_ou ? "bns_ou" : "simplified";
}

std::string tilt_name(Tilt t) {
    return t == Tilt::lebesgue ? "lebesgue" : "exponential";
}

void OUModelSpec::validate() const {
    if (!(lambda > 0.0))
        throw config_error("spec.lambda: must be positive");
    if (!(delta > 0.0))
        throw config_error("spec.delta: must be positive");
    if (n < 1)
        throw config_error("spec.n: must be >= 1");
    if (variant == Variant::bns_ou && tilt == Tilt::exponential)
        throw config_error("spec.tilt: exponential tilt applies to the simplified variant only");
}

double OUModelSpec::v0_loading(int i) const {
    return -std::expm1(-lambda * delta) / lambda * std::exp(-lambda * (i - 1) * delta);
}

double OUModelSpec::tau_support_end() const {
    return variant == Variant::bns_ou ? n * delta : lambda * n * delta;
}

double bns_g1(const OUModelSpec& s, int i, double y) {
    if (y <= 0.0)
        return s.v0_loading(i) * std::exp(y);
    if (y > (i - 1) * s.delta && y <= i * s.delta)
        return -std::expm1(-s.lambda * (i * s.delta - y)) / s.lambda;
    return 0.0;
}

double bns_g2(const OUModelSpec& s, int i, double y) {
    if (y > 0.0 && y <= (i - 1) * s.delta)
        return s.v0_loading(i) * std::exp(s.lambda * y);
    return 0.0;
}

double simplified_g(const OUModelSpec& s, int i, double y) {
    if (y <= 0.0)
        return s.v0_loading(i) * std::exp(y);
    if (y > s.lambda * (i - 1) * s.delta && y <= s.lambda * i * s.delta)
        return -std::expm1(-y) / s.lambda;
    return 0.0;
}

double leverage_g3(const OUModelSpec& s, int i, double y) {
    return (y > s.lambda * (i - 1) * s.delta && y <= s.lambda * i * s.delta) ? 1.0 : 0.0;
}

double tau_kernel(const OUModelSpec& s, int i, double y) {
    return s.variant == Variant::bns_ou ? bns_g1(s, i, y) + bns_g2(s, i, y)
                                        : simplified_g(s, i, y);
}

double WindowKernel::operator()(double y) const {
    const double lam = spec.lambda;
    if (spec.variant == Variant::bns_ou) {
        if (y <= 0.0)
            return v0_coef() * std::exp(y);
        if (y <= s)
            return v0_coef() * std::exp(lam * y);
        if (y <= t)
            return -std::expm1(-lam * (t - y)) / lam;
        return 0.0;
    }
    if (y <= 0.0)
        return v0_coef() * std::exp(y);
    if (y > lam * s && y <= lam * t)
        return -std::expm1(-y) / lam;
    return 0.0;
}

double WindowKernel::v0_coef() const {
    return -std::expm1(-spec.lambda * (t - s)) / spec.lambda * std::exp(-spec.lambda * s);
}

WindowKernel kernel_window(const OUModelSpec& spec, double w_start, double w_end) {
    if (!(w_start >= 0.0) || !(w_end > w_start))
        throw config_error("window: need 0 <= s < t");
    return WindowKernel{spec, w_start, w_end};
}

std::vector<double> r_coefficients(std::span<const double> w, const OUModelSpec& s) {
    if (static_cast<int>(w.size()) != s.n)
        throw config_error("w: length must equal spec.n");
    for (double wi : w)
        if (!(wi >= 0.0))
            throw config_error("w: weights must be non-negative");
    // r_i = λ^{-1}(1-e^{-λΔ}) Σ_{k>=i} w_k e^{-λ(k-1)Δ}, accumulated backward.
    std::vector<double> r(s.n + 1, 0.0);
    const double front = -std::expm1(-s.lambda * s.delta) / s.lambda;
    double tail = 0.0;
    for (int i = s.n; i >= 1; --i) {
        tail += w[i - 1] * std::exp(-s.lambda * (i - 1) * s.delta);
        r[i - 1] = front * tail;
    }
    return r;
}

} // namespace ouvol
