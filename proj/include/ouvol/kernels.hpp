#pragma once

#include <span>
#include <string>
#include <vector>

namespace ouvol {

enum class Variant { bns_ou, simplified };
enum class Tilt { lebesgue, exponential };

std::string variant_name(Variant v);
std::string tilt_name(Tilt t);

/// Shape of one OU integrated-volatility model: mean-reversion rate λ,
/// observation interval Δ, number of observations n, and which kernel
/// family maps Poisson mass to the increments τ_i. The exponential tilt
/// replaces the Lebesgue base measure dy by e^{-y} dy on the positive axis
/// (simplified variant only).
struct OUModelSpec {
    Variant variant = Variant::bns_ou;
    double lambda = 1.0;
    double delta = 1.0;
    int n = 1;
    Tilt tilt = Tilt::lebesgue;

    void validate() const;

    /// v0 loading of interval i (1-based): b_i = λ^{-1} e^{-λ(i-1)Δ} (1 - e^{-λΔ}).
    double v0_loading(int i) const;
    /// Right end of the positive-axis support of the last τ kernel.
    double tau_support_end() const;
};

// Interval kernels, all 1-based in i and zero off their supports.

/// BNS-OU g_{i,1}: λ^{-1}(1-e^{-λ(iΔ-y)}) on ((i-1)Δ, iΔ] plus the v0 leg
/// b_i e^y on y <= 0.
double bns_g1(const OUModelSpec& s, int i, double y);
/// BNS-OU g_{i,2}: b_i e^{λy} on (0, (i-1)Δ].
double bns_g2(const OUModelSpec& s, int i, double y);
/// Simplified g_i: λ^{-1}(1-e^{-y}) on (λ(i-1)Δ, λiΔ] plus b_i e^y on y <= 0.
double simplified_g(const OUModelSpec& s, int i, double y);
/// Leverage jump kernel g_{i,3}: indicator of (λ(i-1)Δ, λiΔ].
double leverage_g3(const OUModelSpec& s, int i, double y);

/// The variant's τ kernel for interval i (g_{i,1}+g_{i,2} or g_i).
double tau_kernel(const OUModelSpec& s, int i, double y);

/// Kernel of the increment τ(t) - τ(s) over a generic window 0 <= s < t.
/// Evaluating at s=(i-1)Δ, t=iΔ reproduces the interval kernels.
struct WindowKernel {
    OUModelSpec spec;
    double s, t;
    double operator()(double y) const;
    /// v0 loading h_{2,s,t}: λ^{-1} e^{-λs} (1 - e^{-λ(t-s)}).
    double v0_coef() const;
};

WindowKernel kernel_window(const OUModelSpec& s, double w_start, double w_end);

/// r_{i} = λ^{-1} [Σ_{k=i}^{n} w_k e^{-λ(k-1)Δ}] (1 - e^{-λΔ}) for i=1..n,
/// plus the trailing r_{n+1} = 0; out[j] holds r_{j+1}.
std::vector<double> r_coefficients(std::span<const double> w, const OUModelSpec& s);

} // namespace ouvol
