#pragma once

#include "ouvol/kernels.hpp"
#include "ouvol/levy.hpp"
#include "ouvol/quadrature.hpp"

#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace ouvol {

/// Precomputed piece structure for exponents of the form
/// Λ(Σ w_i f_i + w_extra f_{s,t}); built once per window, evaluated many
/// times inside posterior and predictive quadratures.
class PreparedWindowExponent {
public:
    virtual ~PreparedWindowExponent() = default;
    virtual double eval(std::span<const double> w, double w_extra) const = 0;
};

/// The Laplace-functional exponent Λ of a Poisson random measure evaluated
/// on weighted kernel sums: Λ(f) = ∫ (1 - e^{-f}) dν, so that
/// E[e^{-Σ w_i τ_i}] = e^{-Λ(Σ w_i f_i)}. Implementations are immutable
/// after construction and safe for concurrent evaluation.
class ExponentEvaluator {
public:
    virtual ~ExponentEvaluator() = default;
    int n() const { return n_; }

    /// Λ(Σ w_i f_i) for non-negative weights; Λ(0) = 0.
    virtual double exponent(std::span<const double> w) const = 0;

    /// Λ(Σ w_i f_i + Σ c_i φ_i) with complex jump-kernel coefficients c_i
    /// (leverage path). Throws domain_error if the combined kernel leaves
    /// the analytic domain of ψ pointwise.
    virtual std::complex<double>
    exponent_complex(std::span<const double> w,
                     std::span<const std::complex<double>> c) const;

    /// Λ(w_extra · f_{s,t}) for the window kernel alone.
    virtual double window_exponent(double s, double t, double w_extra) const;

    /// Λ(Σ w_i f_i + w_extra · f_{s,t}).
    virtual double exponent_with_window(std::span<const double> w, double w_extra,
                                        double s, double t) const;

    virtual std::unique_ptr<PreparedWindowExponent> prepare_window(double s,
                                                                   double t) const;

    /// E[z_i] = (window length) x (jump mean rate), for leverage centering;
    /// nullopt when the driving law has infinite mean or no jump structure.
    virtual std::optional<double> leverage_mean_increment() const {
        return std::nullopt;
    }

protected:
    explicit ExponentEvaluator(int n) : n_(n) {}
    void check_w(std::span<const double> w) const;
    int n_;
};

/// Degenerate τ_i ≡ sigma2: Λ(Σ w_i f_i) = sigma2 Σ w_i. The Gaussian
/// reference model for identity checks.
class DeterministicExponent : public ExponentEvaluator {
public:
    DeterministicExponent(double sigma2, int n);
    double exponent(std::span<const double> w) const override;
    double window_exponent(double s, double t, double w_extra) const override;
    double exponent_with_window(std::span<const double> w, double w_extra,
                                double s, double t) const override;

private:
    double sigma2_;
};

/// τ_i i.i.d. with Lévy exponent ψ: Λ(Σ w_i f_i) = Σ ψ(w_i).
class IIDExponent : public ExponentEvaluator {
public:
    IIDExponent(LevyModel model, int n);
    double exponent(std::span<const double> w) const override;
    double window_exponent(double s, double t, double w_extra) const override;
    double exponent_with_window(std::span<const double> w, double w_extra,
                                double s, double t) const override;
    const LevyModel& model() const { return model_; }

private:
    LevyModel model_;
};

/// Exponent of the OU integrated-volatility kernels driven by ν(du,dy) =
/// ρ(du)η(dy). The BNS-OU variant evaluates
///   Λ(w) = Φ0(r_1) + Σ_i Φ_i(w_i | r_{i+1})
/// with each Φ a 1-D integral over its interval; the simplified variant
/// evaluates Φ0(s_n) + Σ Φ_i(w_i). For the stable family all pieces reduce
/// to cached closed forms (simplified) or to a single tabulated shape
/// function via homogeneity (BNS-OU), so that tensor-quadrature callers pay
/// O(n) arithmetic per evaluation.
class OUExponentEvaluator : public ExponentEvaluator {
public:
    OUExponentEvaluator(LevyModel model, OUModelSpec spec,
                        double inner_rel_tol = 1e-12);

    double exponent(std::span<const double> w) const override;
    std::complex<double>
    exponent_complex(std::span<const double> w,
                     std::span<const std::complex<double>> c) const override;
    double window_exponent(double s, double t, double w_extra) const override;
    double exponent_with_window(std::span<const double> w, double w_extra,
                                double s, double t) const override;
    std::unique_ptr<PreparedWindowExponent> prepare_window(double s,
                                                           double t) const override;
    std::optional<double> leverage_mean_increment() const override;

    /// Per-term breakdown [Φ0, Φ_1, ..., Φ_n] summing to exponent(w).
    std::vector<double> phi_terms(std::span<const double> w) const;

    /// Interval integral in observation time: ∫_{(i-1)Δ}^{iΔ} ψ(ζ(y)) dy
    /// with ζ(y) = λ^{-1} w_i (1-e^{-λ(iΔ-y)}) + r_{i+1} e^{λy} (BNS-OU).
    double interval_phi_yspace(int i, double w_i, double r_next) const;
    /// Same integral after u = 1 - e^{-λ(iΔ-y)}:
    /// λ^{-1} ∫_0^{1-e^{-λΔ}} ψ(r_{i+1} e^{λiΔ}(1-u) + λ^{-1} w_i u) du/(1-u).
    double interval_phi_uspace(int i, double w_i, double r_next) const;

    /// Simplified-variant interval integrals, y-space and u-space routes.
    double simplified_phi_yspace(int i, double w_i) const;
    double simplified_phi_uspace(int i, double w_i) const;

    /// Exponent of the stationary initial value v0 at argument x:
    /// Φ0(x) = ∫_0^1 ψ(x u) du/u  (= x^α/α² for the stable family).
    double phi0(double x) const;

    /// Λ restricted to the window actually simulated by the Monte Carlo
    /// backend: v0 history cut at y >= -history and, when eps > 0, jumps
    /// truncated below eps (ψ replaced by ψ_ε). Non-decreasing in history.
    double exponent_truncated(std::span<const double> w, double history,
                              double eps) const;

    const LevyModel& model() const { return model_; }
    const OUModelSpec& spec() const { return spec_; }

private:
    double interval_term_bns(double a, double b) const;  // ∫_0^Δ ψ(λ^{-1}a(1-e^{-λt}) + b e^{-λt}) dt
    double simplified_term(int i, double w) const;
    std::complex<double> piece_integral_complex(double lo, double hi, int obs_index,
                                                std::complex<double> c_active,
                                                std::span<const double> w,
                                                std::span<const double> bcoef) const;
    std::vector<double> bns_bcoefs(std::span<const double> w) const; // r_{i+1} e^{λiΔ}, well-conditioned

    LevyModel model_;
    OUModelSpec spec_;
    AdaptiveOptions inner_;
    bool stable_;
    double alpha_ = 0.0;

    // caches, fixed at construction
    std::vector<double> b_;             // v0 loadings
    std::vector<double> k_simplified_;  // simplified stable: Φ_i(w) = k_i w^α
    CubicSpline bns_shape_;             // BNS stable: G(a,b) = (a+b)^α shape(a/(a+b))
};

} // namespace ouvol
