#pragma once

#include <complex>
#include <optional>
#include <string>

#include <json.hpp>

namespace ouvol {

enum class Family { stable, gamma, inverse_gaussian, tempered_stable };

std::string family_name(Family f);

/// An infinitely divisible positive law, specified through its Lévy exponent
/// ψ(ω) = ∫ (1 - e^{-ωu}) ρ(du). Immutable after construction.
///
/// Families and parameters:
///   stable           ψ(ω) = ω^α / α,                      ρ(u) = u^{-α-1}/Γ(1-α)
///   gamma            ψ(ω) = a ln(1 + ω/b),                ρ(u) = a u^{-1} e^{-bu}
///   inverse_gaussian ψ(ω) = δ(√(γ² + 2ω) - γ),            ρ(u) = δ/√(2π) u^{-3/2} e^{-γ²u/2}
///   tempered_stable  ψ(ω) = c((ω+θ)^α - θ^α)/α,           ρ(u) = c/Γ(1-α) u^{-α-1} e^{-θu}
class LevyModel {
public:
    static LevyModel stable(double alpha);
    static LevyModel gamma_law(double shape, double rate);
    static LevyModel inverse_gaussian(double delta, double gamma);
    static LevyModel tempered_stable(double alpha, double theta, double scale);

    Family family() const { return family_; }
    double alpha() const { return alpha_; }
    double shape() const { return a_; }
    double rate() const { return b_; }
    double ig_delta() const { return a_; }
    double ig_gamma() const { return b_; }
    double ts_theta() const { return b_; }
    double ts_scale() const { return a_; }

    /// ∫ u ρ(du), or nullopt when the mean is infinite (stable α < 1).
    std::optional<double> mean_rate() const;
    bool has_finite_mean() const { return mean_rate().has_value(); }

    /// Largest s >= 0 such that ψ extends analytically to Re ω > -s.
    double analytic_abscissa() const;

private:
    LevyModel(Family f, double alpha, double a, double b)
        : family_(f), alpha_(alpha), a_(a), b_(b) {}
    Family family_;
    double alpha_; // stable / tempered index
    double a_;     // gamma shape | IG delta | TS scale c
    double b_;     // gamma rate  | IG gamma | TS tilt theta
};

/// Lévy exponent at ω. Principal branches throughout; ψ(0) = 0 exactly.
/// Throws domain_error outside {Re ω > -analytic_abscissa} (>= 0 for stable).
std::complex<double> psi(const LevyModel& m, std::complex<double> omega);
double psi(const LevyModel& m, double omega);

/// Lévy density ρ(u), u > 0.
double levy_density(const LevyModel& m, double u);

/// Tail mass N(ε) = ∫_ε^∞ ρ(du) in closed form.
double levy_tail_mass(const LevyModel& m, double eps);

/// ε-truncated exponent ψ_ε(ω) = ∫_ε^∞ (1 - e^{-ωu}) ρ(du).
double psi_truncated(const LevyModel& m, double omega, double eps);

std::optional<double> mean_rate(const LevyModel& m);

// ---------------------------------------------------------------------------
// Closed-form exponent constants for the stable family. Each form is
// homogeneous, Φ(ω) = k ω^α with k cached at construction.
// ---------------------------------------------------------------------------

enum class PhiKind { stable_phi0, stable_phi_i_lebesgue, stable_phi_i_exptilt };

/// kinds, with u_j = 1 - e^{-λjΔ}:
///   stable_phi0        k = 1/α². This is the exponent of the stationary
///                      initial value v0 = ∫_{y<=0} e^y z(dy):
///                      Φ0(ω) = ∫_0^1 ψ(ωu) du/u = ω^α/α², evaluated at the
///                      fully-loaded argument ω = Σ w_i b_i (b_i the v0
///                      loadings λ^{-1}e^{-λ(i-1)Δ}(1-e^{-λΔ})).
///   stable_phi_i_lebesgue  k = λ^{-α} ∫_{u_{i-1}}^{u_i} u^α/(α(1-u)) du,
///                      precomputed per (i, λ, Δ) via the equivalent
///                      well-conditioned form λ^{-α}/α ∫_{λ(i-1)Δ}^{λiΔ}
///                      (1-e^{-y})^α dy.
///   stable_phi_i_exptilt   k = λ^{-α} (u_i^{α+1} - u_{i-1}^{α+1}) / (α(α+1)).
struct PhiClosedForm {
    PhiKind kind;
    double alpha;
    double lambda;
    double delta;
    int i;    // interval index (>= 1); ignored for stable_phi0
    double k; // cached constant

    static PhiClosedForm make(PhiKind kind, double alpha, double lambda,
                              double delta, int i = 1);
};

/// Φ(ω) = k ω^α for ω >= 0.
double phi_closed(const PhiClosedForm& form, double omega);

/// Parses {"family": ..., <params>}; errors name the offending field.
LevyModel model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const LevyModel& m);

} // namespace ouvol
