#include "ouvol/levy.hpp"
#include "ouvol/error.hpp"
#include "ouvol/quadrature.hpp"
#include "ouvol/special.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

namespace ouvol {

namespace {
using cd = std::complex<double>;

void require(bool ok, const std::string& field, const std::string& what) {
    if (!ok)
        throw config_error(field + ": " + what);
}
} // namespace

std::string family_name(Family f) {
    switch (f) {
    case Family::stable: return "stable";
    case Family::gamma: return "gamma";
    case Family::inverse_gaussian: return "inverse_gaussian";
    case Family::tempered_stable: return "tempered_stable";
    }
    return "?";
}

LevyModel LevyModel::stable(double alpha) {
    require(alpha > 0.0 && alpha < 1.0, "model.alpha", "must lie in (0,1)");
    return LevyModel(Family::stable, alpha, 0.0, 0.0);
}

LevyModel LevyModel::gamma_law(double shape, double rate) {
    require(shape > 0.0, "model.a", "must be positive");
    require(rate > 0.0, "model.b", "must be positive");
    return LevyModel(Family::gamma, 0.0, shape, rate);
}

LevyModel LevyModel::inverse_gaussian(double delta, double gamma) {
    require(delta > 0.0, "model.delta", "must be positive");
    require(gamma > 0.0, "model.gamma", "must be positive");
    return LevyModel(Family::inverse_gaussian, 0.0, delta, gamma);
}

LevyModel LevyModel::tempered_stable(double alpha, double theta, double scale) {
    require(alpha > 0.0 && alpha < 1.0, "model.alpha", "must lie in (0,1)");
    require(theta > 0.0, "model.theta", "must be positive");
    require(scale > 0.0, "model.c", "must be positive");
    return LevyModel(Family::tempered_stable, alpha, scale, theta);
}

std::optional<double> LevyModel::mean_rate() const {
    switch (family_) {
    case Family::stable:
        return std::nullopt; // ∫^∞ u·u^{-α-1} du diverges for α < 1
    case Family::gamma:
        return a_ / b_;
    case Family::inverse_gaussian:
        return a_ / b_; // δ/γ
    case Family::tempered_stable:
        return a_ * std::pow(b_, alpha_ - 1.0); // c θ^{α-1}
    }
    return std::nullopt;
}

double LevyModel::analytic_abscissa() const {
    switch (family_) {
    case Family::stable: return 0.0;
    case Family::gamma: return b_;
    case Family::inverse_gaussian: return 0.5 * b_ * b_;
    case Family::tempered_stable: return b_;
    }
    return 0.0;
}

std::optional<double> mean_rate(const LevyModel& m) { return m.mean_rate(); }

std::complex<double> psi(const LevyModel& m, cd omega) {
    if (omega == cd(0.0, 0.0))
        return 0.0;
    if (omega.real() < -m.analytic_abscissa() ||
        (m.family() == Family::stable && omega.real() < 0.0))
        throw domain_error("psi: omega outside the analytic domain of " +
                           family_name(m.family()));
    switch (m.family()) {
    case Family::stable:
        return std::pow(omega, m.alpha()) / m.alpha();
    case Family::gamma:
        return m.shape() * std::log(1.0 + omega / m.rate());
    case Family::inverse_gaussian: {
        double g = m.ig_gamma();
        return m.ig_delta() * (std::sqrt(cd(g * g, 0.0) + 2.0 * omega) - g);
    }
    case Family::tempered_stable: {
        double th = m.ts_theta(), al = m.alpha();
        return m.ts_scale() * (std::pow(omega + th, al) - std::pow(th, al)) / al;
    }
    }
    return 0.0;
}

double psi(const LevyModel& m, double omega) {
    if (omega == 0.0)
        return 0.0;
    if (omega < -m.analytic_abscissa() ||
        (m.family() == Family::stable && omega < 0.0))
        throw domain_error("psi: omega outside the analytic domain of " +
                           family_name(m.family()));
    switch (m.family()) {
    case Family::stable:
        return std::pow(omega, m.alpha()) / m.alpha();
    case Family::gamma:
        return m.shape() * std::log1p(omega / m.rate());
    case Family::inverse_gaussian: {
        double g = m.ig_gamma();
        return m.ig_delta() * (std::sqrt(g * g + 2.0 * omega) - g);
    }
    case Family::tempered_stable: {
        double th = m.ts_theta(), al = m.alpha();
        return m.ts_scale() * (std::pow(omega + th, al) - std::pow(th, al)) / al;
    }
    }
    return 0.0;
}

double levy_density(const LevyModel& m, double u) {
    if (!(u > 0.0))
        throw domain_error("levy_density: u must be positive");
    switch (m.family()) {
    case Family::stable:
        return std::pow(u, -m.alpha() - 1.0) / boost::math::tgamma(1.0 - m.alpha());
    case Family::gamma:
        return m.shape() / u * std::exp(-m.rate() * u);
    case Family::inverse_gaussian:
        return m.ig_delta() / std::sqrt(2.0 * 3.141592653589793) *
               std::pow(u, -1.5) * std::exp(-0.5 * m.ig_gamma() * m.ig_gamma() * u);
    case Family::tempered_stable:
        return m.ts_scale() / boost::math::tgamma(1.0 - m.alpha()) *
               std::pow(u, -m.alpha() - 1.0) * std::exp(-m.ts_theta() * u);
    }
    return 0.0;
}

double levy_tail_mass(const LevyModel& m, double eps) {
    if (!(eps > 0.0))
        throw domain_error("levy_tail_mass: eps must be positive");
    switch (m.family()) {
    case Family::stable:
        return std::pow(eps, -m.alpha()) /
               (m.alpha() * boost::math::tgamma(1.0 - m.alpha()));
    case Family::gamma:
        return m.shape() * expint_e1(m.rate() * eps);
    case Family::inverse_gaussian: {
        double c = 0.5 * m.ig_gamma() * m.ig_gamma();
        double t = 2.0 * std::exp(-c * eps) / std::sqrt(eps) -
                   2.0 * std::sqrt(3.141592653589793 * c) * std::erfc(std::sqrt(c * eps));
        return m.ig_delta() / std::sqrt(2.0 * 3.141592653589793) * t;
    }
    case Family::tempered_stable: {
        double th = m.ts_theta(), al = m.alpha();
        return m.ts_scale() / boost::math::tgamma(1.0 - al) * std::pow(th, al) *
               upper_gamma_neg(al, th * eps);
    }
    }
    return 0.0;
}

double psi_truncated(const LevyModel& m, double omega, double eps) {
    if (omega == 0.0)
        return 0.0;
    // ψ_ε = ψ - ∫_0^ε (1-e^{-ωu}) ρ(du); the small-jump part is computed
    // directly since it is the small quantity.
    AdaptiveOptions opt;
    opt.rel_tol = 1e-11;
    opt.abs_tol = 1e-300;
    auto f = [&](double u) { return -std::expm1(-omega * u) * levy_density(m, u); };
    double small = integrate_adaptive(f, 0.0, eps, opt).value;
    return psi(m, omega) - small;
}

PhiClosedForm PhiClosedForm::make(PhiKind kind, double alpha, double lambda,
                                  double delta, int i) {
    require(alpha > 0.0 && alpha < 1.0, "phi.alpha", "must lie in (0,1)");
    require(lambda > 0.0, "phi.lambda", "must be positive");
    require(delta > 0.0, "phi.delta", "must be positive");
    require(i >= 1 || kind == PhiKind::stable_phi0, "phi.i", "must be >= 1");

    PhiClosedForm f{kind, alpha, lambda, delta, i, 0.0};
    switch (kind) {
    case PhiKind::stable_phi0:
        f.k = 1.0 / (alpha * alpha);
        break;
    case PhiKind::stable_phi_i_lebesgue: {
        // λ^{-α}/α ∫_{λ(i-1)Δ}^{λiΔ} (1-e^{-y})^α dy; equals the u-space form
        // λ^{-α} ∫ u^α/(α(1-u)) du but has no near-singular endpoint.
        AdaptiveOptions opt;
        opt.rel_tol = 1e-13;
        auto g = [alpha](double y) { return std::pow(-std::expm1(-y), alpha); };
        double j = integrate_adaptive(g, lambda * (i - 1) * delta,
                                      lambda * i * delta, opt).value;
        f.k = std::pow(lambda, -alpha) / alpha * j;
        break;
    }
    case PhiKind::stable_phi_i_exptilt: {
        double ui = -std::expm1(-lambda * i * delta);
        double um = -std::expm1(-lambda * (i - 1) * delta);
        f.k = std::pow(lambda, -alpha) *
              (std::pow(ui, alpha + 1.0) - std::pow(um, alpha + 1.0)) /
              (alpha * (alpha + 1.0));
        break;
    }
    }
    return f;
}

double phi_closed(const PhiClosedForm& form, double omega) {
    if (omega == 0.0)
        return 0.0;
    if (omega < 0.0)
        throw domain_error("phi_closed: omega must be non-negative");
    return form.k * std::pow(omega, form.alpha);
}

LevyModel model_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("family"))
        throw config_error("model.family: missing");
    if (!j["family"].is_string())
        throw config_error("model.family: must be a string");
    std::string fam = j["family"].get<std::string>();

    auto num = [&](const char* key) {
        if (!j.contains(key))
            throw config_error(std::string("model.") + key + ": missing");
        if (!j[key].is_number())
            throw config_error(std::string("model.") + key + ": must be a number");
        return j[key].get<double>();
    };

    if (fam == "stable")
        return LevyModel::stable(num("alpha"));
    if (fam == "gamma")
        return LevyModel::gamma_law(num("a"), num("b"));
    if (fam == "inverse_gaussian")
        return LevyModel::inverse_gaussian(num("delta"), num("gamma"));
    if (fam == "tempered_stable")
        return LevyModel::tempered_stable(num("alpha"), num("theta"), num("c"));
    throw config_error("model.family: unknown family '" + fam + "'");
}

nlohmann::json model_to_json(const LevyModel& m) {
    nlohmann::json j;
    j["family"] = family_name(m.family());
    switch (m.family()) {
    case Family::stable:
        j["alpha"] = m.alpha();
        break;
    case Family::gamma:
        j["a"] = m.shape();
        j["b"] = m.rate();
        break;
    case Family::inverse_gaussian:
        j["delta"] = m.ig_delta();
        j["gamma"] = m.ig_gamma();
        break;
    case Family::tempered_stable:
        j["alpha"] = m.alpha();
        j["theta"] = m.ts_theta();
        j["c"] = m.ts_scale();
        break;
    }
    return j;
}

} // namespace ouvol
