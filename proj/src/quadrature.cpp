#include "ouvol/quadrature.hpp"
#include "ouvol/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>

namespace ouvol {

namespace {

GlRule make_gl_rule(int order) {
    // Newton iteration on P_n; nodes symmetric about 0.
    GlRule r;
    r.x.resize(order);
    r.w.resize(order);
    const double pi = 3.141592653589793238462643383279502884;
    for (int k = 0; k < (order + 1) / 2; ++k) {
        double x = std::cos(pi * (k + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Evaluate P_n(x) and P'_n(x) by the three-term recurrence.
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= order; ++j) {
                double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        r.x[k] = -x;
        r.x[order - 1 - k] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.w[k] = w;
        r.w[order - 1 - k] = w;
    }
    return r;
}

std::mutex g_rule_mutex;
std::map<int, GlRule> g_rules;

template <class T>
QuadResult<T> adaptive_impl(const std::function<T(double)>& f, double a, double b,
                            const AdaptiveOptions& opt) {
    if (!(b > a))
        return {};
    const GlRule& rule = gl_rule(opt.order);

    struct Seg {
        double a, b, err;
        T val;
        bool operator<(const Seg& o) const { return err < o.err; }
    };

    auto eval_seg = [&](double lo, double hi) {
        T whole = detail::gl_panel<T>(f, lo, hi, rule);
        double mid = 0.5 * (lo + hi);
        T fine = detail::gl_panel<T>(f, lo, mid, rule) + detail::gl_panel<T>(f, mid, hi, rule);
        return Seg{lo, hi, std::abs(fine - whole), fine};
    };

    std::priority_queue<Seg> segs;
    T total{};
    double total_err = 0.0;
    int nseg = std::max(1, opt.initial_panels);
    for (int p = 0; p < nseg; ++p) {
        Seg s = eval_seg(a + (b - a) * p / nseg, a + (b - a) * (p + 1) / nseg);
        total += s.val;
        total_err += s.err;
        segs.push(s);
    }

    while (total_err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total)) &&
           nseg < opt.max_segments) {
        Seg worst = segs.top();
        segs.pop();
        total -= worst.val;
        total_err -= worst.err;
        double mid = 0.5 * (worst.a + worst.b);
        for (Seg s : {eval_seg(worst.a, mid), eval_seg(mid, worst.b)}) {
            total += s.val;
            total_err += s.err;
            segs.push(s);
        }
        ++nseg;
    }

    if (total_err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total)) &&
        total_err > 1e-13 * std::abs(total))
        throw tolerance_error("adaptive quadrature did not converge", total_err);
    return {total, total_err};
}

} // namespace

const GlRule& gl_rule(int order) {
    std::lock_guard<std::mutex> lock(g_rule_mutex);
    auto it = g_rules.find(order);
    if (it == g_rules.end())
        it = g_rules.emplace(order, make_gl_rule(order)).first;
    return it->second;
}

QuadResult<double> integrate_adaptive(const std::function<double(double)>& f,
                                      double a, double b, const AdaptiveOptions& opt) {
    return adaptive_impl<double>(f, a, b, opt);
}

QuadResult<std::complex<double>>
integrate_adaptive_complex(const std::function<std::complex<double>(double)>& f,
                           double a, double b, const AdaptiveOptions& opt) {
    return adaptive_impl<std::complex<double>>(f, a, b, opt);
}

QuadResult<double> integrate_to_infinity(const std::function<double(double)>& f,
                                         double a, double first_width,
                                         const AdaptiveOptions& opt, int max_doublings) {
    QuadResult<double> acc;
    double lo = a, width = first_width;
    int small_in_a_row = 0;
    for (int k = 0; k < max_doublings; ++k) {
        QuadResult<double> seg = integrate_adaptive(f, lo, lo + width, opt);
        acc.value += seg.value;
        acc.error += seg.error;
        double thresh = std::max(opt.abs_tol, opt.rel_tol * std::abs(acc.value));
        small_in_a_row = (std::abs(seg.value) < thresh) ? small_in_a_row + 1 : 0;
        if (small_in_a_row >= 2)
            return acc;
        lo += width;
        width *= 2.0;
    }
    throw tolerance_error("semi-infinite quadrature tail did not decay", acc.error);
}

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n)
        throw config_error("spline: need at least two knots and matching y");
    m_.assign(n, 0.0);
    if (n == 2)
        return;
    // Thomas algorithm for the natural-spline tridiagonal system.
    std::vector<double> c(n, 0.0), d(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        double h0 = x_[i] - x_[i - 1], h1 = x_[i + 1] - x_[i];
        double rhs = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
        double diag = 2.0 * (h0 + h1) - h0 * c[i - 1];
        c[i] = h1 / diag;
        d[i] = (rhs - h0 * d[i - 1]) / diag;
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        m_[i] = d[i] - c[i] * m_[i + 1];
        if (i == 1)
            break;
    }
}

double CubicSpline::operator()(double x) const {
    if (x <= x_.front())
        x = x_.front();
    if (x >= x_.back())
        x = x_.back();
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = std::min<std::size_t>(std::max<std::ptrdiff_t>(it - x_.begin() - 1, 0),
                                          x_.size() - 2);
    double h = x_[i + 1] - x_[i];
    double t = (x - x_[i]) / h;
    double u = 1.0 - t;
    return u * y_[i] + t * y_[i + 1] +
           h * h / 6.0 * ((u * u * u - u) * m_[i] + (t * t * t - t) * m_[i + 1]);
}

} // namespace ouvol
