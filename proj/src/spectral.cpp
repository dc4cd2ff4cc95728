#include "zeno/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

namespace zeno {

namespace {

constexpr double kPi = std::numbers::pi;

// 15-point Kronrod nodes/weights on [-1,1] with the embedded 7-point
// Gauss rule (QUADPACK qk15 constants).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct PanelResult {
    double value;
    double error;
};

template <typename F>
PanelResult gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double hl = 0.5 * (b - a);
    const double fc = f(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = hl * kXgk[j];
        const double fsum = f(c - x) + f(c + x);
        resk += kWgk[j] * fsum;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }
    resk *= hl;
    resg *= hl;
    return {resk, std::abs(resk - resg)};
}

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

// Heap-driven adaptive integrator over an explicit panel decomposition.
// Panels can be appended after construction (tail extension); refinement
// splits the worst panel until the summed error estimate meets a target.
template <typename F>
class AdaptiveIntegral {
public:
    explicit AdaptiveIntegral(F f) : f_(std::move(f)) {}

    void add_panels(const std::vector<double>& boundaries) {
        for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
            const auto r = gk15(f_, boundaries[i], boundaries[i + 1]);
            heap_.push({boundaries[i], boundaries[i + 1], r.value, r.error});
            sum_ += r.value;
            err_ += r.error;
        }
    }

    void refine_to(double abs_target, int& budget) {
        while (err_ > abs_target) {
            if (budget <= 0)
                throw ToleranceNotMet("adaptive quadrature: subdivision budget exhausted");
            --budget;
            Panel worst = heap_.top();
            heap_.pop();
            sum_ -= worst.value;
            err_ -= worst.error;
            const double mid = 0.5 * (worst.a + worst.b);
            const auto l = gk15(f_, worst.a, mid);
            const auto r = gk15(f_, mid, worst.b);
            heap_.push({worst.a, mid, l.value, l.error});
            heap_.push({mid, worst.b, r.value, r.error});
            sum_ += l.value + r.value;
            err_ += l.error + r.error;
        }
    }

    double value() const { return sum_; }
    double error() const { return err_; }

private:
    F f_;
    std::priority_queue<Panel> heap_;
    double sum_ = 0.0;
    double err_ = 0.0;
};

double spectral_density_derivative(double omega, const SpectralParams& p) {
    const double d = omega * omega + p.alpha * p.alpha;
    return 2.0 * p.coupling * (p.alpha * p.alpha - omega * omega) / (d * d);
}

// Envelope of the integrand tail: g(w) = J(w) / (pi tau (w - dW)^2), so
// that J*F = g * (1 - cos(tau (w - dW))).
double tail_envelope(double omega, double tau, const SpectralParams& p) {
    const double u = omega - p.delta_omega;
    return spectral_density(omega, p) / (kPi * tau * u * u);
}

double tail_envelope_derivative(double omega, double tau, const SpectralParams& p) {
    const double u = omega - p.delta_omega;
    return (spectral_density_derivative(omega, p) * u - 2.0 * spectral_density(omega, p)) /
           (kPi * tau * u * u * u);
}

// Node-aligned boundaries for dW + k*h, k in (k_from, k_to], thinned to
// at most max_panels entries.
void append_node_boundaries(std::vector<double>& bounds, double base, double h,
                            long k_from, long k_to, long max_panels) {
    const long span = k_to - k_from;
    const long stride = std::max<long>(1, (span + max_panels - 1) / max_panels);
    for (long k = k_from + stride; k < k_to; k += stride)
        bounds.push_back(base + static_cast<double>(k) * h);
    bounds.push_back(base + static_cast<double>(k_to) * h);
}

// Geometric boundaries in (w - dW) from a to b, both > dW.
std::vector<double> log_boundaries(double dw, double a, double b, int n) {
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(n) + 1);
    const double ua = a - dw, ub = b - dw;
    const double ratio = std::pow(ub / ua, 1.0 / n);
    double u = ua;
    v.push_back(a);
    for (int i = 1; i < n; ++i) {
        u *= ratio;
        v.push_back(dw + u);
    }
    v.push_back(b);
    return v;
}

std::vector<double> left_peak_boundaries(double dw, double h, double a, long k_right) {
    std::vector<double> bounds;
    bounds.push_back(0.0);
    const long k_left = static_cast<long>(std::floor(dw / h * (1.0 - 1e-12)));
    for (long k = std::min<long>(k_left, 512); k >= 1; --k)
        bounds.push_back(dw - static_cast<double>(k) * h);
    bounds.push_back(dw);
    append_node_boundaries(bounds, dw, h, 0, k_right, 512);
    (void)a;
    return bounds;
}

} // namespace

void SpectralParams::validate() const {
    if (!(coupling > 0.0)) throw InvalidState("spectral params: coupling must be > 0");
    if (!(alpha > 0.0)) throw InvalidState("spectral params: alpha must be > 0");
    if (!(delta_omega > 0.0)) throw InvalidState("spectral params: delta_omega must be > 0");
}

void QuadratureOptions::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || !(tail_tol > 0.0) || max_subdivisions <= 0)
        throw InvalidState("quadrature options: all tolerances must be positive");
}

double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

double spectral_density(double omega, const SpectralParams& p) {
    if (omega < 0.0) throw InvalidState("spectral_density: omega must be >= 0");
    return 2.0 * p.coupling * omega / (omega * omega + p.alpha * p.alpha);
}

double modulating_function(double omega, double tau, const SpectralParams& p) {
    if (!(tau > 0.0)) throw InvalidState("modulating_function: tau must be > 0");
    const double s = sinc(0.5 * (omega - p.delta_omega) * tau);
    return tau / (2.0 * kPi) * s * s;
}

double natural_decay_rate(const SpectralParams& p) {
    p.validate();
    return spectral_density(p.delta_omega, p);
}

double certified_tail_bound(double omega_cut, double tau, const SpectralParams& p) {
    const double u = omega_cut - p.delta_omega;
    if (!(u > 0.0)) throw InvalidState("certified_tail_bound: omega_cut must exceed delta_omega");
    return 8.0 * p.coupling / (kPi * tau * u * u);
}

double effective_decay_rate(double tau, const SpectralParams& p, const QuadratureOptions& q) {
    p.validate();
    q.validate();
    if (!(tau > 0.0)) throw InvalidState("effective_decay_rate: tau must be > 0");

    const double dw = p.delta_omega;
    const double h = 2.0 * kPi / tau;  // sinc node spacing
    const double gamma0 = natural_decay_rate(p);
    int budget = q.max_subdivisions;

    auto integrand = [&p, tau](double w) {
        return spectral_density(w, p) * modulating_function(w, tau, p);
    };

    // Region A ends at a sinc node far enough out that the tail envelope
    // g is decreasing and convex, which the certified
    // integration-by-parts bounds on the oscillatory remainder require.
    const double a_floor = std::max({3.0 * dw, 3.0 * p.alpha, dw + h});
    long k_right = std::max<long>(4, static_cast<long>(std::ceil((a_floor - dw) / h)));

    AdaptiveIntegral region_a(integrand);
    region_a.add_panels(left_peak_boundaries(dw, h, dw + k_right * h, k_right));

    for (int round = 0; round < 64; ++round) {
        const double a = dw + static_cast<double>(k_right) * h;

        // Oscillatory remainder over [a, inf): two integrations by parts
        // give the estimate -g'(a)/tau^2 with remainder bounded by
        // |g'(a)|/tau^2 (a is node-aligned, so the boundary sine vanishes).
        const double gp = tail_envelope_derivative(a, tau, p);
        const double osc_correction = gp / (tau * tau);
        const double osc_error = std::abs(gp) / (tau * tau);

        double gamma_est = region_a.value() + osc_correction;
        double tol = std::max(q.abs_tol, q.rel_tol * std::abs(gamma_est));
        const double trunc_target = std::min(q.tail_tol * gamma0, 0.2 * tol);
        const double omega_cut =
            dw + std::sqrt(8.0 * p.coupling / (kPi * tau * trunc_target));
        const double trunc_bound = certified_tail_bound(omega_cut, tau, p);

        // Smooth part of the tail, int_a^{omega_cut} g, on geometric panels.
        AdaptiveIntegral smooth([&p, tau](double w) { return tail_envelope(w, tau, p); });
        smooth.add_panels(log_boundaries(dw, a, omega_cut, 48));
        smooth.refine_to(0.1 * tol, budget);

        gamma_est = region_a.value() + smooth.value() + osc_correction;
        tol = std::max(q.abs_tol, q.rel_tol * std::abs(gamma_est));
        const double fixed_err = osc_error + trunc_bound + smooth.error();

        if (fixed_err > 0.4 * tol) {
            // the analytic remainder dominates; push the boundary out and
            // integrate the newly exposed node band explicitly
            const long k_new = k_right * 2;
            std::vector<double> extra{a};
            append_node_boundaries(extra, dw, h, k_right, k_new, 256);
            region_a.add_panels(extra);
            k_right = k_new;
            continue;
        }

        region_a.refine_to(std::max(0.5 * (tol - fixed_err), 0.1 * q.abs_tol), budget);
        gamma_est = region_a.value() + smooth.value() + osc_correction;
        tol = std::max(q.abs_tol, q.rel_tol * std::abs(gamma_est));
        if (region_a.error() + fixed_err <= tol) return gamma_est;
    }
    throw ToleranceNotMet("effective_decay_rate: failed to converge");
}

double effective_decay_rate(double tau, const SpectralParams& p, const QuadratureOptions& q,
                            const FrequencyWeight& weight) {
    if (!weight) return effective_decay_rate(tau, p, q);
    p.validate();
    q.validate();
    if (!(tau > 0.0)) throw InvalidState("effective_decay_rate: tau must be > 0");

    // Generic path for a user-supplied multiplicative weight: brute
    // adaptive integration on [0, omega_cut] with node seeding. No
    // analytic tail acceleration is available for an arbitrary weight.
    const double dw = p.delta_omega;
    const double h = 2.0 * kPi / tau;
    const double trunc_target = q.tail_tol * natural_decay_rate(p);
    const double omega_cut = dw + std::sqrt(8.0 * p.coupling / (kPi * tau * trunc_target));

    AdaptiveIntegral integral([&p, tau, &weight](double w) {
        return spectral_density(w, p) * modulating_function(w, tau, p) * weight(w);
    });
    const long k_right = std::max<long>(1, static_cast<long>(std::ceil((omega_cut - dw) / h)));
    integral.add_panels(left_peak_boundaries(dw, h, omega_cut, k_right));

    int budget = q.max_subdivisions;
    for (int round = 0; round < 64; ++round) {
        const double tol = std::max(q.abs_tol, q.rel_tol * std::abs(integral.value()));
        integral.refine_to(tol, budget);
        if (integral.error() <= std::max(q.abs_tol, q.rel_tol * std::abs(integral.value())))
            return integral.value();
    }
    throw ToleranceNotMet("effective_decay_rate: failed to converge (weighted path)");
}

ZenoClass classify_zeno(double tau, const SpectralParams& p, const QuadratureOptions& q) {
    return classify_zeno(tau, p, q, kZenoBoundaryBand);
}

ZenoClass classify_zeno(double tau, const SpectralParams& p, const QuadratureOptions& q,
                        double boundary_band) {
    const double ratio = effective_decay_rate(tau, p, q) / natural_decay_rate(p);
    ZenoRegime regime = ZenoRegime::Boundary;
    if (ratio < 1.0 - boundary_band)
        regime = ZenoRegime::Zeno;
    else if (ratio > 1.0 + boundary_band)
        regime = ZenoRegime::AntiZeno;
    return {regime, ratio};
}

double jump_time(const SpectralParams& p, const QuadratureOptions& q, double tau_lo,
                 double tau_hi, double tol) {
    auto f = [&](double tau) { return effective_decay_rate(tau, p, q) - natural_decay_rate(p); };
    double flo = f(tau_lo);
    if (flo * f(tau_hi) > 0.0)
        throw InvalidState("jump_time: gamma(tau) - gamma_0 does not change sign on the bracket");
    while (tau_hi - tau_lo > tol) {
        const double mid = 0.5 * (tau_lo + tau_hi);
        const double fm = f(mid);
        if (flo * fm <= 0.0) {
            tau_hi = mid;
        } else {
            tau_lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (tau_lo + tau_hi);
}

} // namespace zeno
