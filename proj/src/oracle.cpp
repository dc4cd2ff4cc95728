#include "zeno/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zeno::oracle {

namespace {
constexpr double kPi = std::numbers::pi;
}

namespace {

double trapezoid_segment(double tau, const SpectralParams& p, double a, double b,
                         std::size_t points) {
    auto f = [&](double w) {
        const double x = 0.5 * (w - p.delta_omega) * tau;
        const double s = std::sin(x);
        const double sinc2 = std::abs(x) < 1e-8 ? 1.0 : (s / x) * (s / x);
        return (2.0 * p.coupling * w / (w * w + p.alpha * p.alpha)) *
               (tau / (2.0 * kPi)) * sinc2;
    };
    const double h = (b - a) / static_cast<double>(points - 1);
    double sum = 0.5 * (f(a) + f(b));
    for (std::size_t i = 1; i + 1 < points; ++i) sum += f(a + h * static_cast<double>(i));
    return sum * h;
}

// Fine segment over the spectral-density peak, coarse segment to the cut.
double trapezoid_pass(double tau, const SpectralParams& p, double omega_cut,
                      std::size_t points) {
    const double split = std::min(p.delta_omega + 10.0 * std::max(1.0, p.alpha),
                                  0.5 * omega_cut);
    return trapezoid_segment(tau, p, 0.0, split, points / 2) +
           trapezoid_segment(tau, p, split, omega_cut, points - points / 2);
}

} // namespace

double trapezoid_decay_rate(double tau, const SpectralParams& p, std::size_t points) {
    // Two passes: a coarse estimate fixes the scale of gamma, then the
    // truncation radius is set so the analytic tail remainder
    // 2 Lambda / (pi tau (R - dW)^2) sits at 1e-7 of gamma itself.
    const double gamma0 = spectral_density(p.delta_omega, p);
    const double cut1 =
        p.delta_omega + std::sqrt(2.0 * p.coupling / (kPi * tau * 1e-6 * gamma0));
    const double gamma1 = trapezoid_pass(tau, p, cut1, points / 4);
    const double cut2 =
        p.delta_omega + std::sqrt(2.0 * p.coupling / (kPi * tau * 1e-7 * gamma1));
    return trapezoid_pass(tau, p, cut2, points);
}

double trapezoid_modulating_area(double tau, const SpectralParams& p, double half_width,
                                 std::size_t points) {
    auto f = [&](double w) { return modulating_function(w, tau, p); };
    const double a = p.delta_omega - half_width, b = p.delta_omega + half_width;
    const double h = (b - a) / static_cast<double>(points - 1);
    double sum = 0.5 * (f(a) + f(b));
    for (std::size_t i = 1; i + 1 < points; ++i) sum += f(a + h * static_cast<double>(i));
    return sum * h;
}

namespace {

// Number of eigenvalues of m strictly below shift, from the inertia of
// the LDL^dagger factorization of (m - shift I). Returns -1 when a pivot
// degenerates (caller nudges the shift).
int count_below(const ComplexMatrix& m, double shift) {
    const std::size_t n = m.dim();
    ComplexMatrix a = m;
    for (std::size_t i = 0; i < n; ++i) a(i, i) -= shift;

    int negatives = 0;
    double scale = std::max(1.0, m.max_abs());
    for (std::size_t k = 0; k < n; ++k) {
        const double d = a(k, k).real();
        if (std::abs(d) < 1e-14 * scale) return -1;
        if (d < 0.0) ++negatives;
        for (std::size_t i = k + 1; i < n; ++i) {
            const complexd factor = a(i, k) / d;
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) -= factor * std::conj(a(j, k));
        }
    }
    return negatives;
}

int count_below_robust(const ComplexMatrix& m, double shift) {
    double eps = 0.0;
    const double scale = std::max(1.0, m.max_abs());
    for (int attempt = 0; attempt < 8; ++attempt) {
        const int c = count_below(m, shift + eps);
        if (c >= 0) return c;
        eps = (eps == 0.0 ? 1e-13 : 3.0 * eps) * scale;
    }
    throw std::runtime_error("inertia bisection: persistent pivot degeneracy");
}

} // namespace

std::vector<double> eigenvalues_bisection(const ComplexMatrix& m, double tol) {
    const std::size_t n = m.dim();
    // Gershgorin bounds
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) radius += std::abs(m(i, j));
        lo = std::min(lo, m(i, i).real() - radius);
        hi = std::max(hi, m(i, i).real() + radius);
    }
    lo -= 1.0;
    hi += 1.0;

    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        double a = lo, b = hi;
        // find lambda_k: smallest x with count_below(x) >= k+1
        while (b - a > tol) {
            const double mid = 0.5 * (a + b);
            if (count_below_robust(m, mid) >= static_cast<int>(k) + 1)
                b = mid;
            else
                a = mid;
        }
        out[k] = 0.5 * (a + b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

RCAmplitudes rk4_rc_amplitudes(double t, const RCParams& p, double step) {
    // two-site state (donor, acceptor); the sink drains the acceptor:
    // d psi/dt = -i H psi with H = [[0, V], [V, -i lambda_c / 2]]
    const double v = p.coupling;
    const complexd haa{0.0, -0.5 * p.lambda_c};
    auto deriv = [&](const std::array<complexd, 2>& s) {
        return std::array<complexd, 2>{
            complexd{0.0, -1.0} * (v * s[1]),
            complexd{0.0, -1.0} * (v * s[0] + haa * s[1]),
        };
    };

    std::array<complexd, 2> psi{1.0, 0.0};
    const long nsteps = std::lround(std::ceil(t / step));
    const double h = nsteps > 0 ? t / static_cast<double>(nsteps) : 0.0;
    for (long i = 0; i < nsteps; ++i) {
        const auto k1 = deriv(psi);
        const auto k2 = deriv({psi[0] + 0.5 * h * k1[0], psi[1] + 0.5 * h * k1[1]});
        const auto k3 = deriv({psi[0] + 0.5 * h * k2[0], psi[1] + 0.5 * h * k2[1]});
        const auto k4 = deriv({psi[0] + h * k3[0], psi[1] + h * k3[1]});
        psi[0] += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
        psi[1] += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
    }

    RCAmplitudes r{};
    r.xi2 = std::norm(psi[0]);
    r.eta2 = std::norm(psi[1]);
    r.chi2 = 1.0 - r.xi2 - r.eta2;
    return r;
}

} // namespace zeno::oracle
