#include <doctest.h>

#include <cmath>
#include <numbers>

#include "zeno/oracle.hpp"
#include "zeno/spectral.hpp"

using namespace zeno;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("spectral density hand values and peak") {
    SpectralParams p;  // coupling 0.01, alpha 0.25, delta_omega 1
    // J(1) = 2*0.01*1 / (1 + 0.0625) = 0.02 / 1.0625
    CHECK(spectral_density(1.0, p) == doctest::Approx(0.02 / 1.0625).epsilon(1e-14));
    CHECK(natural_decay_rate(p) == doctest::Approx(0.02 / 1.0625).epsilon(1e-14));
    CHECK(spectral_density(0.0, p) == doctest::Approx(0.0));

    // peak at omega = alpha, value Lambda / alpha
    const double peak = spectral_density(p.alpha, p);
    CHECK(peak == doctest::Approx(p.coupling / p.alpha).epsilon(1e-14));
    CHECK(spectral_density(p.alpha * 0.9, p) < peak);
    CHECK(spectral_density(p.alpha * 1.1, p) < peak);

    CHECK_THROWS_AS(spectral_density(-0.1, p), InvalidState);
}

TEST_CASE("parameter validation") {
    SpectralParams p;
    p.coupling = 0.0;
    CHECK_THROWS_AS(p.validate(), InvalidState);
    p = {};
    p.alpha = -1.0;
    CHECK_THROWS_AS(p.validate(), InvalidState);
    p = {};
    p.delta_omega = 0.0;
    CHECK_THROWS_AS(p.validate(), InvalidState);

    QuadratureOptions q;
    q.rel_tol = 0.0;
    CHECK_THROWS_AS(q.validate(), InvalidState);
}

TEST_CASE("sinc behavior near zero") {
    CHECK(sinc(0.0) == 1.0);
    CHECK(sinc(1e-9) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(sinc(kPi) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(sinc(0.5) == doctest::Approx(std::sin(0.5) / 0.5).epsilon(1e-15));
}

TEST_CASE("modulating function: peak, zeros, unit area") {
    SpectralParams p;
    const double tau = 2.0;
    // peak value tau / 2 pi at omega = delta_omega
    CHECK(modulating_function(p.delta_omega, tau, p) ==
          doctest::Approx(tau / (2.0 * kPi)).epsilon(1e-14));
    // zeros at omega = delta_omega + 2 pi k / tau
    for (int k = 1; k <= 3; ++k) {
        const double w = p.delta_omega + 2.0 * kPi * k / tau;
        CHECK(std::abs(modulating_function(w, tau, p)) < 1e-16);
    }
    // unit area over omega; window tail is 2/(pi tau W) ~ 6e-7 and the
    // grid keeps ~50 samples per sinc oscillation
    for (double t : {0.5, 1.0, 5.0}) {
        const double area =
            oracle::trapezoid_modulating_area(t, p, 1.0e6 / t, 16'000'001);
        CHECK(area == doctest::Approx(1.0).epsilon(2e-6));
    }

    CHECK_THROWS_AS(modulating_function(1.0, 0.0, p), InvalidState);
}

TEST_CASE("decay rate matches the trapezoid oracle on the probe grid") {
    SpectralParams p;
    QuadratureOptions q;
    for (double tau : {0.05, 0.2, 0.5, 1.0, 2.0}) {
        for (double alpha : {0.05, 0.1, 0.25, 0.5, 1.0}) {
            p.alpha = alpha;
            const double fast = effective_decay_rate(tau, p, q);
            const double ref = oracle::trapezoid_decay_rate(tau, p);
            CHECK(std::abs(fast - ref) <= 1e-6 * ref);
        }
    }
}

TEST_CASE("decay rate limits") {
    SpectralParams p;
    QuadratureOptions q;
    const double g0 = natural_decay_rate(p);
    // frequent measurement suppresses the rate far below gamma_0
    CHECK(effective_decay_rate(1e-4, p, q) < 1e-3 * g0);
    // rare measurement recovers the golden-rule rate
    CHECK(effective_decay_rate(200.0, p, q) ==
          doctest::Approx(g0).epsilon(0.05));
    CHECK_THROWS_AS(effective_decay_rate(0.0, p, q), InvalidState);
    CHECK_THROWS_AS(effective_decay_rate(-1.0, p, q), InvalidState);
}

TEST_CASE("decay rate scales linearly in the coupling") {
    SpectralParams p1, p2;
    p2.coupling = 7.5 * p1.coupling;
    QuadratureOptions q;
    for (double tau : {0.1, 1.0, 3.0}) {
        const double g1 = effective_decay_rate(tau, p1, q);
        const double g2 = effective_decay_rate(tau, p2, q);
        CHECK(std::abs(g2 - 7.5 * g1) <= 1e-12 + 1e-9 * g2);
    }
}

TEST_CASE("identity frequency weight reproduces the default path") {
    SpectralParams p;
    QuadratureOptions q;
    FrequencyWeight one = [](double) { return 1.0; };
    for (double tau : {0.2, 1.0}) {
        const double a = effective_decay_rate(tau, p, q);
        const double b = effective_decay_rate(tau, p, q, one);
        CHECK(std::abs(a - b) <= 1e-9 * a);
    }
}

TEST_CASE("certified tail bound dominates the actual tail") {
    SpectralParams p;
    const double tau = 1.0;
    for (double cut : {5.0, 20.0, 100.0}) {
        const double bound = certified_tail_bound(cut, tau, p);
        // true tail = gamma - integral up to cut; estimate both by oracle
        const double full = oracle::trapezoid_decay_rate(tau, p);
        // crude inner trapezoid on [0, cut]
        const int n = 400'000;
        double sum = 0.0;
        const double h = cut / n;
        for (int i = 0; i <= n; ++i) {
            const double w = h * i;
            const double weight = (i == 0 || i == n) ? 0.5 : 1.0;
            sum += weight * spectral_density(w, p) * modulating_function(w, tau, p);
        }
        const double tail = full - sum * h;
        CHECK(tail <= bound * (1.0 + 1e-6));
        CHECK(bound < 1.0);
    }
    CHECK_THROWS_AS(certified_tail_bound(0.5, tau, p), InvalidState);
}

TEST_CASE("zeno classification on reference points") {
    SpectralParams p;
    QuadratureOptions q;
    p.alpha = 0.25;
    CHECK(classify_zeno(0.1, p, q).regime == ZenoRegime::Zeno);
    CHECK(classify_zeno(0.5, p, q).regime == ZenoRegime::Zeno);
    p.alpha = 0.05;
    CHECK(classify_zeno(3.0, p, q).regime == ZenoRegime::AntiZeno);
    p.alpha = 0.1;
    CHECK(classify_zeno(3.0, p, q).regime == ZenoRegime::AntiZeno);
    p.alpha = 0.5;
    CHECK(classify_zeno(3.0, p, q).regime == ZenoRegime::Zeno);
}

TEST_CASE("classification is band-consistent") {
    // widening the boundary band can only turn definite regimes into
    // Boundary, never flip Zeno <-> AntiZeno
    SpectralParams p;
    QuadratureOptions q;
    for (double tau : {0.1, 0.8, 2.0, 3.5}) {
        for (double alpha : {0.05, 0.25, 0.8}) {
            p.alpha = alpha;
            const auto narrow = classify_zeno(tau, p, q, kZenoBoundaryBand);
            const auto wide = classify_zeno(tau, p, q, kZenoBoundaryBand * 10.0);
            CHECK(narrow.ratio == wide.ratio);
            if (wide.regime != ZenoRegime::Boundary)
                CHECK(narrow.regime == wide.regime);
        }
    }
}

TEST_CASE("jump time brackets the crossover") {
    SpectralParams p;
    p.alpha = 0.1;
    QuadratureOptions q;
    const double tj = jump_time(p, q, 0.1, 3.0);
    CHECK(tj > 0.1);
    CHECK(tj < 3.0);
    const double g0 = natural_decay_rate(p);
    CHECK(std::abs(effective_decay_rate(tj, p, q) - g0) < 1e-6 * g0);
    // gamma is below gamma_0 just before and above just after
    CHECK(effective_decay_rate(tj * 0.9, p, q) < g0);
    CHECK(effective_decay_rate(tj * 1.1, p, q) > g0);

    CHECK_THROWS_AS(jump_time(p, q, 0.01, 0.02), InvalidState);
}
