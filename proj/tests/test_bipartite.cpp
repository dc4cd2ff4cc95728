#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "zeno/bipartite.hpp"
#include "zeno/oracle.hpp"

using namespace zeno;

namespace {

// subsystem order of the full four-factor state: (q1, q2, r1, r2)
constexpr std::array<std::size_t, 4> kDims{2, 2, 2, 2};

std::array<std::size_t, 2> keep_for(Partition part) {
    switch (part) {
        case Partition::QubitQubit: return {0, 1};
        case Partition::ReservoirReservoir: return {2, 3};
        default: return {0, 3};  // qubit 1 with reservoir 2
    }
}

} // namespace

TEST_CASE("bell state and model validation") {
    BellState bad{0.9, 0.9};
    CHECK_THROWS_AS(bad.validate(), InvalidState);
    BellState ok{0.6, 0.8};
    CHECK_NOTHROW(ok.validate());

    MeasurementModel m;
    m.n_measurements = 0;
    CHECK_THROWS_AS(m.validate(), InvalidState);
}

TEST_CASE("survival amplitudes: normalization and limits") {
    SpectralParams p;
    QuadratureOptions q;
    // tau = 0 is exactly no decay
    auto s0 = survival_amplitudes(0.0, p, 20, q);
    CHECK(s0.u == 1.0);
    CHECK(s0.v == 0.0);

    for (double tau : {0.1, 1.0, 5.0}) {
        auto s = survival_amplitudes(tau, p, 20, q);
        CHECK(s.u * s.u + s.v * s.v == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(s.u > 0.0);
        CHECK(s.u < 1.0);
    }

    // u = exp(-gamma N tau / 2) against an explicit rate
    auto s = survival_amplitudes_from_rate(2.0, 0.01, 20);
    CHECK(s.u == doctest::Approx(std::exp(-0.01 * 20 * 2.0 / 2.0)).epsilon(1e-14));

    // more measurements at fixed interval leave less survival
    auto s10 = survival_amplitudes_from_rate(1.0, 0.02, 10);
    auto s40 = survival_amplitudes_from_rate(1.0, 0.02, 40);
    CHECK(s40.u < s10.u);

    CHECK_THROWS_AS(survival_amplitudes_from_rate(-1.0, 0.01, 20), InvalidState);
    CHECK_THROWS_AS(survival_amplitudes_from_rate(1.0, 0.01, 0), InvalidState);
}

TEST_CASE("reduced matrix hand value") {
    // a = b = 1/sqrt(2), u1 = u2 = 0.6, v1 = v2 = 0.8:
    // qubit-qubit f4 = b^2 u1^2 u2^2 = 0.5 * 0.6^4 = 0.0648
    BellState bell;
    SurvivalAmplitudes s{0.6, 0.8};
    auto rho = reduced_density(Partition::QubitQubit, bell, s, s);
    CHECK(rho.matrix()(3, 3).real() == doctest::Approx(0.0648).epsilon(1e-14));
    CHECK(rho.matrix()(0, 0).real() ==
          doctest::Approx(0.5 + 0.5 * 0.8 * 0.8 * 0.8 * 0.8).epsilon(1e-14));
    CHECK(rho.matrix()(0, 3).real() ==
          doctest::Approx(0.5 * 0.6 * 0.6).epsilon(1e-14));

    // reservoir-reservoir swaps u <-> v
    auto rr = reduced_density(Partition::ReservoirReservoir, bell, s, s);
    CHECK(rr.matrix()(3, 3).real() == doctest::Approx(0.5 * 0.8 * 0.8 * 0.8 * 0.8));
    CHECK(rr.matrix()(0, 3).real() == doctest::Approx(0.5 * 0.8 * 0.8));
}

TEST_CASE("X structure and determinant identity") {
    BellState bell{0.6, 0.8};
    SurvivalAmplitudes s1{0.9, std::sqrt(1.0 - 0.81)};
    SurvivalAmplitudes s2{0.4, std::sqrt(1.0 - 0.16)};
    for (auto part : {Partition::QubitQubit, Partition::ReservoirReservoir,
                      Partition::QubitReservoir}) {
        ComplexMatrix m = reduced_density_entries(part, bell, s1, s2);
        // only the diagonal and the (0,3)/(3,0) corner may be nonzero
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                if (i == j || (i == 0 && j == 3) || (i == 3 && j == 0)) continue;
                CHECK(std::abs(m(i, j)) == 0.0);
            }
        CHECK(m.trace().real() == doctest::Approx(1.0).epsilon(1e-14));
        // the outer block satisfies f1 f4 >= f5^2 (PSD of the X corner)
        const double f1 = m(0, 0).real(), f4 = m(3, 3).real();
        const double f5 = m(0, 3).real();
        CHECK(f1 * f4 - f5 * f5 >= -1e-15);
    }

    // qubit-qubit: f1 f4 - f5^2 = a^2 b^2 u^2 u'^2 (v^2 v'^2 + b^2/a^2 ... )
    // reduces at a = b to b^4 u1^2 u2^2 v1^2 v2^2
    BellState sym;
    ComplexMatrix m = reduced_density_entries(Partition::QubitQubit, sym, s1, s2);
    const double lhs = m(0, 0).real() * m(3, 3).real() - std::norm(m(0, 3));
    const double u1 = s1.u, u2 = s2.u, v1 = s1.v, v2 = s2.v;
    CHECK(lhs == doctest::Approx(0.25 * u1 * u1 * u2 * u2 * v1 * v1 * v2 * v2)
                     .epsilon(1e-12));
}

TEST_CASE("reduced matrices match the full-state partial trace") {
    std::mt19937_64 rng(0xb1fa57a7e5ULL);
    std::uniform_real_distribution<double> uu(0.0, 1.0);
    for (int rep = 0; rep < 500; ++rep) {
        const double a = std::sqrt(uu(rng));
        BellState bell{a, std::sqrt(1.0 - a * a)};
        SurvivalAmplitudes s1{uu(rng), 0.0};
        s1.v = std::sqrt(1.0 - s1.u * s1.u);
        SurvivalAmplitudes s2{uu(rng), 0.0};
        s2.v = std::sqrt(1.0 - s2.u * s2.u);

        PureState full = full_state_oracle(bell, s1, s2);
        ComplexMatrix joint = full.projector();
        for (auto part : {Partition::QubitQubit, Partition::ReservoirReservoir,
                          Partition::QubitReservoir}) {
            const auto keep = keep_for(part);
            ComplexMatrix traced = partial_trace(joint, kDims, keep);
            ComplexMatrix closed = reduced_density_entries(part, bell, s1, s2);
            CHECK((traced - closed).frobenius_norm() < 1e-12);
        }
    }
}

TEST_CASE("strict corner variant breaks normalization when baths differ") {
    BellState bell;
    SurvivalAmplitudes s1{0.9, std::sqrt(1.0 - 0.81)};
    SurvivalAmplitudes s2{0.4, std::sqrt(1.0 - 0.16)};
    ComplexMatrix strict =
        reduced_density_entries(Partition::QubitReservoir, bell, s1, s2, true);
    CHECK(std::abs(strict.trace().real() - 1.0) > 1e-3);
    // with identical baths the two variants coincide
    ComplexMatrix a = reduced_density_entries(Partition::QubitReservoir, bell, s1, s1);
    ComplexMatrix b =
        reduced_density_entries(Partition::QubitReservoir, bell, s1, s1, true);
    CHECK((a - b).frobenius_norm() == 0.0);
}

TEST_CASE("qubit swap symmetry of the symmetric partitions") {
    BellState bell{0.6, 0.8};
    SurvivalAmplitudes s1{0.7, std::sqrt(1.0 - 0.49)};
    SurvivalAmplitudes s2{0.3, std::sqrt(1.0 - 0.09)};
    for (auto part : {Partition::QubitQubit, Partition::ReservoirReservoir}) {
        ComplexMatrix ab = reduced_density_entries(part, bell, s1, s2);
        ComplexMatrix ba = reduced_density_entries(part, bell, s2, s1);
        // swapping the subsystems permutes |01> <-> |10> only
        CHECK(std::abs(ab(0, 0) - ba(0, 0)) < 1e-15);
        CHECK(std::abs(ab(3, 3) - ba(3, 3)) < 1e-15);
        CHECK(std::abs(ab(1, 1) - ba(2, 2)) < 1e-15);
        CHECK(std::abs(ab(2, 2) - ba(1, 1)) < 1e-15);
        CHECK(std::abs(ab(0, 3) - ba(0, 3)) < 1e-15);
    }
}

TEST_CASE("decay rate cache is transparent") {
    SpectralParams p;
    QuadratureOptions q;
    DecayRateCache cache;
    const double direct = effective_decay_rate(0.7, p, q);
    CHECK(cache(0.7, p, q) == direct);
    CHECK(cache(0.7, p, q) == direct);  // memoized path returns the same bits
    p.alpha = 0.1;
    CHECK(cache(0.7, p, q) == effective_decay_rate(0.7, p, q));
}

TEST_CASE("delta measure vanishes on degenerate arguments") {
    BellState bell;
    MeasurementModel m;
    QuadratureOptions q;
    // tau1 = 0 compares identical states twice
    CHECK(delta_measure(0.0, 1.0, Partition::QubitQubit, bell, m, q) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(delta_measure(-1.0, 1.0, Partition::QubitQubit, bell, m, q),
                    InvalidState);
}

TEST_CASE("delta measure is finite and cache-invariant") {
    BellState bell;
    MeasurementModel m;
    QuadratureOptions q;
    DecayRateCache cache;
    for (auto part : {Partition::QubitQubit, Partition::ReservoirReservoir,
                      Partition::QubitReservoir}) {
        const double plain = delta_measure(0.4, 0.8, part, bell, m, q);
        const double memo = delta_measure(0.4, 0.8, part, bell, m, q, &cache);
        CHECK(plain == memo);
        CHECK(std::abs(plain) < 1.0);
    }
}
