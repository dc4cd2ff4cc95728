#ifndef ZENO_ORACLE_HPP
#define ZENO_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "zeno/linalg.hpp"
#include "zeno/rcsink.hpp"
#include "zeno/spectral.hpp"

// Independent brute-force references. Everything here deliberately
// avoids the adaptive quadrature, the Jacobi eigensolver, and the
// closed-form amplitude paths it is used to check.
namespace zeno::oracle {

/// Composite-trapezoid evaluation of the decay-rate integral on
/// [0, omega_cut] with `points` samples; omega_cut balances truncation
/// against trapezoid resolution.
double trapezoid_decay_rate(double tau, const SpectralParams& p,
                            std::size_t points = 4'000'000);

/// High-resolution trapezoid of the modulating function over
/// [dW - half_width, dW + half_width].
double trapezoid_modulating_area(double tau, const SpectralParams& p,
                                 double half_width, std::size_t points);

/// Eigenvalues of a Hermitian matrix by Sylvester-inertia bisection
/// (LDL^dagger pivot counts), ascending.
std::vector<double> eigenvalues_bisection(const ComplexMatrix& m, double tol = 1e-11);

/// Classical 4th-order time stepping of the non-Hermitian two-site
/// Schroedinger evolution with sink loss; returns the site populations.
RCAmplitudes rk4_rc_amplitudes(double t, const RCParams& p, double step = 1e-4);

} // namespace zeno::oracle

#endif
