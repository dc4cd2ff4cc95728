#ifndef ZENO_PIPELINES_HPP
#define ZENO_PIPELINES_HPP

#include "zeno/bipartite.hpp"
#include "zeno/rcsink.hpp"
#include "zeno/spectral.hpp"
#include "zeno/sweep.hpp"

namespace zeno {

/// Zero band applied when collapsing real-valued maps to sign maps.
inline constexpr double kSignZeroBand = 1e-12;

/// Ratio map gamma(tau)/gamma_0 - 1 over (tau, alpha); the sign of each
/// cell classifies Zeno (-1) vs anti-Zeno (+1).
HeatmapGrid zeno_ratio_map(const AxisSpec& tau_axis, const AxisSpec& alpha_axis,
                           const SpectralParams& p, const QuadratureOptions& q, int workers);
SignMap zeno_phase_map(const AxisSpec& tau_axis, const AxisSpec& alpha_axis,
                       const SpectralParams& p, const QuadratureOptions& q, int workers);

/// Delta(tau1, tau2) over the interval grid for one partition.
HeatmapGrid nonmarkov_delta_map(const AxisSpec& tau1_axis, const AxisSpec& tau2_axis,
                                Partition partition, const BellState& bell,
                                const MeasurementModel& m, const QuadratureOptions& q,
                                int workers);
SignMap nonmarkov_sign_map(const AxisSpec& tau1_axis, const AxisSpec& tau2_axis,
                           Partition partition, const BellState& bell,
                           const MeasurementModel& m, const QuadratureOptions& q, int workers);

/// D(t, tau) over (t, lambda_c) for the reaction-center model.
HeatmapGrid rc_map(const AxisSpec& t_axis, const AxisSpec& lambda_axis, double tau,
                   const RCParams& p, int workers);

/// Positive-cell counts per x column / y row (non-Markovian area proxies).
std::vector<int> positive_count_per_column(const SignMap& map);
std::vector<int> positive_count_per_row(const SignMap& map);

} // namespace zeno

#endif
