#pragma once

#include <span>
#include <vector>

#include "invgen/fourier.hpp"
#include "invgen/signal.hpp"

namespace invgen {

/// Semigroup time t >= 0 and Abel regularization eps (> 0 for the
/// time-domain integral path).
struct KernelParams {
    double t;
    double eps;
};

/// Band-limited fractional shift: T_m with symbol e^{-2 pi i s xi}
/// (periodic wrap at the window boundary).
Signal shift(const Signal& f, double s);

/// b_t(s) = -sqrt(t) J_1(2 sqrt(t s)) / sqrt(s) = -2t J_1(u)/u at u = 2 sqrt(ts),
/// with the s -> 0 limit -t handled by series. Requires s >= 0, t >= 0.
double kernel_b(double t, double s);

/// Quadrature value of int_0^inf b_t(s) e^{-eps s} ds; equals e^{-t/eps} - 1
/// up to quadrature error (callers assert the identity).
double kernel_laplace_check(double t, double eps, double tol);

/// Time-domain regularized semigroup:
/// f + int_0^inf b_t(s) e^{-eps s} (shift f by s) ds, assembled from the
/// adaptive panel decomposition of the scalar kernel integral. Throws
/// ConfigError when the required truncation point exceeds the wrap-safety
/// margin L/2.
Signal regularized_semigroup_time(const Signal& f, const KernelParams& kp, double tol);

/// Frequency-domain path: T_m with symbol exp(t/(-eps - 2 pi i xi)).
/// eps = 0 is allowed here (symbol e^{i t/(2 pi xi)} with the xi = 0
/// convention).
Signal regularized_semigroup_freq(const Signal& f, const KernelParams& kp);

struct SemigroupSweepRow {
    double t;
    double eps;
    double p;
    double ratio;             // ||R_{t,eps} g_eps||_p / ||g_eps||_p for the eps-tuned witness
    double cauchy_increment;  // ||R_{t,eps_i} f - R_{t,eps_{i+1}} f||_p; 0 on the last row
};

struct SweepOptions {
    double witness_scale = 0.7; // witness band is [c sqrt(eps), 2 c sqrt(eps)]
    double comparison_delta = 0.0; // > 0: probe generator A - delta (bounded inverse) instead
};

/// Probe of the uniform-boundedness dichotomy: for each (t, eps) a
/// frequency-localized witness ratio plus Cauchy increments of the fixed
/// input f between consecutive eps. eps_values must be strictly decreasing.
/// Rows are sorted by (t, eps).
std::vector<SemigroupSweepRow> theorem21_sweep(const Signal& f, std::span<const double> t_values,
                                               std::span<const double> eps_values,
                                               const LebesgueExponent& p,
                                               const SweepOptions& opts = {});

} // namespace invgen
