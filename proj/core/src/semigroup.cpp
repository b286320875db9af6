#include "invgen/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "invgen/errors.hpp"
#include "invgen/quad.hpp"
#include "invgen/specfun.hpp"

namespace invgen {

Signal shift(const Signal& f, double s) {
    if (!std::isfinite(s)) throw std::domain_error("shift: non-finite shift");
    Multiplier m;
    m.symbol = [s](double xi) { return std::polar(1.0, -2.0 * M_PI * s * xi); };
    m.unimodular = true;
    m.modulus_bound = 1.0;
    return apply_multiplier(m, f);
}

double kernel_b(double t, double s) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw std::domain_error("kernel_b: t must be >= 0");
    if (!(s >= 0.0) || !std::isfinite(s)) throw std::domain_error("kernel_b: s must be >= 0");
    if (t == 0.0) return 0.0;
    const double u = 2.0 * std::sqrt(t * s);
    if (u < 1e-3) {
        // J1(u)/u = 1/2 - u^2/16 + u^4/384 - ...
        const double u2 = u * u;
        return -2.0 * t * (0.5 - u2 / 16.0 * (1.0 - u2 / 24.0));
    }
    return -2.0 * t * bessel_j1(u) / u;
}

double kernel_laplace_check(double t, double eps, double tol) {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw std::domain_error("kernel_laplace_check: eps must be > 0");
    if (!(tol > 0.0)) throw std::domain_error("kernel_laplace_check: tol must be > 0");
    if (t == 0.0) return 0.0;
    const double envelope = t; // |b_t| = 2t |J1(u)/u| <= t
    QuadResult r = integrate_semiinfinite_damped([t](double s) { return kernel_b(t, s); }, eps,
                                                 tol, envelope);
    return r.value.real();
}

namespace {

// Truncation point from the decaying kernel envelope
// |b_t(s)| <= min(t, t^{1/4} s^{-3/4}); a couple of fixed-point refinements
// of the constant-envelope rule.
double kernel_truncation_point(double t, double eps, double tol) {
    double s_max = damped_truncation_point(eps, tol, std::max(t, 1e-12));
    for (int i = 0; i < 3; ++i) {
        const double env_tail =
            std::min(t, std::pow(t, 0.25) * std::pow(std::max(s_max, 1.0), -0.75));
        s_max = damped_truncation_point(eps, tol, std::max(env_tail, 1e-12));
    }
    return s_max;
}

} // namespace

Signal regularized_semigroup_time(const Signal& f, const KernelParams& kp, double tol) {
    if (!(kp.eps > 0.0) || !std::isfinite(kp.eps))
        throw std::domain_error("regularized_semigroup_time: eps must be > 0");
    if (!(kp.t >= 0.0) || !std::isfinite(kp.t))
        throw std::domain_error("regularized_semigroup_time: t must be >= 0");
    if (!(tol > 0.0)) throw std::domain_error("regularized_semigroup_time: tol must be > 0");
    if (kp.t == 0.0) return f;

    const double t = kp.t, eps = kp.eps;
    const double s_max = kernel_truncation_point(t, eps, tol);
    const double margin = 0.5 * f.grid.half_width();
    if (s_max > margin)
        throw ConfigError(
            "regularized_semigroup_time: truncation point S_max = " + std::to_string(s_max) +
            " exceeds the wrap-safety margin L/2 = " + std::to_string(margin) +
            "; enlarge the grid window or increase eps");

    // panel decomposition from the scalar damped-kernel integral
    auto scalar = [t, eps](double s) {
        return std::complex<double>(kernel_b(t, s) * std::exp(-eps * s), 0.0);
    };
    std::vector<Panel> panels;
    integrate_finite_panels(scalar, 0.0, s_max, 0.5 * tol, &panels);

    Signal spec = forward_ft(f);
    const std::size_t n = spec.samples.size();

    // numerically supported band of f, for the oscillation cap on panel width
    double peak = 0.0;
    for (const auto& v : spec.samples) peak = std::max(peak, std::abs(v));
    double xi_band = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        if (std::abs(spec.samples[k]) > 1e-13 * peak)
            xi_band = std::max(xi_band, std::abs(spec.grid.x(k)));
    const double cap = xi_band > 0.0 ? 0.5 / xi_band : s_max;

    std::vector<double> nodes, coeffs;
    for (const auto& pan : panels) {
        const std::size_t pieces =
            std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((pan.b - pan.a) / cap)));
        const double w = (pan.b - pan.a) / static_cast<double>(pieces);
        for (std::size_t q = 0; q < pieces; ++q) {
            const double a = pan.a + static_cast<double>(q) * w;
            const double center = a + 0.5 * w;
            const double half = 0.5 * w;
            for (int i = 0; i < 8; ++i) {
                const double weight = detail::k15_weights[i] * half;
                if (i == 7) {
                    nodes.push_back(center);
                    coeffs.push_back(weight * kernel_b(t, center) * std::exp(-eps * center));
                } else {
                    for (double sgn : {1.0, -1.0}) {
                        const double s = center + sgn * half * detail::gk_nodes[i];
                        nodes.push_back(s);
                        coeffs.push_back(weight * kernel_b(t, s) * std::exp(-eps * s));
                    }
                }
            }
        }
    }

    // quadrature of the shift-symbol integral, accumulated per frequency bin
    Signal acc = zero_signal(spec.grid);
    for (std::size_t k = 0; k < n; ++k) {
        if (spec.samples[k] == std::complex<double>(0.0, 0.0)) continue;
        const double xi = spec.grid.x(k);
        std::complex<long double> sym{0.0L, 0.0L};
        for (std::size_t i = 0; i < nodes.size(); ++i)
            sym += std::complex<long double>(coeffs[i] *
                                             std::polar(1.0, -2.0 * M_PI * nodes[i] * xi));
        acc.samples[k] = spec.samples[k] * std::complex<double>(static_cast<double>(sym.real()),
                                                                static_cast<double>(sym.imag()));
    }
    return add(f, inverse_ft(acc));
}

Signal regularized_semigroup_freq(const Signal& f, const KernelParams& kp) {
    if (!(kp.eps >= 0.0) || !std::isfinite(kp.eps))
        throw std::domain_error("regularized_semigroup_freq: eps must be >= 0");
    if (!(kp.t >= 0.0) || !std::isfinite(kp.t))
        throw std::domain_error("regularized_semigroup_freq: t must be >= 0");
    const Multiplier m = kp.eps == 0.0 ? make_osc_multiplier(kp.t / (2.0 * M_PI))
                                       : make_regularized_semigroup_multiplier(kp.t, kp.eps);
    return apply_multiplier(m, f);
}

std::vector<SemigroupSweepRow> theorem21_sweep(const Signal& f, std::span<const double> t_values,
                                               std::span<const double> eps_values,
                                               const LebesgueExponent& p,
                                               const SweepOptions& opts) {
    if (t_values.empty() || eps_values.empty())
        throw std::domain_error("theorem21_sweep: empty parameter list");
    for (std::size_t i = 0; i + 1 < eps_values.size(); ++i)
        if (!(eps_values[i] > eps_values[i + 1]))
            throw std::domain_error("theorem21_sweep: eps_values must be strictly decreasing");
    if (!(eps_values.back() > 0.0))
        throw std::domain_error("theorem21_sweep: eps_values must be positive");

    const Grid& g = f.grid;
    const Grid fg = g.frequency_grid();

    std::vector<SemigroupSweepRow> rows;
    rows.reserve(t_values.size() * eps_values.size());

    for (double t : t_values) {
        if (!(t >= 0.0) || !std::isfinite(t))
            throw std::domain_error("theorem21_sweep: t must be >= 0");

        const std::size_t base = rows.size();
        for (double eps : eps_values) {
            const double eps_eff = eps + opts.comparison_delta;
            const Multiplier m = make_regularized_semigroup_multiplier(t, eps_eff);

            // witness: adjoint-chirped band function at the eps-tuned scale
            const double xi0 = opts.witness_scale * std::sqrt(eps);
            const double xi1 = 2.0 * xi0;
            if (xi0 < 2.0 * g.freq_spacing())
                throw ConfigError("theorem21_sweep: witness band at eps = " + std::to_string(eps) +
                                  " is unresolved; enlarge the window half-width");
            if (xi1 > 0.9 * fg.half_width())
                throw ConfigError("theorem21_sweep: witness band exceeds the frequency window; "
                                  "increase num_points");

            Signal band = zero_signal(fg);
            for (std::size_t k = 0; k < band.samples.size(); ++k) {
                const double xi = fg.x(k);
                if (xi >= xi0 && xi < xi1) band.samples[k] = 1.0;
            }
            const Signal witness = apply_multiplier(adjoint_multiplier(m), inverse_ft(band));
            const double ratio =
                lp_norm(apply_multiplier(m, witness), p) / lp_norm(witness, p);
            rows.push_back(SemigroupSweepRow{t, eps, p.value(), ratio, 0.0});
        }

        // Cauchy increments of the fixed input between consecutive eps
        Signal prev = regularized_semigroup_freq(f, {t, eps_values[0] + opts.comparison_delta});
        for (std::size_t i = 0; i + 1 < eps_values.size(); ++i) {
            Signal next =
                regularized_semigroup_freq(f, {t, eps_values[i + 1] + opts.comparison_delta});
            rows[base + i].cauchy_increment = lp_norm(subtract(prev, next), p);
            prev = std::move(next);
        }
    }

    std::sort(rows.begin(), rows.end(), [](const SemigroupSweepRow& a, const SemigroupSweepRow& b) {
        if (a.t != b.t) return a.t < b.t;
        return a.eps < b.eps;
    });
    return rows;
}

} // namespace invgen
