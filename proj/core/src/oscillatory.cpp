#include "invgen/oscillatory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "invgen/quad.hpp"

namespace invgen {

namespace {

double dphi(double x, double t, double y) { return -t / (x * x) + 2.0 * M_PI * y; }

// Oscillation-aware panels: Phi' is monotone in x (Phi'' = 2t/x^3 has one
// sign), so max|Phi'| on a subinterval sits at an endpoint. Panels are kept
// below half a local period and below the 1/x curvature scale.
void split_panels(double x1, double x2, double t, double y, int depth, std::vector<Panel>& out) {
    const double m = std::max(std::abs(dphi(x1, t, y)), std::abs(dphi(x2, t, y)));
    const double w = x2 - x1;
    if (depth >= 48 || (w * m <= M_PI && w <= 0.5 * x1)) {
        out.push_back(Panel{x1, x2});
        return;
    }
    const double mid = 0.5 * (x1 + x2);
    if (!(x1 < mid && mid < x2)) {
        out.push_back(Panel{x1, x2});
        return;
    }
    if (out.size() > 2000000) throw ConvergenceError("eval_G: panel budget exhausted", {});
    split_panels(x1, mid, t, y, depth + 1, out);
    split_panels(mid, x2, t, y, depth + 1, out);
}

} // namespace

CurvatureBound CurvatureBound::from_interval(const Interval& I, double t) {
    if (!(I.a() > 0.0)) throw std::domain_error("CurvatureBound: interval must lie in (0, inf)");
    if (!(t > 0.0)) throw std::domain_error("CurvatureBound: t must be > 0");
    const double b = I.b();
    return CurvatureBound{2.0 * t / (b * b * b)};
}

std::complex<double> eval_G(const Interval& I, const Phase& ph, double rel_tol) {
    if (!(I.a() > 0.0)) throw std::domain_error("eval_G: interval must lie in (0, inf)");
    if (!std::isfinite(ph.t) || !std::isfinite(ph.y))
        throw std::domain_error("eval_G: non-finite phase parameters");

    std::vector<Panel> panels;
    split_panels(I.a(), I.b(), ph.t, ph.y, 0, panels);

    const double t = ph.t;
    const double y = ph.y;
    auto integrand = [t, y](double x) {
        return std::polar(1.0, t / x + 2.0 * M_PI * x * y);
    };

    const double tol_abs = std::max(rel_tol * I.length(), 1e-300);
    std::complex<long double> acc{0.0L, 0.0L};
    for (const auto& pan : panels) {
        const double share = tol_abs * (pan.b - pan.a) / I.length();
        acc += std::complex<long double>(
            integrate_finite(integrand, pan.a, pan.b, share, 512).value);
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

double vdc_bound(const Interval& I, const Phase& ph, int k) {
    if (k != 2) throw std::domain_error("vdc_bound: only k = 2 is supported");
    return 1.0 / std::sqrt(CurvatureBound::from_interval(I, ph.t).rho);
}

namespace {

struct YIntegrator {
    const Interval& I;
    double t;
    double p;
    double g_tol;

    double operator()(double a, double b, double tol_abs) const {
        auto f = [this](double y) {
            const double g = std::abs(eval_G(I, Phase{t, y}, g_tol));
            return std::complex<double>(std::pow(g, p), 0.0);
        };
        return integrate_finite(f, a, b, tol_abs, 2048).value.real();
    }
};

} // namespace

double norm_TmfI(const Interval& I, double t, const LebesgueExponent& p, double tol,
                 bool force_quadrature) {
    if (!(I.a() > 0.0)) throw std::domain_error("norm_TmfI: interval must lie in (0, inf)");
    if (!(t > 0.0)) throw std::domain_error("norm_TmfI: t must be > 0");
    const double pv = p.value();
    if (pv < 2.0) throw std::domain_error("norm_TmfI: requires p >= 2");
    if (pv == 2.0 && !force_quadrature) return std::sqrt(I.length()); // Plancherel

    if (!(tol > 0.0) || !(tol < 0.5)) throw std::domain_error("norm_TmfI: need 0 < tol < 0.5");

    const double a = I.a(), b = I.b();
    const double y_lo = t / (2.0 * M_PI * b * b);
    const double y_hi = t / (2.0 * M_PI * a * a);

    const YIntegrator quad{I, t, pv, 1e-7};

    // stationary band, chunked uniformly in sqrt(y) (~one |G| ripple each)
    const std::size_t n_chunks =
        std::clamp<std::size_t>(static_cast<std::size_t>(std::ceil((y_hi - y_lo) * b)), 8, 4096);
    const double rho_c = 2.0 * t / (b * b * b);
    const double g_typ_sq = 2.0 * M_PI / rho_c; // stationary-phase |G|^2 scale
    const double rough_total = std::pow(g_typ_sq, 0.5 * pv) * (y_hi - y_lo);
    const double chunk_tol = tol * rough_total / (16.0 * static_cast<double>(n_chunks));

    long double total = 0.0L;
    const double s_lo = std::sqrt(y_lo), s_hi = std::sqrt(y_hi);
    for (std::size_t i = 0; i < n_chunks; ++i) {
        const double u0 = s_lo + (s_hi - s_lo) * static_cast<double>(i) / n_chunks;
        const double u1 = s_lo + (s_hi - s_lo) * static_cast<double>(i + 1) / n_chunks;
        total += quad(u0 * u0, u1 * u1, chunk_tol);
    }

    const double share = 0.25 * tol;
    const double c1 = 3.0 / (2.0 * M_PI); // |G| <= 3/min|Phi'|, min|Phi'| = 2 pi |y - y_edge|

    // downward from y_lo; remaining mass past y_c is bounded by
    // (3/(2 pi))^p (y_lo - y_c)^{1-p} / (p-1)
    {
        double y_c = y_lo;
        double w = (y_hi - y_lo) / 8.0;
        int guard = 0;
        while (std::pow(c1, pv) * std::pow(y_lo - y_c + 1e-300, 1.0 - pv) / (pv - 1.0) >
               share * static_cast<double>(total)) {
            if (++guard > 256)
                throw ConvergenceError("norm_TmfI: lower tail bound not reached", {});
            const double y_next = y_c - w;
            total += quad(y_next, y_c, share * static_cast<double>(total) / 64.0 + 1e-300);
            y_c = y_next;
            w *= 1.6;
        }
    }

    // upward from y_hi: numeric out to the factor-2 guard band, then geometric
    // until (3/(2 pi))^p (y_c - y_hi)^{1-p}/(p-1) drops below the share
    {
        double y_c = y_hi;
        double w = (y_hi - y_lo) / 8.0;
        int guard = 0;
        while (y_c < 2.2 * y_hi ||
               std::pow(c1, pv) * std::pow(y_c - y_hi, 1.0 - pv) / (pv - 1.0) >
                   share * static_cast<double>(total)) {
            if (++guard > 256)
                throw ConvergenceError("norm_TmfI: upper tail bound not reached", {});
            const double y_next = y_c + w;
            total += quad(y_c, y_next, share * static_cast<double>(total) / 64.0 + 1e-300);
            y_c = y_next;
            w *= 1.6;
        }
    }

    return std::pow(static_cast<double>(total), 1.0 / pv);
}

SupG sup_abs_G(const Interval& I, double t) {
    if (!(I.a() > 0.0)) throw std::domain_error("sup_abs_G: interval must lie in (0, inf)");
    if (!(t > 0.0)) throw std::domain_error("sup_abs_G: t must be > 0");
    const double a = I.a(), b = I.b();
    const double y_lo = t / (2.0 * M_PI * b * b);
    const double y_hi = t / (2.0 * M_PI * a * a);

    const double g_tol = 1e-6;
    auto absG = [&](double y) { return std::abs(eval_G(I, Phase{t, y}, g_tol)); };

    // dense scan, uniform in sqrt(y), ~8 points per |G| ripple, with a small
    // guard band beyond both stationary edges
    const std::size_t n = std::clamp<std::size_t>(
        static_cast<std::size_t>(std::ceil(8.0 * (y_hi - y_lo) * b)), 256, 20000);
    const double s0 = std::sqrt(0.85 * y_lo), s1 = std::sqrt(1.2 * y_hi);
    double best = -1.0, best_y = y_lo;
    for (std::size_t i = 0; i <= n; ++i) {
        const double s = s0 + (s1 - s0) * static_cast<double>(i) / n;
        const double y = s * s;
        const double v = absG(y);
        if (v > best) {
            best = v;
            best_y = y;
        }
    }

    // golden-section refinement around the scan maximum
    const double step = (s1 - s0) / n;
    double lo = std::pow(std::max(std::sqrt(best_y) - step, s0), 2.0);
    double hi = std::pow(std::sqrt(best_y) + step, 2.0);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = absG(x1), f2 = absG(x2);
    for (int it = 0; it < 40; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = absG(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = absG(x1);
        }
    }
    if (f1 > best) {
        best = f1;
        best_y = x1;
    }
    if (f2 > best) {
        best = f2;
        best_y = x2;
    }
    return SupG{best, best_y};
}

} // namespace invgen
