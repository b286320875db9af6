#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "invgen/errors.hpp"

namespace invgen {

struct QuadResult {
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0.0; // absolute
    std::size_t evaluations = 0;
    double truncation = 0.0; // S_max for damped semi-infinite integrals, else 0
};

/// Thrown when adaptive refinement runs out of subdivisions before reaching
/// the requested tolerance. Carries the best estimate obtained so far.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, QuadResult best)
        : std::runtime_error(what), best_estimate(best) {}
    QuadResult best_estimate;
};

struct Panel {
    double a, b;
};

namespace detail {

// Gauss 7 / Kronrod 15 pair on [-1,1] (QUADPACK dqk15 constants).
// gk_nodes holds the positive Kronrod abscissae; odd indices are the
// embedded Gauss points.
inline constexpr double gk_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double k15_weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double g7_weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
    double a, b;
    std::complex<double> value;
    double err;
};

// One G7/K15 application on [a,b]; err is |K15 - G7|.
template <class F>
Segment gk15(F&& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double halfwidth = 0.5 * (b - a);

    std::complex<double> fc = f(center);
    std::complex<double> k15 = k15_weights[7] * fc;
    std::complex<double> g7 = g7_weights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = halfwidth * gk_nodes[i];
        std::complex<double> pair = std::complex<double>(f(center + dx)) +
                                    std::complex<double>(f(center - dx));
        k15 += k15_weights[i] * pair;
        if (i % 2 == 1) g7 += g7_weights[i / 2] * pair;
    }
    k15 *= halfwidth;
    g7 *= halfwidth;
    return Segment{a, b, k15, std::abs(k15 - g7)};
}

inline bool worse(const Segment& lhs, const Segment& rhs) {
    // heap comparator: the segment with the larger error comes out first;
    // ties broken by left endpoint for determinism
    if (lhs.err != rhs.err) return lhs.err < rhs.err;
    return lhs.a > rhs.a;
}

} // namespace detail

inline constexpr std::size_t quad_default_max_segments = 8192;

/// Adaptive integration of f over [a,b] to absolute tolerance tol.
/// Worst-segment-first bisection on a nested Gauss7/Kronrod15 pair.
/// If panels_out is non-null it receives the final subdivision, sorted.
template <class F>
QuadResult integrate_finite_panels(F&& f, double a, double b, double tol,
                                   std::vector<Panel>* panels_out,
                                   std::size_t max_segments = quad_default_max_segments) {
    if (!(std::isfinite(a) && std::isfinite(b)) || !(a < b))
        throw std::domain_error("integrate_finite: need finite a < b");
    if (!(tol > 0.0)) throw std::domain_error("integrate_finite: need tol > 0");

    std::vector<detail::Segment> segs;
    segs.push_back(detail::gk15(f, a, b));
    std::size_t evals = 15;
    double total_err = segs.front().err;

    while (total_err > tol && segs.size() < max_segments) {
        std::pop_heap(segs.begin(), segs.end(), detail::worse);
        detail::Segment worst = segs.back();
        segs.pop_back();

        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            // interval width at rounding floor; cannot refine further
            segs.push_back(worst);
            std::push_heap(segs.begin(), segs.end(), detail::worse);
            break;
        }
        detail::Segment left = detail::gk15(f, worst.a, mid);
        detail::Segment right = detail::gk15(f, mid, worst.b);
        evals += 30;
        total_err += left.err + right.err - worst.err;
        segs.push_back(left);
        std::push_heap(segs.begin(), segs.end(), detail::worse);
        segs.push_back(right);
        std::push_heap(segs.begin(), segs.end(), detail::worse);
    }

    std::sort(segs.begin(), segs.end(),
              [](const detail::Segment& s, const detail::Segment& t) { return s.a < t.a; });
    std::complex<long double> acc{0.0L, 0.0L};
    long double err_acc = 0.0L;
    for (const auto& s : segs) {
        acc += std::complex<long double>(s.value);
        err_acc += s.err;
    }
    QuadResult out;
    out.value = std::complex<double>(static_cast<double>(acc.real()),
                                     static_cast<double>(acc.imag()));
    out.error_estimate = static_cast<double>(err_acc);
    out.evaluations = evals;

    if (out.error_estimate > tol)
        throw ConvergenceError("integrate_finite: subdivision limit exceeded before reaching tol",
                               out);
    if (panels_out) {
        panels_out->clear();
        panels_out->reserve(segs.size());
        for (const auto& s : segs) panels_out->push_back(Panel{s.a, s.b});
    }
    return out;
}

template <class F>
QuadResult integrate_finite(F&& f, double a, double b, double tol,
                            std::size_t max_segments = quad_default_max_segments) {
    return integrate_finite_panels(f, a, b, tol, nullptr, max_segments);
}

/// Truncation point for \int_0^inf f(s) e^{-eps s} ds with |f| <= envelope:
/// the point past which the damped tail bound envelope*e^{-eps S}/eps falls
/// below tol/2.
inline double damped_truncation_point(double damping_rate, double tol, double envelope_bound) {
    if (!(damping_rate > 0.0) || !std::isfinite(damping_rate))
        throw std::domain_error("damped integral: damping rate must be > 0");
    if (!(tol > 0.0)) throw std::domain_error("damped integral: need tol > 0");
    if (!(envelope_bound > 0.0))
        throw std::domain_error("damped integral: envelope bound must be > 0");
    const double s = std::log(envelope_bound / (damping_rate * 0.5 * tol)) / damping_rate;
    return std::max(s, 1.0 / damping_rate);
}

/// \int_0^inf f(s) e^{-eps s} ds by finite quadrature up to the truncation
/// point; envelope_bound must dominate |f| on [0, S_max].
template <class F>
QuadResult integrate_semiinfinite_damped(F&& f, double damping_rate, double tol,
                                         double envelope_bound,
                                         std::size_t max_segments = quad_default_max_segments) {
    const double s_max = damped_truncation_point(damping_rate, tol, envelope_bound);
    auto damped = [&](double s) {
        return std::complex<double>(f(s)) * std::exp(-damping_rate * s);
    };
    QuadResult r = integrate_finite(damped, 0.0, s_max, 0.5 * tol, max_segments);
    r.error_estimate += 0.5 * tol; // truncated-tail allowance
    r.truncation = s_max;
    return r;
}

} // namespace invgen
