#include "invgen/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include "invgen/quad.hpp"

namespace invgen {

double sinc(double x) {
    if (!std::isfinite(x)) throw std::domain_error("sinc: non-finite argument");
    const double ax = std::abs(x);
    if (ax < 1e-4) {
        const double u2 = (M_PI * ax) * (M_PI * ax);
        return 1.0 - u2 / 6.0 * (1.0 - u2 / 20.0);
    }
    const double u = M_PI * ax;
    return std::sin(u) / u;
}

namespace detail {

double j1_power_series(double x) {
    // J1(x) = sum_k (-1)^k (x/2)^{2k+1} / (k! (k+1)!), Neumaier-compensated.
    const double half = 0.5 * x;
    const double z = half * half;
    double term = half;
    double sum = term;
    double comp = 0.0;
    for (int k = 1; k <= 64; ++k) {
        term *= -z / (static_cast<double>(k) * static_cast<double>(k + 1));
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
        if (std::abs(term) < 1e-22) break;
    }
    return sum + comp;
}

double j1_integral(double x) {
    // Bessel integral form J1(x) = (1/pi) int_0^pi cos(theta - x sin theta) dtheta.
    auto f = [x](double th) { return std::cos(th - x * std::sin(th)); };
    try {
        QuadResult r = integrate_finite(f, 0.0, M_PI, 2e-15);
        return r.value.real() / M_PI;
    } catch (const ConvergenceError& e) {
        return e.best_estimate.value.real() / M_PI;
    }
}

double j1_hankel_asymptotic(double x) {
    // J1 = sqrt(2/(pi x)) [P cos chi - Q sin chi], chi = x - 3 pi/4, with
    // a_{m+1} = a_m (4 - (2m+1)^2) / (8(m+1)); P collects even m, Q odd m,
    // both truncated at the smallest term. cos/sin of chi are expanded so
    // the only argument reduction happens inside the libm sin/cos of x.
    double am = 1.0;
    double xm = 1.0;
    const double inv = 1.0 / x;
    double p_sum = 0.0, q_sum = 0.0;
    double prev = HUGE_VAL;
    for (int m = 0; m < 40; ++m) {
        const double t = am * xm;
        if (std::abs(t) > prev) break;
        const double s = (m / 2) % 2 == 0 ? 1.0 : -1.0;
        if (m % 2 == 0)
            p_sum += s * t;
        else
            q_sum += s * t;
        prev = std::abs(t);
        if (prev < 1e-19) break;
        const double c = 2.0 * m + 1.0;
        am *= (4.0 - c * c) / (8.0 * (m + 1.0));
        xm *= inv;
    }
    const double sx = std::sin(x);
    const double cx = std::cos(x);
    return std::sqrt(1.0 / (M_PI * x)) * (p_sum * (sx - cx) + q_sum * (sx + cx));
}

} // namespace detail

double bessel_j1(double x) {
    if (!std::isfinite(x)) throw std::domain_error("bessel_j1: non-finite argument");
    const double ax = std::abs(x);
    double v;
    if (ax <= detail::j1_series_cutoff)
        v = detail::j1_power_series(ax);
    else if (ax < detail::j1_asymptotic_cutoff)
        v = detail::j1_integral(ax);
    else
        v = detail::j1_hankel_asymptotic(ax);
    return x < 0.0 ? -v : v;
}

} // namespace invgen
