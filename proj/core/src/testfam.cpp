#include "invgen/testfam.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "invgen/quad.hpp"
#include "invgen/specfun.hpp"

namespace invgen {

Interval::Interval(double a, double b) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
        throw std::domain_error("Interval: need finite a < b");
}

std::complex<double> eval_f_I(const Interval& I, double x) {
    if (!std::isfinite(x)) throw std::domain_error("eval_f_I: non-finite argument");
    const double len = I.length();
    const double amp = len * sinc(len * x);
    return std::polar(1.0, M_PI * (I.a() + I.b()) * x) * amp;
}

namespace {

// int_0^1 |sin(pi u)|^p du = Gamma((p+1)/2) / (sqrt(pi) Gamma(p/2 + 1))
double mean_abs_sin_pow(double p) {
    return std::exp(std::lgamma(0.5 * (p + 1.0)) - std::lgamma(0.5 * p + 1.0)) / std::sqrt(M_PI);
}

double compute_np_uncached(double p) {
    const double c_p = mean_abs_sin_pow(p);
    const double rtol = 1e-10;

    // Integer cutoff X: with X on a sinc zero the periodized tail correction
    // integrates to zero and the remainder after two integrations by parts is
    // below 0.15 p pi^-p X^-(p+1).
    const double main_lower = 0.3; // conservative lower bound on N_p^p
    const double xr =
        std::pow(0.15 * p * std::pow(M_PI, -p) / (rtol * main_lower), 1.0 / (p + 1.0));
    const long X = std::lround(std::min(4000.0, std::ceil(std::max(20.0, xr))));

    auto f = [p](double x) {
        return std::complex<double>(std::pow(std::abs(sinc(x)), p), 0.0);
    };
    // |sinc|^p is analytic on each period [n, n+1]; integrate per period
    const double per_tol = rtol * main_lower / (2.0 * static_cast<double>(X));
    long double acc = 0.0L;
    for (long n = 0; n < X; ++n) {
        acc += integrate_finite(f, static_cast<double>(n), static_cast<double>(n + 1), per_tol)
                   .value.real();
    }
    const double tail =
        c_p * std::pow(static_cast<double>(X), 1.0 - p) / (std::pow(M_PI, p) * (p - 1.0));
    const double npp = 2.0 * (static_cast<double>(acc) + tail);
    return std::pow(npp, 1.0 / p);
}

} // namespace

double compute_Np(const LebesgueExponent& p) {
    static std::mutex mu;
    static std::map<double, double> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(p.value());
        if (it != cache.end()) return it->second;
    }
    const double v = compute_np_uncached(p.value());
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(p.value(), v).first->second;
}

double norm_f_I(const Interval& I, const LebesgueExponent& p) {
    const double pv = p.value();
    return std::pow(I.length(), (pv - 1.0) / pv) * compute_Np(p);
}

} // namespace invgen
