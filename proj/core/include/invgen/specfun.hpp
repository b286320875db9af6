#pragma once

namespace invgen {

/// Bessel function of the first kind, order one.
///
/// Absolute error stays below 1e-12 for |x| <= 1e4. Odd symmetry
/// J1(-x) = -J1(x) holds bit-exactly. Throws std::domain_error for
/// non-finite input.
double bessel_j1(double x);

/// Normalized sinc, sin(pi x) / (pi x), with sinc(0) = 1.
/// Even symmetry is bit-exact. Throws std::domain_error for non-finite input.
double sinc(double x);

namespace detail {
// Branch switch points of bessel_j1, exposed for the regime-agreement tests.
inline constexpr double j1_series_cutoff = 10.0;
inline constexpr double j1_asymptotic_cutoff = 16.0;

double j1_power_series(double x);     // |x| <= j1_series_cutoff
double j1_integral(double x);         // gap region, Bessel integral form
double j1_hankel_asymptotic(double x);// |x| >= j1_asymptotic_cutoff
} // namespace detail

} // namespace invgen
