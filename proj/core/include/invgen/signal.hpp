#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace invgen {

/// Uniform sampling window [-L, L) with N = power-of-two points.
/// The induced frequency grid has spacing 1/(2L) and points k/(2L),
/// k = -N/2 .. N/2-1; it is again a Grid (half-width N/(4L)).
class Grid {
public:
    Grid(double half_width, std::size_t num_points);

    double half_width() const { return half_width_; }
    std::size_t num_points() const { return num_points_; }
    double spacing() const { return 2.0 * half_width_ / static_cast<double>(num_points_); }
    double x(std::size_t j) const { return -half_width_ + static_cast<double>(j) * spacing(); }

    double freq_spacing() const { return 1.0 / (2.0 * half_width_); }
    Grid frequency_grid() const;

    bool operator==(const Grid& other) const = default;

private:
    double half_width_;
    std::size_t num_points_;
};

struct Signal {
    Grid grid;
    std::vector<std::complex<double>> samples;
};

/// Sample f on the grid; throws std::domain_error if any value is non-finite.
Signal make_signal(const Grid& grid, const std::function<std::complex<double>(double)>& f);
Signal zero_signal(const Grid& grid);

Signal add(const Signal& f, const Signal& g);
Signal subtract(const Signal& f, const Signal& g);
Signal scale(const Signal& f, std::complex<double> c);

/// Exponent p in (1, inf) together with its Hoelder conjugate.
class LebesgueExponent {
public:
    explicit LebesgueExponent(double p);
    double value() const { return p_; }
    double conjugate() const { return p_ / (p_ - 1.0); }

private:
    double p_;
};

/// Rectangle-rule L^p norm: (dx * sum |f_j|^p)^(1/p).
double lp_norm(const Signal& f, const LebesgueExponent& p);
double linf_norm(const Signal& f);

struct InterpolationCheck {
    bool holds;
    double lhs; // ||f||_p
    double rhs; // ||f||_inf^(1-2/p) * ||f||_2^(2/p)
};

/// Discrete interpolation inequality ||f||_p <= ||f||_inf^(1-2/p) ||f||_2^(2/p),
/// defined for p > 2 (domain error otherwise).
InterpolationCheck interpolation_inequality_check(const Signal& f, const LebesgueExponent& p);

} // namespace invgen
