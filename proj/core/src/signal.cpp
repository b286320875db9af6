#include "invgen/signal.hpp"

#include <cmath>
#include <stdexcept>

namespace invgen {

namespace {
bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
} // namespace

Grid::Grid(double half_width, std::size_t num_points)
    : half_width_(half_width), num_points_(num_points) {
    if (!(half_width > 0.0) || !std::isfinite(half_width))
        throw std::domain_error("Grid: half_width must be positive and finite");
    if (num_points < 4 || !is_pow2(num_points))
        throw std::domain_error("Grid: num_points must be a power of two >= 4");
}

Grid Grid::frequency_grid() const {
    return Grid(static_cast<double>(num_points_) / (4.0 * half_width_), num_points_);
}

Signal make_signal(const Grid& grid, const std::function<std::complex<double>(double)>& f) {
    Signal out{grid, std::vector<std::complex<double>>(grid.num_points())};
    for (std::size_t j = 0; j < grid.num_points(); ++j) {
        const std::complex<double> v = f(grid.x(j));
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::domain_error("make_signal: non-finite sample");
        out.samples[j] = v;
    }
    return out;
}

Signal zero_signal(const Grid& grid) {
    return Signal{grid, std::vector<std::complex<double>>(grid.num_points())};
}

namespace {
void require_same_grid(const Signal& f, const Signal& g) {
    if (!(f.grid == g.grid)) throw std::domain_error("signal arithmetic: grid mismatch");
}
} // namespace

Signal add(const Signal& f, const Signal& g) {
    require_same_grid(f, g);
    Signal out = f;
    for (std::size_t j = 0; j < out.samples.size(); ++j) out.samples[j] += g.samples[j];
    return out;
}

Signal subtract(const Signal& f, const Signal& g) {
    require_same_grid(f, g);
    Signal out = f;
    for (std::size_t j = 0; j < out.samples.size(); ++j) out.samples[j] -= g.samples[j];
    return out;
}

Signal scale(const Signal& f, std::complex<double> c) {
    Signal out = f;
    for (auto& v : out.samples) v *= c;
    return out;
}

LebesgueExponent::LebesgueExponent(double p) : p_(p) {
    if (!std::isfinite(p) || !(p > 1.0))
        throw std::domain_error("LebesgueExponent: p must lie in (1, inf)");
}

double lp_norm(const Signal& f, const LebesgueExponent& p) {
    const double pv = p.value();
    long double acc = 0.0L;
    if (pv == 2.0) {
        for (const auto& v : f.samples) acc += std::norm(v);
    } else {
        for (const auto& v : f.samples) acc += std::pow(std::abs(v), pv);
    }
    const long double weighted = acc * static_cast<long double>(f.grid.spacing());
    return static_cast<double>(std::pow(weighted, 1.0L / static_cast<long double>(pv)));
}

double linf_norm(const Signal& f) {
    double m = 0.0;
    for (const auto& v : f.samples) m = std::max(m, std::abs(v));
    return m;
}

InterpolationCheck interpolation_inequality_check(const Signal& f, const LebesgueExponent& p) {
    const double pv = p.value();
    if (!(pv > 2.0))
        throw std::domain_error("interpolation_inequality_check: requires p > 2");
    const double lhs = lp_norm(f, p);
    const double linf = linf_norm(f);
    const double l2 = lp_norm(f, LebesgueExponent(2.0));
    const double rhs = std::pow(linf, 1.0 - 2.0 / pv) * std::pow(l2, 2.0 / pv);
    // rounding slack: the inequality is exact for discrete measures
    return InterpolationCheck{lhs <= rhs * (1.0 + 1e-12) + 1e-300, lhs, rhs};
}

} // namespace invgen
