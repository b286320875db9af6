#include "invgen/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace invgen {

namespace detail {

void fft_radix2(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::domain_error("fft_radix2: size must be a power of two");
    if (n == 1) return;

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    // per-call twiddle table; each entry from polar() so no error accumulates
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<std::complex<double>> w(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k)
        w[k] = std::polar(1.0, sign * 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n));

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len >> 1;
        const std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < half; ++j) {
                const std::complex<double> u = a[i + j];
                const std::complex<double> v = a[i + j + half] * w[j * step];
                a[i + j] = u + v;
                a[i + j + half] = u - v;
            }
        }
    }
}

} // namespace detail

// Index map between the signed frequency index m (xi_m = (m - N/2)/(2L)) and
// the DFT bin (m + N/2) mod N. Since xi_m x_j = -k/2 + jk/N for the signed
// index k = m - N/2, the continuous-transform quadrature is the plain DFT up
// to the alternating sign (-1)^m and the spacing factor of the source grid.
Signal forward_ft(const Signal& f) {
    const std::size_t n = f.grid.num_points();
    if (f.samples.size() != n) throw std::domain_error("forward_ft: malformed signal");
    std::vector<std::complex<double>> a = f.samples;
    detail::fft_radix2(a, false);

    Signal out{f.grid.frequency_grid(), std::vector<std::complex<double>>(n)};
    const double dx = f.grid.spacing();
    for (std::size_t m = 0; m < n; ++m) {
        const std::size_t bin = (m + n / 2) % n;
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        out.samples[m] = dx * sign * a[bin];
    }
    return out;
}

Signal inverse_ft(const Signal& g) {
    const std::size_t n = g.grid.num_points();
    if (g.samples.size() != n) throw std::domain_error("inverse_ft: malformed signal");
    std::vector<std::complex<double>> c(n);
    for (std::size_t m = 0; m < n; ++m) {
        const std::size_t bin = (m + n / 2) % n;
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        c[bin] = sign * g.samples[m];
    }
    detail::fft_radix2(c, true);

    Signal out{g.grid.frequency_grid(), std::move(c)};
    const double dxi = g.grid.spacing();
    for (auto& v : out.samples) v *= dxi;
    return out;
}

Signal apply_multiplier(const Multiplier& m, const Signal& f) {
    Signal spec = forward_ft(f);
    const Grid& fg = spec.grid;
    for (std::size_t k = 0; k < spec.samples.size(); ++k) {
        const double xi = fg.x(k);
        const std::complex<double> v = m.symbol(xi);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::domain_error("apply_multiplier: symbol non-finite at grid frequency " +
                                    std::to_string(xi) + " and no convention declared");
        if (std::abs(v) > m.modulus_bound * (1.0 + 1e-9) + 1e-12)
            throw std::domain_error("apply_multiplier: symbol exceeds declared modulus bound");
        spec.samples[k] *= v;
    }
    return inverse_ft(spec);
}

Multiplier make_osc_multiplier(double t) {
    if (!std::isfinite(t)) throw std::domain_error("make_osc_multiplier: t must be finite");
    Multiplier m;
    m.symbol = [t](double xi) -> std::complex<double> {
        if (xi == 0.0) return {1.0, 0.0}; // convention; matches xi -> inf limit
        return std::polar(1.0, t / xi);
    };
    m.unimodular = true;
    m.modulus_bound = 1.0;
    m.singular_points = {0.0};
    return m;
}

Multiplier make_regularized_semigroup_multiplier(double t, double eps) {
    if (!(t >= 0.0) || !std::isfinite(t))
        throw std::domain_error("make_regularized_semigroup_multiplier: t must be >= 0");
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw std::domain_error("make_regularized_semigroup_multiplier: eps must be > 0");
    Multiplier m;
    m.symbol = [t, eps](double xi) {
        return std::exp(t / std::complex<double>(-eps, -2.0 * M_PI * xi));
    };
    m.unimodular = false;
    m.modulus_bound = 1.0; // Re(1/(-eps - 2 pi i xi)) = -eps/(eps^2 + 4 pi^2 xi^2) < 0
    return m;
}

Multiplier adjoint_multiplier(const Multiplier& m) {
    Multiplier out = m;
    out.symbol = [base = m.symbol](double xi) { return std::conj(base(xi)); };
    return out;
}

Multiplier reflect_multiplier(const Multiplier& m) {
    Multiplier out = m;
    out.symbol = [base = m.symbol](double xi) { return base(-xi); };
    for (auto& s : out.singular_points) s = -s;
    return out;
}

namespace {

using cvec = std::vector<std::complex<double>>;

// T_m (or its adjoint) as a dense-free operator on DFT-ordered coefficients.
struct GridOperator {
    const Grid* grid;
    cvec symbol_on_bins; // indexed like Signal frequency samples

    cvec apply(const cvec& x, bool adjoint) const {
        const std::size_t n = x.size();
        cvec a = x;
        detail::fft_radix2(a, false);
        // the alternating signs and spacings of forward/inverse cancel in the
        // round trip, so the raw DFT conjugation suffices here
        for (std::size_t m = 0; m < n; ++m) {
            const std::size_t bin = (m + n / 2) % n;
            const std::complex<double> s =
                adjoint ? std::conj(symbol_on_bins[m]) : symbol_on_bins[m];
            a[bin] *= s;
        }
        detail::fft_radix2(a, true);
        const double inv_n = 1.0 / static_cast<double>(n);
        for (auto& v : a) v *= inv_n;
        return a;
    }
};

double vec_p_norm(const cvec& v, double p) {
    long double acc = 0.0L;
    for (const auto& z : v) acc += std::pow(std::abs(z), p);
    return static_cast<double>(std::pow(acc, 1.0L / static_cast<long double>(p)));
}

// duality map: z -> |z|^{p-1} * phase(z)
void dual_map(cvec& v, double p) {
    for (auto& z : v) {
        const double a = std::abs(z);
        if (a == 0.0) continue;
        z *= std::pow(a, p - 2.0);
    }
}

} // namespace

double estimate_discrete_norm(const Multiplier& m, const Grid& g, const LebesgueExponent& p,
                              std::size_t budget, std::uint64_t seed) {
    if (budget == 0) throw std::domain_error("estimate_discrete_norm: budget must be positive");
    const std::size_t n = g.num_points();
    const Grid fg = g.frequency_grid();

    cvec symbol(n);
    double max_mod = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const std::complex<double> v = m.symbol(fg.x(k));
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::domain_error("estimate_discrete_norm: symbol non-finite on the grid");
        symbol[k] = v;
        max_mod = std::max(max_mod, std::abs(v));
    }
    const double pv = p.value();
    if (pv == 2.0) return max_mod; // exact: the DFT diagonalizes T_m

    GridOperator op{&g, std::move(symbol)};
    const double pc = p.conjugate();

    const std::size_t starts = std::clamp<std::size_t>(budget / 10, 1, 8);
    const std::size_t iters = std::max<std::size_t>(2, budget / starts);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    double best = 0.0;
    for (std::size_t s = 0; s < starts; ++s) {
        cvec x(n);
        for (auto& z : x) z = {gauss(rng), gauss(rng)};
        double nx = vec_p_norm(x, pv);
        for (auto& z : x) z /= nx;

        double gamma_prev = 0.0;
        for (std::size_t it = 0; it < iters; ++it) {
            cvec y = op.apply(x, false);
            const double gamma = vec_p_norm(y, pv);
            best = std::max(best, gamma);
            if (gamma <= gamma_prev * (1.0 + 1e-13)) break;
            gamma_prev = gamma;

            dual_map(y, pv);
            cvec z = op.apply(y, true);
            dual_map(z, pc);
            const double nz = vec_p_norm(z, pv);
            if (nz == 0.0) break;
            for (auto& v : z) v /= nz;
            x = std::move(z);
        }
    }
    return best;
}

} // namespace invgen
