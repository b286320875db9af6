#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "invgen/signal.hpp"

namespace invgen {

/// A frequency-domain symbol. Conventions at singular frequencies are baked
/// into the callable; singular_points records where that happened.
/// The Fourier convention throughout is
///   (Ff)(xi)  = int e^{-2 pi i xi y} f(y) dy,
///   (F^-1 g)(x) = int e^{+2 pi i x y} g(y) dy.
struct Multiplier {
    std::function<std::complex<double>(double)> symbol;
    bool unimodular = false;
    double modulus_bound = 1.0;
    std::vector<double> singular_points{};
};

/// Quadrature approximation of the continuous Fourier transform on the grid:
/// FFT with the phase and spacing corrections that make forward_ft followed
/// by inverse_ft the identity and discrete Plancherel exact.
Signal forward_ft(const Signal& f);
Signal inverse_ft(const Signal& g);

/// T_m f = F^-1 (m . F f) on the grid. Throws std::domain_error if the symbol
/// is non-finite at a grid frequency or exceeds its declared modulus bound.
Signal apply_multiplier(const Multiplier& m, const Signal& f);

/// xi -> e^{i t / xi}; unimodular, with the convention symbol(0) := 1.
Multiplier make_osc_multiplier(double t);

/// xi -> exp(t / (-eps - 2 pi i xi)), the regularized inverse-generator
/// symbol for the shift generator -d/dx. Requires t >= 0, eps > 0; the
/// modulus is exp(-t eps / (eps^2 + 4 pi^2 xi^2)) <= 1.
Multiplier make_regularized_semigroup_multiplier(double t, double eps);

/// Symbol conjugation; the resulting grid operator is the adjoint of T_m.
Multiplier adjoint_multiplier(const Multiplier& m);

/// Symbol reflection xi -> m(-xi).
Multiplier reflect_multiplier(const Multiplier& m);

/// Lower bound for the grid-operator p->p norm of T_m by multi-start
/// steepest ascent (budget ~ total ascent steps, split over starts).
/// Deterministic for a fixed seed. For p = 2 the exact norm max|m(xi_k)|
/// is returned. Throws std::domain_error if budget == 0.
double estimate_discrete_norm(const Multiplier& m, const Grid& g, const LebesgueExponent& p,
                              std::size_t budget, std::uint64_t seed = 0x1f2e3d4c5b6a798ULL);

namespace detail {
/// In-place radix-2 FFT, unnormalized; inverse=true uses the e^{+2 pi i jk/N}
/// kernel. Size must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& a, bool inverse);
} // namespace detail

} // namespace invgen
