#pragma once

#include <cstdint>
#include <vector>

#include "invgen/oscillatory.hpp"
#include "invgen/signal.hpp"
#include "invgen/testfam.hpp"

namespace invgen {

/// One row of a rho-sweep. interval is always [rho^{-1/3}/2, rho^{-1/3}],
/// recomputed from rho; emp_M = sup_y |G| * sqrt(2t/b^3).
struct ExperimentRecord {
    double rho;
    double p;
    Interval interval;
    double norm_fI;
    double norm_TmfI;
    double ratio; // norm_fI / norm_TmfI
    double emp_M;
    bool flagged; // quadrature failed; excluded from fits
};

struct FitResult {
    double slope;
    double intercept;
    double r_squared;
    double predicted_slope; // 1/6 - 1/(3p)
};

Interval blowup_interval(double rho);

struct BlowupOptions {
    double t = 1.0;
    double tol = 1e-4;   // relative tolerance of the oscillatory norm quadrature
    unsigned workers = 0; // 0 = hardware concurrency
};

/// Geometric rho sweep of the witness-ratio r(rho, p) = ||f_I||_p / ||T_m f_I||_p.
/// Requires rho_min >= 10, rho_max <= 1e8, p >= 2. Records are sorted by rho;
/// convergence failures flag the record and the sweep continues.
std::vector<ExperimentRecord> blowup_sweep(const LebesgueExponent& p, double rho_min,
                                           double rho_max, std::size_t points_per_decade,
                                           const BlowupOptions& opts = {});

/// Least-squares slope of log(ratio) vs log(rho) over unflagged records.
/// Requires >= 5 unflagged records spanning >= 3 decades.
FitResult fit_exponent(const std::vector<ExperimentRecord>& records);

struct DualityReport {
    double p;
    double p_conj;
    double estimate_p;      // ascent estimate for m = e^{i/xi} at p
    double estimate_p_conj; // ascent estimate for the adjoint symbol at p'
};

/// Finite-dimensional duality probe on a tiny grid (N = 16): the p -> p norm
/// of T_m and the p' -> p' norm of its adjoint are equal; the two ascent
/// estimates should agree within the estimator spread.
DualityReport duality_transfer_check(const LebesgueExponent& p, std::size_t budget = 600,
                                     std::uint64_t seed = 0x5eedbeefULL);

} // namespace invgen
