#pragma once

#include <complex>

#include "invgen/signal.hpp"
#include "invgen/testfam.hpp"

namespace invgen {

/// Phase parameters of Phi_y(x) = t/x + 2 pi x y.
struct Phase {
    double t; // oscillation strength; > 0 in production use, any finite value in tests
    double y; // output variable
};

/// Lower bound for |Phi''| on I = [a,b] in (0, inf): rho = 2t/b^3.
struct CurvatureBound {
    double rho;
    static CurvatureBound from_interval(const Interval& I, double t);
};

/// (T_m f_I)(y) = int_I e^{i Phi_y(x)} dx by oscillation-aware panels
/// (width <= half the local period) with adaptive refinement inside each.
/// rel_tol is relative to |I|, the trivial bound on |G|.
std::complex<double> eval_G(const Interval& I, const Phase& ph, double rel_tol = 1e-9);

/// rho^{-1/2} with rho = 2t/b^3 recomputed from I: the rho-part of the
/// second-derivative oscillatory bound. Only k = 2 is supported.
double vdc_bound(const Interval& I, const Phase& ph, int k = 2);

/// ||T_m f_I||_p = (int |G(y)|^p dy)^{1/p}. For p = 2 the exact value
/// |I|^{1/2} is returned unless force_quadrature is set. The y-integral
/// concentrates on the stationary band [t/(2 pi b^2), t/(2 pi a^2)]; outside
/// the numeric region the first-derivative bound |G| <= 3/min|Phi'| certifies
/// that the dropped tails contribute at most ~tol * result^p.
double norm_TmfI(const Interval& I, double t, const LebesgueExponent& p, double tol,
                 bool force_quadrature = false);

struct SupG {
    double value;
    double argmax_y;
};

/// sup_y |G(y)|, located by a dense scan of the stationary band plus local
/// refinement.
SupG sup_abs_G(const Interval& I, double t);

} // namespace invgen
