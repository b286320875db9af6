#pragma once

#include <complex>

#include "invgen/signal.hpp"

namespace invgen {

/// Frequency interval I = [a, b], a < b.
class Interval {
public:
    Interval(double a, double b);
    double a() const { return a_; }
    double b() const { return b_; }
    double length() const { return b_ - a_; }
    double midpoint() const { return 0.5 * (a_ + b_); }

private:
    double a_, b_;
};

/// The sinc witness f_I = F^-1 1_I in closed form:
/// f_I(x) = e^{i pi (a+b) x} |I| sinc(|I| x).
std::complex<double> eval_f_I(const Interval& I, double x);

/// N_p = (int |sinc|^p)^(1/p), cached per exponent. Finite quadrature over
/// [-X, X] with the analytic tail handled by the 1/(pi x)^p envelope.
double compute_Np(const LebesgueExponent& p);

/// ||f_I||_p = |I|^((p-1)/p) N_p, exact closed form (no grid).
double norm_f_I(const Interval& I, const LebesgueExponent& p);

} // namespace invgen
