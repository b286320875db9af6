#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "invgen/experiments.hpp"
#include "invgen/semigroup.hpp"
#include "invgen/signal.hpp"

namespace invgen {

/// Decimal floating point at 17 significant digits ("%.17g").
std::string format_g17(double v);

/// Columns: x,re,im
void write_signal_csv(const Signal& f, std::ostream& os);

/// Columns: rho,p,a,b,norm_fI,norm_TmfI,ratio,emp_M,flag (flag: 0 ok, 1 excluded)
void write_blowup_csv(const std::vector<ExperimentRecord>& records, std::ostream& os);

/// Columns: p,slope,intercept,r_squared,predicted_slope
void write_fit_csv(const std::vector<std::pair<double, FitResult>>& fits, std::ostream& os);

/// Columns: t,eps,p,ratio,cauchy_increment
void write_semigroup_csv(const std::vector<SemigroupSweepRow>& rows, std::ostream& os);

} // namespace invgen
