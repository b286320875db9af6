#include "invgen/io.hpp"

#include <cstdio>

namespace invgen {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_signal_csv(const Signal& f, std::ostream& os) {
    os << "x,re,im\n";
    for (std::size_t j = 0; j < f.samples.size(); ++j) {
        os << format_g17(f.grid.x(j)) << ',' << format_g17(f.samples[j].real()) << ','
           << format_g17(f.samples[j].imag()) << '\n';
    }
}

void write_blowup_csv(const std::vector<ExperimentRecord>& records, std::ostream& os) {
    os << "rho,p,a,b,norm_fI,norm_TmfI,ratio,emp_M,flag\n";
    for (const auto& r : records) {
        os << format_g17(r.rho) << ',' << format_g17(r.p) << ',' << format_g17(r.interval.a())
           << ',' << format_g17(r.interval.b()) << ',' << format_g17(r.norm_fI) << ','
           << format_g17(r.norm_TmfI) << ',' << format_g17(r.ratio) << ','
           << format_g17(r.emp_M) << ',' << (r.flagged ? 1 : 0) << '\n';
    }
}

void write_fit_csv(const std::vector<std::pair<double, FitResult>>& fits, std::ostream& os) {
    os << "p,slope,intercept,r_squared,predicted_slope\n";
    for (const auto& [p, fit] : fits) {
        os << format_g17(p) << ',' << format_g17(fit.slope) << ',' << format_g17(fit.intercept)
           << ',' << format_g17(fit.r_squared) << ',' << format_g17(fit.predicted_slope) << '\n';
    }
}

void write_semigroup_csv(const std::vector<SemigroupSweepRow>& rows, std::ostream& os) {
    os << "t,eps,p,ratio,cauchy_increment\n";
    for (const auto& r : rows) {
        os << format_g17(r.t) << ',' << format_g17(r.eps) << ',' << format_g17(r.p) << ','
           << format_g17(r.ratio) << ',' << format_g17(r.cauchy_increment) << '\n';
    }
}

} // namespace invgen
