#include "invgen/experiments.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "invgen/fourier.hpp"
#include "invgen/quad.hpp"

namespace invgen {

Interval blowup_interval(double rho) {
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw std::domain_error("blowup_interval: rho must be positive");
    const double b = std::pow(rho, -1.0 / 3.0);
    return Interval(0.5 * b, b);
}

std::vector<ExperimentRecord> blowup_sweep(const LebesgueExponent& p, double rho_min,
                                           double rho_max, std::size_t points_per_decade,
                                           const BlowupOptions& opts) {
    if (!(rho_min >= 10.0)) throw std::domain_error("blowup_sweep: rho_min must be >= 10");
    if (!(rho_max <= 1e8)) throw std::domain_error("blowup_sweep: rho_max must be <= 1e8");
    if (!(rho_min < rho_max)) throw std::domain_error("blowup_sweep: need rho_min < rho_max");
    if (points_per_decade == 0)
        throw std::domain_error("blowup_sweep: points_per_decade must be >= 1");
    if (!(p.value() >= 2.0)) throw std::domain_error("blowup_sweep: requires p >= 2");
    if (!(opts.t > 0.0) || !std::isfinite(opts.t))
        throw std::domain_error("blowup_sweep: t must be > 0");

    std::vector<double> rhos;
    for (std::size_t i = 0;; ++i) {
        const double r =
            rho_min * std::pow(10.0, static_cast<double>(i) / static_cast<double>(points_per_decade));
        if (r > rho_max * (1.0 + 1e-9)) break;
        rhos.push_back(std::min(r, rho_max));
    }

    compute_Np(p); // warm the cache before the workers race for it

    const double t = opts.t;
    const double pv = p.value();
    std::vector<std::optional<ExperimentRecord>> slots(rhos.size());

    auto work = [&](std::size_t idx) {
        const double rho = rhos[idx];
        const Interval I = blowup_interval(rho);
        const double curvature = 2.0 * t / (I.b() * I.b() * I.b());
        ExperimentRecord rec{rho,
                             pv,
                             I,
                             norm_f_I(I, p),
                             std::numeric_limits<double>::quiet_NaN(),
                             std::numeric_limits<double>::quiet_NaN(),
                             std::numeric_limits<double>::quiet_NaN(),
                             false};
        try {
            rec.norm_TmfI = pv == 2.0 ? std::sqrt(I.length()) : norm_TmfI(I, t, p, opts.tol);
            rec.ratio = rec.norm_fI / rec.norm_TmfI;
            rec.emp_M = sup_abs_G(I, t).value * std::sqrt(curvature);
        } catch (const ConvergenceError&) {
            rec.flagged = true;
        }
        slots[idx] = rec;
    };

    unsigned workers = opts.workers != 0 ? opts.workers : std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(rhos.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < rhos.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> cursor{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = cursor.fetch_add(1); i < rhos.size();
                     i = cursor.fetch_add(1))
                    work(i);
            });
        for (auto& th : pool) th.join();
    }

    std::vector<ExperimentRecord> records;
    records.reserve(rhos.size());
    for (auto& s : slots) records.push_back(*s);
    return records;
}

FitResult fit_exponent(const std::vector<ExperimentRecord>& records) {
    std::vector<double> xs, ys;
    double rho_lo = std::numeric_limits<double>::infinity();
    double rho_hi = 0.0;
    double pv = 0.0;
    for (const auto& r : records) {
        if (r.flagged || !std::isfinite(r.ratio) || !(r.ratio > 0.0)) continue;
        if (pv == 0.0)
            pv = r.p;
        else if (pv != r.p)
            throw std::domain_error("fit_exponent: records mix different exponents p");
        xs.push_back(std::log(r.rho));
        ys.push_back(std::log(r.ratio));
        rho_lo = std::min(rho_lo, r.rho);
        rho_hi = std::max(rho_hi, r.rho);
    }
    if (xs.size() < 5)
        throw std::domain_error("fit_exponent: need at least 5 unflagged records");
    if (!(std::log10(rho_hi / rho_lo) >= 3.0 - 1e-9))
        throw std::domain_error("fit_exponent: records must span at least 3 decades of rho");

    const std::size_t n = xs.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    FitResult fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ss_res += e * e;
    }
    fit.r_squared = syy > 0.0 ? std::max(0.0, 1.0 - ss_res / syy) : 1.0;
    fit.predicted_slope = 1.0 / 6.0 - 1.0 / (3.0 * pv);
    return fit;
}

DualityReport duality_transfer_check(const LebesgueExponent& p, std::size_t budget,
                                     std::uint64_t seed) {
    if (!(p.value() >= 2.0))
        throw std::domain_error("duality_transfer_check: requires p >= 2");
    const Grid g(2.0, 16);
    const Multiplier m = make_osc_multiplier(1.0);
    const LebesgueExponent pc(p.value() == 2.0 ? 2.0 : p.conjugate());
    DualityReport rep;
    rep.p = p.value();
    rep.p_conj = pc.value();
    rep.estimate_p = estimate_discrete_norm(m, g, p, budget, seed);
    rep.estimate_p_conj = estimate_discrete_norm(adjoint_multiplier(m), g, pc, budget, seed + 1);
    return rep;
}

} // namespace invgen
