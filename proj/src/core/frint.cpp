#include "core/frint.hpp"

#include <cmath>

#include "core/parallel.hpp"

namespace fracdim {

double kernel_moment(double x, double u_lo, double u_hi, double gamma) {
    if (!(gamma > 0.0))
        throw error(errc::domain_error, "kernel_moment requires gamma > 0");
    if (!(u_lo < u_hi) || !(u_hi <= x))
        throw error(errc::invalid_argument, "kernel_moment requires u_lo < u_hi <= x");
    return (std::pow(x - u_lo, gamma) - std::pow(x - u_hi, gamma)) / gamma;
}

namespace {

// w[m] = kernel_moment(m*h, 0, h, gamma) for m = 1..n-1, i.e. the weight a
// cell m cells to the left of the output node receives. Built from one
// running pow so consecutive entries share the boundary term and the sum
// telescopes to (i*h)^gamma / gamma.
std::vector<double> weight_table(int n, double h, double gamma) {
    std::vector<double> w(static_cast<std::size_t>(n), 0.0);
    double prev = 0.0;
    for (int m = 1; m < n; ++m) {
        const double cur = std::pow(m * h, gamma);
        w[static_cast<std::size_t>(m)] = (cur - prev) / gamma;
        prev = cur;
    }
    return w;
}

}  // namespace

IntegralResult mixed_rl_integral(const SampledSurface& f, FracOrder order) {
    order.validate();
    f.domain().validate_for_integration();

    const int nx = f.nx();
    const int ny = f.ny();
    const int cx = nx - 1;
    const int cy = ny - 1;
    const std::vector<double> wx = weight_table(nx, f.dx(), order.gamma1);
    const std::vector<double> wy = weight_table(ny, f.dy(), order.gamma2);
    const double norm = 1.0 / (std::tgamma(order.gamma1) * std::tgamma(order.gamma2));

    // Cell corner means, stored with the y cell index fastest so the inner
    // accumulation below runs over contiguous memory.
    std::vector<double> gbar(static_cast<std::size_t>(cx) * cy);
    for (int k = 0; k < cx; ++k)
        for (int l = 0; l < cy; ++l)
            gbar[static_cast<std::size_t>(k) * cy + l] =
                0.25 * (f.at(k, l) + f.at(k + 1, l) + f.at(k, l + 1) + f.at(k + 1, l + 1));

    std::vector<double> out(static_cast<std::size_t>(nx) * ny, 0.0);
    parallel_for(
        nx,
        [&](int i) {
            if (i == 0) return;  // empty rectangle at x = a
            // Stage 1: integrate over u at fixed x_i, one partial sum per
            // y cell. Fixed k-ascending order keeps results independent of
            // the thread schedule.
            std::vector<double> tmp(static_cast<std::size_t>(cy), 0.0);
            for (int k = 0; k < i; ++k) {
                const double w = wx[static_cast<std::size_t>(i - k)];
                const double* g = gbar.data() + static_cast<std::size_t>(k) * cy;
                for (int l = 0; l < cy; ++l) tmp[static_cast<std::size_t>(l)] += w * g[l];
            }
            // Stage 2: integrate over v.
            for (int j = 1; j < ny; ++j) {
                double s = 0.0;
                for (int l = 0; l < j; ++l) s += wy[static_cast<std::size_t>(j - l)] * tmp[static_cast<std::size_t>(l)];
                out[static_cast<std::size_t>(i) + static_cast<std::size_t>(nx) * j] = norm * s;
            }
        },
        4);

    return IntegralResult{SampledSurface(f.domain(), f.grid(), std::move(out)), order};
}

double monomial_integral_closed_form(double p, double q, FracOrder order, const Domain& domain, double x,
                                     double y) {
    order.validate();
    if (p < 0.0 || q < 0.0)
        throw error(errc::invalid_argument, "monomial closed form requires p >= 0 and q >= 0");
    if (domain.a != 0.0 || domain.c != 0.0)
        throw error(errc::invalid_argument, "monomial closed form requires a = 0 and c = 0");
    const double coeff = std::tgamma(p + 1.0) * std::tgamma(q + 1.0) /
                         (std::tgamma(p + 1.0 + order.gamma1) * std::tgamma(q + 1.0 + order.gamma2));
    return coeff * std::pow(x, p + order.gamma1) * std::pow(y, q + order.gamma2);
}

std::vector<double> rl_integral_1d(std::span<const double> g, double a, double b, double gamma) {
    if (!(gamma > 0.0))
        throw error(errc::domain_error, "rl_integral_1d requires gamma > 0");
    if (!(a < b) || a < 0.0)
        throw error(errc::domain_error, "rl_integral_1d requires 0 <= a < b");
    const int n = static_cast<int>(g.size());
    if (n < 2)
        throw error(errc::invalid_argument, "rl_integral_1d needs at least 2 samples");
    for (double v : g)
        if (!std::isfinite(v))
            throw error(errc::numeric_error, "rl_integral_1d samples must be finite");

    const double h = (b - a) / (n - 1);
    const std::vector<double> w = weight_table(n, h, gamma);
    const double norm = 1.0 / std::tgamma(gamma);
    std::vector<double> out(g.size(), 0.0);
    for (int i = 1; i < n; ++i) {
        double s = 0.0;
        for (int k = 0; k < i; ++k)
            s += w[static_cast<std::size_t>(i - k)] * 0.5 * (g[static_cast<std::size_t>(k)] + g[static_cast<std::size_t>(k) + 1]);
        out[static_cast<std::size_t>(i)] = norm * s;
    }
    return out;
}

double semigroup_defect(const SampledSurface& f, FracOrder order1, FracOrder order2) {
    const IntegralResult first = mixed_rl_integral(f, order1);
    const IntegralResult composed = mixed_rl_integral(first.surface, order2);
    const IntegralResult direct = mixed_rl_integral(f, order1 + order2);
    double defect = 0.0;
    const auto cv = composed.surface.values();
    const auto dv = direct.surface.values();
    for (std::size_t idx = 0; idx < cv.size(); ++idx)
        defect = std::max(defect, std::abs(cv[idx] - dv[idx]));
    return defect;
}

}  // namespace fracdim
