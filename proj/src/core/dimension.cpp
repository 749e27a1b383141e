#include "core/dimension.hpp"

#include <algorithm>
#include <cmath>

#include "core/fit.hpp"

namespace fracdim {

namespace {

int cells_per_side(int samples, int k, const char* axis) {
    if (k < 0 || k > 30)
        throw error(errc::invalid_argument, "level k out of range");
    const int m = 1 << k;
    if ((samples - 1) % m != 0)
        throw error(errc::invalid_argument,
                    std::string("level misaligned: (n") + axis + "-1) not divisible by 2^k");
    return m;
}

}  // namespace

std::vector<double> cell_ranges(const SampledSurface& f, int k) {
    const int m = cells_per_side(f.nx(), k, "x");
    cells_per_side(f.ny(), k, "y");
    const int span_x = (f.nx() - 1) >> k;
    const int span_y = (f.ny() - 1) >> k;

    std::vector<double> ranges(static_cast<std::size_t>(m) * m);
    for (int J = 0; J < m; ++J) {
        for (int I = 0; I < m; ++I) {
            double lo = f.at(I * span_x, J * span_y);
            double hi = lo;
            for (int j = J * span_y; j <= (J + 1) * span_y; ++j)
                for (int i = I * span_x; i <= (I + 1) * span_x; ++i) {
                    const double v = f.at(i, j);
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
            ranges[static_cast<std::size_t>(I) + static_cast<std::size_t>(m) * J] = hi - lo;
        }
    }
    return ranges;
}

long long box_count(const SampledSurface& f, int k) {
    const std::vector<double> ranges = cell_ranges(f, k);
    const double delta = std::ldexp(1.0, -k);
    long long n = 0;
    for (double r : ranges) n += static_cast<long long>(std::floor(r / delta)) + 1;
    return n;
}

DimensionEstimate estimate_box_dimension(const SampledSurface& f, int k_min, int k_max) {
    if (k_min < 1 || k_max < k_min + 2)
        throw error(errc::invalid_argument, "need k_min >= 1 and k_max >= k_min + 2");
    cells_per_side(f.nx(), k_max, "x");
    cells_per_side(f.ny(), k_max, "y");
    if ((f.nx() - 1) >> k_max < 4 || (f.ny() - 1) >> k_max < 4)
        throw error(errc::guard_error,
                    "sampling too coarse: need at least 4 samples per cell edge at the finest level");

    DimensionEstimate est;
    std::vector<double> lx, ly;
    for (int k = k_min; k <= k_max; ++k) {
        const double delta = std::ldexp(1.0, -k);
        const long long n = box_count(f, k);
        est.levels.push_back({k, delta, n});
        lx.push_back(std::log(1.0 / delta));
        ly.push_back(std::log(static_cast<double>(n)));
    }
    const LineFit fit = least_squares(lx, ly);
    est.slope = fit.slope;
    est.intercept = fit.intercept;
    est.r_squared = fit.r_squared;
    return est;
}

HolderEstimate holder_exponent(const SampledSurface& f, int k_min, int k_max) {
    if (k_min < 1 || k_max < k_min + 1)
        throw error(errc::invalid_argument, "need k_min >= 1 and k_max >= k_min + 1");
    const int nx = f.nx();
    const int ny = f.ny();

    HolderEstimate est;
    est.r_squared = 0.0;
    // Smallest lag first; the running max turns the raw sups into a modulus
    // of continuity over lags up to h.
    double running = 0.0;
    for (int k = k_max; k >= k_min; --k) {
        const int m = 1 << k;
        if ((nx - 1) % m != 0 || (ny - 1) % m != 0)
            throw error(errc::invalid_argument, "lag misaligned with the grid");
        const int sx = (nx - 1) >> k;
        const int sy = (ny - 1) >> k;
        if (sx < 2 || sy < 2)
            throw error(errc::invalid_argument, "lag below grid resolution: needs at least 2 grid steps");

        double sup = 0.0;
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i + sx < nx; ++i)
                sup = std::max(sup, std::abs(f.at(i + sx, j) - f.at(i, j)));
        for (int j = 0; j + sy < ny; ++j)
            for (int i = 0; i < nx; ++i)
                sup = std::max(sup, std::abs(f.at(i, j + sy) - f.at(i, j)));
        for (int j = 0; j + sy < ny; ++j)
            for (int i = 0; i + sx < nx; ++i)
                sup = std::max(sup, std::abs(f.at(i + sx, j + sy) - f.at(i, j)));
        running = std::max(running, sup);
        est.lags.push_back({f.domain().width() / m, running});
    }

    bool all_positive = true;
    for (const HolderLag& lag : est.lags)
        if (!(lag.sup_increment > 0.0)) all_positive = false;
    if (!all_positive) return est;  // exponent undefined

    std::vector<double> lx, ly;
    for (const HolderLag& lag : est.lags) {
        lx.push_back(std::log(lag.h));
        ly.push_back(std::log(lag.sup_increment));
    }
    const LineFit fit = least_squares(lx, ly);
    est.exponent = fit.slope;
    est.r_squared = fit.r_squared;
    return est;
}

}  // namespace fracdim
