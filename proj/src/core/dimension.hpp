#pragma once

#include <optional>
#include <vector>

#include "core/surface.hpp"

namespace fracdim {

struct DimensionLevel {
    int k;
    double delta;
    long long count;
};

struct DimensionEstimate {
    std::vector<DimensionLevel> levels;
    double slope;
    double intercept;
    double r_squared;
};

struct HolderLag {
    double h;
    double sup_increment;
};

struct HolderEstimate {
    std::vector<HolderLag> lags;
    // Empty when every sup-increment is 0 (e.g. constant surfaces), where a
    // log-log slope has no meaning.
    std::optional<double> exponent;
    double r_squared;
};

// Oscillation (max - min of samples) over each closed dyadic cell at level k.
// The domain is split into 2^k x 2^k cells; samples on shared edges belong
// to both neighbors. Requires (nx-1) and (ny-1) divisible by 2^k. Returned
// row-major, x cell index fastest.
std::vector<double> cell_ranges(const SampledSurface& f, int k);

// Number of delta-cubes meeting the graph at level k, with the domain mapped
// onto the unit square so delta = 2^-k; sample values keep their own scale.
// Counting rule: sum over cells of floor(range/delta) + 1.
long long box_count(const SampledSurface& f, int k);

// Least-squares slope of log N_delta against log(1/delta) over levels
// k_min..k_max. Requires k_min >= 1, k_max >= k_min + 2, all levels aligned
// with the grid, and at least 4 samples per cell edge at the finest level.
DimensionEstimate estimate_box_dimension(const SampledSurface& f, int k_min, int k_max);

// Empirical Holder exponent from dyadic lags h = (b-a)/2^k, k in
// [k_min, k_max]; each lag must span at least 2 grid steps. For each lag:
// sup of |f(p+offset) - f(p)| over all grid nodes and the three offsets
// (h,0), (0,h'), (h,h') with h' the matching y lag, accumulated as a running
// max over lags up to h so the statistic is a modulus of continuity
// (nondecreasing in h). Exponent = slope of log sup against log h.
HolderEstimate holder_exponent(const SampledSurface& f, int k_min, int k_max);

}  // namespace fracdim
