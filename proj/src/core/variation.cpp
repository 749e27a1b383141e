#include "core/variation.hpp"

#include <algorithm>
#include <cmath>

namespace fracdim {

double line_variation(const SampledSurface& f, Axis axis, int index) {
    const int len = axis == Axis::x ? f.nx() : f.ny();
    return line_variation(f, axis, index, 0, len - 1);
}

double line_variation(const SampledSurface& f, Axis axis, int index, int from, int to) {
    const int len = axis == Axis::x ? f.nx() : f.ny();
    const int lines = axis == Axis::x ? f.ny() : f.nx();
    if (index < 0 || index >= lines)
        throw error(errc::invalid_argument, "line index out of range");
    if (from < 0 || to >= len || from > to)
        throw error(errc::invalid_argument, "line node range out of order or out of range");
    double v = 0.0;
    for (int t = from; t < to; ++t) {
        const double cur = axis == Axis::x ? f.at(t, index) : f.at(index, t);
        const double nxt = axis == Axis::x ? f.at(t + 1, index) : f.at(index, t + 1);
        v += std::abs(nxt - cur);
    }
    return v;
}

double arzela_variation_lb(const SampledSurface& f) {
    const int nx = f.nx();
    const int ny = f.ny();
    const long long nodes = static_cast<long long>(nx) * ny;
    if (nodes > 8192)
        throw error(errc::guard_error, "grid too large for the O(N^2) chain search (nx*ny <= 8192)");

    // best[q] = largest chain sum over weakly monotone chains ending at q.
    // Row-major order guarantees every predecessor is finished first.
    std::vector<double> best(static_cast<std::size_t>(nodes), 0.0);
    double overall = 0.0;
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const double fp = f.at(i, j);
            double v = 0.0;
            for (int qj = 0; qj <= j; ++qj) {
                const int qi_max = qj == j ? i - 1 : i;
                const double* row = best.data() + static_cast<std::size_t>(qj) * nx;
                for (int qi = 0; qi <= qi_max; ++qi)
                    v = std::max(v, row[qi] + std::abs(fp - f.at(qi, qj)));
            }
            best[static_cast<std::size_t>(j) * nx + i] = v;
            overall = std::max(overall, v);
        }
    }
    return overall;
}

bool is_bimonotone(const SampledSurface& f) {
    for (int j = 0; j < f.ny(); ++j)
        for (int i = 0; i + 1 < f.nx(); ++i)
            if (f.at(i + 1, j) < f.at(i, j)) return false;
    for (int j = 0; j + 1 < f.ny(); ++j)
        for (int i = 0; i < f.nx(); ++i)
            if (f.at(i, j + 1) < f.at(i, j)) return false;
    return true;
}

}  // namespace fracdim
