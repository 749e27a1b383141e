#pragma once

#include <vector>

#include "core/surface.hpp"

namespace fracdim {

// Traversal direction of a grid line: Axis::x walks a row (y fixed at node
// index `index`), Axis::y walks a column (x fixed).
enum class Axis { x, y };

struct LineVariation {
    Axis axis;
    int index;
    double variation;
};

struct RefinementPoint {
    int nx;
    int ny;
    double value;
};

struct VariationReport {
    std::vector<LineVariation> lines;
    double arzela_lower_bound = 0.0;
    std::vector<RefinementPoint> refinement_study;
};

// Sum of |f(next) - f(prev)| along one grid line.
double line_variation(const SampledSurface& f, Axis axis, int index);
// Same, restricted to node positions [from, to] along the line.
double line_variation(const SampledSurface& f, Axis axis, int index, int from, int to);

// Supremum of sum |f(p_{t+1}) - f(p_t)| over weakly monotone chains of grid
// nodes (both coordinates nondecreasing), by dynamic programming in
// lexicographic order. A certified lower bound for the variation taken over
// all monotone sequences in the domain. O(N^2) in the node count; guarded at
// nx*ny <= 8192.
double arzela_variation_lb(const SampledSurface& f);

// True iff f is nondecreasing in x along every row and in y along every
// column.
bool is_bimonotone(const SampledSurface& f);

}  // namespace fracdim
