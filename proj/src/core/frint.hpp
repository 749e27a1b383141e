#pragma once

#include <span>
#include <vector>

#include "core/surface.hpp"

namespace fracdim {

struct IntegralResult {
    SampledSurface surface;
    FracOrder order;
};

// Exact integral of the one-sided kernel over one cell:
//   kernel_moment = integral over [u_lo, u_hi] of (x-u)^(gamma-1) du
//                 = ((x-u_lo)^gamma - (x-u_hi)^gamma) / gamma.
// Finite even at the singular endpoint u_hi = x.
double kernel_moment(double x, double u_lo, double u_hi, double gamma);

// Mixed Riemann-Liouville fractional integral of a sampled surface on its
// own grid. Product quadrature: each source cell contributes its corner-mean
// value times the exact kernel moments in x and y, normalized by
// 1/(Gamma(gamma1)*Gamma(gamma2)). Values on the x = a and y = c edges are 0.
// Factorized accumulation, cost O(nx^2*ny + nx*ny^2); deterministic
// regardless of thread count.
IntegralResult mixed_rl_integral(const SampledSurface& f, FracOrder order);

// Closed form for f(x,y) = x^p * y^q on a domain anchored at the origin:
//   Gamma(p+1)Gamma(q+1) / (Gamma(p+1+gamma1)Gamma(q+1+gamma2))
//     * x^(p+gamma1) * y^(q+gamma2).
double monomial_integral_closed_form(double p, double q, FracOrder order, const Domain& domain, double x,
                                     double y);

// 1-D Riemann-Liouville integral of samples on a uniform grid over [a,b],
// same corner-mean product quadrature as the 2-D operator.
std::vector<double> rl_integral_1d(std::span<const double> g, double a, double b, double gamma);

// sup over grid nodes of |I^o2(I^o1 f) - I^(o1+o2) f|, the discretization
// error of an identity that holds exactly for the continuous operator.
double semigroup_defect(const SampledSurface& f, FracOrder order1, FracOrder order2);

}  // namespace fracdim
