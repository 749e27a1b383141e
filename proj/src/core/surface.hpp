#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "core/types.hpp"

namespace fracdim {

// ---------------------------------------------------------------------------
// Generator gallery
// ---------------------------------------------------------------------------

struct Constant {
    double value = 0.0;
};

/// x^p * y^q with p, q >= 0.
struct Monomial {
    double p = 0.0;
    double q = 0.0;
};

/// sin(omega1 * x) * sin(omega2 * y).
struct SeparableSine {
    double omega1 = 1.0;
    double omega2 = 1.0;
};

/// Truncated rough sum  W(x,y) = sum_{k=0}^{terms} lambda^{-mu k} *
/// (sin(lambda^k x) + sin(lambda^k y)).  The amplitude-frequency scaling
/// makes mu the nominal Hoelder exponent of W.
struct Weierstrass {
    double lambda = 2.0;  // > 1
    double mu = 0.5;      // in (0,1)
    int terms = 8;        // truncation length K >= 1
};

/// Piecewise-rescaled bump surface M on [0,1]^2: continuous, bounded by
/// 1/16 in magnitude, with unbounded variation along y = 1.
struct UVFunctionM {};

using GeneratorSpec = std::variant<Constant, Monomial, SeparableSine, Weierstrass, UVFunctionM>;

/// Parses the CLI shorthand `name:param,param`, e.g. "constant:3",
/// "monomial:1,1", "separable-sine:6.283,6.283", "weierstrass:3,0.5,12",
/// "uv-m". Throws invalid_argument on unknown names or bad parameters.
GeneratorSpec parse_generator(std::string_view text);

/// Canonical shorthand for a spec (inverse of parse_generator).
std::string describe_generator(const GeneratorSpec& spec);

// ---------------------------------------------------------------------------
// Sampled surfaces
// ---------------------------------------------------------------------------

/// Immutable uniform-grid sampling of a bivariate function. Values are
/// row-major with the x-index fastest: value(i,j) = values[i + nx*j].
/// All values are finite by construction.
class SampledSurface {
public:
    SampledSurface(Domain domain, GridSpec grid, std::vector<double> values);

    const Domain& domain() const noexcept { return domain_; }
    const GridSpec& grid() const noexcept { return grid_; }
    int nx() const noexcept { return grid_.nx; }
    int ny() const noexcept { return grid_.ny; }

    double dx() const noexcept { return domain_.width() / (grid_.nx - 1); }
    double dy() const noexcept { return domain_.height() / (grid_.ny - 1); }

    double x(int i) const noexcept { return domain_.a + i * dx(); }
    double y(int j) const noexcept { return domain_.c + j * dy(); }

    double at(int i, int j) const { return values_[static_cast<std::size_t>(i) + static_cast<std::size_t>(nx()) * j]; }
    std::span<const double> values() const noexcept { return values_; }

private:
    Domain domain_;
    GridSpec grid_;
    std::vector<double> values_;
};

/// Grid nodes in row-major order (x-index fastest), endpoints included.
std::vector<std::pair<double, double>> make_grid(const Domain& domain, const GridSpec& grid);

/// Generating bump Theta(x,y) = x*(x-0.5)*y on [0,0.5] x [0,1]; vanishes on
/// x = 0 and x = 0.5. Throws domain_error outside its rectangle.
double eval_theta(double x, double y);

/// Index n >= 1 of the dyadic piece [a_{n-1}, a_n) containing x, where
/// a_n = 1 - 2^-n and a_0 = 0. Defined for 0 <= x < 1.
int branch_index(double x);

/// M(x,y) on [0,1]^2, evaluated piecewise in closed form:
/// (1/n) * Theta(2^{n-1} (x - a_{n-1}), y) on piece n, and 0 at x = 1.
double eval_uv_m(double x, double y);

/// Evaluates a generator at a point without sampling a full grid.
double eval_generator(const GeneratorSpec& spec, double x, double y);

/// Samples a generator over a grid. Validates spec/domain compatibility
/// (UVFunctionM requires [0,1]^2) and that every value is finite.
SampledSurface sample(const GeneratorSpec& spec, const Domain& domain, const GridSpec& grid);

}  // namespace fracdim
