#include "core/surface.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

namespace fracdim {

void Domain::validate() const {
    if (!(a < b) || !(c < d))
        throw error(errc::invalid_argument, "domain requires a < b and c < d");
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d))
        throw error(errc::invalid_argument, "domain bounds must be finite");
}

void Domain::validate_for_integration() const {
    validate();
    if (a < 0.0 || c < 0.0)
        throw error(errc::domain_error, "fractional integration requires a >= 0 and c >= 0");
}

void GridSpec::validate() const {
    if (nx < 2 || ny < 2)
        throw error(errc::invalid_argument, "grid requires nx >= 2 and ny >= 2");
}

void FracOrder::validate() const {
    if (!(gamma1 > 0.0) || !(gamma2 > 0.0) || !std::isfinite(gamma1) || !std::isfinite(gamma2))
        throw error(errc::domain_error, "fractional order requires gamma1 > 0 and gamma2 > 0");
}

SampledSurface::SampledSurface(Domain domain, GridSpec grid, std::vector<double> values)
    : domain_(domain), grid_(grid), values_(std::move(values)) {
    domain_.validate();
    grid_.validate();
    const std::size_t expected = static_cast<std::size_t>(grid_.nx) * static_cast<std::size_t>(grid_.ny);
    if (values_.size() != expected)
        throw error(errc::invalid_argument, "surface value count does not match nx*ny");
    for (double v : values_)
        if (!std::isfinite(v))
            throw error(errc::numeric_error, "surface values must be finite");
}

std::vector<std::pair<double, double>> make_grid(const Domain& domain, const GridSpec& grid) {
    domain.validate();
    grid.validate();
    const double hx = domain.width() / (grid.nx - 1);
    const double hy = domain.height() / (grid.ny - 1);
    std::vector<std::pair<double, double>> nodes;
    nodes.reserve(static_cast<std::size_t>(grid.nx) * grid.ny);
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
            nodes.emplace_back(domain.a + i * hx, domain.c + j * hy);
    return nodes;
}

double eval_theta(double x, double y) {
    if (!(x >= 0.0 && x <= 0.5) || !(y >= 0.0 && y <= 1.0))
        throw error(errc::domain_error, "theta is defined on [0,0.5] x [0,1]");
    return x * (x - 0.5) * y;
}

// a_n = 1 - 2^-n, exact in double for n well below the mantissa width.
static double piece_boundary(int n) { return 1.0 - std::ldexp(1.0, -n); }

int branch_index(double x) {
    if (!(x >= 0.0 && x < 1.0))
        throw error(errc::domain_error, "branch_index needs 0 <= x < 1");
    int n = 1;
    if (x > 0.0) n = static_cast<int>(std::floor(std::log2(1.0 / (1.0 - x)))) + 1;
    // log2 rounding can land one piece off near a boundary; fix against
    // exact a_n values.
    while (n > 1 && x < piece_boundary(n - 1)) --n;
    while (x >= piece_boundary(n)) ++n;
    return n;
}

double eval_uv_m(double x, double y) {
    if (!(x >= 0.0 && x <= 1.0) || !(y >= 0.0 && y <= 1.0))
        throw error(errc::domain_error, "M is defined on [0,1] x [0,1]");
    if (x == 1.0) return 0.0;  // |G_n| <= 1/(16n), so the limit at x = 1 is 0
    const int n = branch_index(x);
    const double upsilon = std::ldexp(x - piece_boundary(n - 1), n - 1);
    // Theta(0,y) = 0 kills the (n-1)/n term of G_n, so the piece value is
    // exactly Theta(upsilon, y)/n; no series truncation is involved.
    return upsilon * (upsilon - 0.5) * y / n;
}

double eval_generator(const GeneratorSpec& spec, double x, double y) {
    return std::visit(
        [&](const auto& g) -> double {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return g.value;
            } else if constexpr (std::is_same_v<T, Monomial>) {
                const double xf = g.p == 0.0 ? 1.0 : std::pow(x, g.p);
                const double yf = g.q == 0.0 ? 1.0 : std::pow(y, g.q);
                return xf * yf;
            } else if constexpr (std::is_same_v<T, SeparableSine>) {
                return std::sin(g.omega1 * x) * std::sin(g.omega2 * y);
            } else if constexpr (std::is_same_v<T, Weierstrass>) {
                double sum = 0.0;
                double freq = 1.0;
                for (int k = 0; k <= g.terms; ++k) {
                    const double amp = std::pow(g.lambda, -g.mu * k);
                    sum += amp * (std::sin(freq * x) + std::sin(freq * y));
                    freq *= g.lambda;
                }
                return sum;
            } else {
                static_assert(std::is_same_v<T, UVFunctionM>);
                return eval_uv_m(x, y);
            }
        },
        spec);
}

static void validate_spec(const GeneratorSpec& spec, const Domain& domain) {
    if (std::holds_alternative<UVFunctionM>(spec)) {
        if (domain.a != 0.0 || domain.b != 1.0 || domain.c != 0.0 || domain.d != 1.0)
            throw error(errc::invalid_argument, "uv-m is only defined on [0,1] x [0,1]");
    }
    if (const auto* m = std::get_if<Monomial>(&spec)) {
        if (m->p < 0.0 || m->q < 0.0)
            throw error(errc::invalid_argument, "monomial requires p >= 0 and q >= 0");
    }
    if (const auto* w = std::get_if<Weierstrass>(&spec)) {
        if (!(w->lambda > 1.0))
            throw error(errc::invalid_argument, "weierstrass requires lambda > 1");
        if (!(w->mu > 0.0 && w->mu < 1.0))
            throw error(errc::invalid_argument, "weierstrass requires mu in (0,1)");
        if (w->terms < 1)
            throw error(errc::invalid_argument, "weierstrass requires at least 1 term");
    }
}

SampledSurface sample(const GeneratorSpec& spec, const Domain& domain, const GridSpec& grid) {
    domain.validate();
    grid.validate();
    validate_spec(spec, domain);

    const double hx = domain.width() / (grid.nx - 1);
    const double hy = domain.height() / (grid.ny - 1);
    std::vector<double> values(static_cast<std::size_t>(grid.nx) * grid.ny);
    for (int j = 0; j < grid.ny; ++j) {
        const double yj = domain.c + j * hy;
        for (int i = 0; i < grid.nx; ++i)
            values[static_cast<std::size_t>(i) + static_cast<std::size_t>(grid.nx) * j] =
                eval_generator(spec, domain.a + i * hx, yj);
    }
    return SampledSurface(domain, grid, std::move(values));  // finiteness checked by ctor
}

// --- shorthand grammar ------------------------------------------------------

namespace {

std::vector<double> parse_params(std::string_view text, std::size_t want, const char* name) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size() && !text.empty()) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw error(errc::invalid_argument,
                        std::string("bad numeric parameter '") + std::string(tok) + "' for generator " + name);
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (out.size() != want)
        throw error(errc::invalid_argument,
                    std::string("generator ") + name + " expects " + std::to_string(want) + " parameter(s)");
    return out;
}

}  // namespace

GeneratorSpec parse_generator(std::string_view text) {
    const std::size_t colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

    if (name == "constant") {
        auto p = parse_params(rest, 1, "constant");
        return Constant{p[0]};
    }
    if (name == "monomial") {
        auto p = parse_params(rest, 2, "monomial");
        return Monomial{p[0], p[1]};
    }
    if (name == "separable-sine") {
        auto p = parse_params(rest, 2, "separable-sine");
        return SeparableSine{p[0], p[1]};
    }
    if (name == "weierstrass") {
        auto p = parse_params(rest, 3, "weierstrass");
        if (p[2] != std::floor(p[2]))
            throw error(errc::invalid_argument, "weierstrass term count must be an integer");
        return Weierstrass{p[0], p[1], static_cast<int>(p[2])};
    }
    if (name == "uv-m") {
        if (!rest.empty())
            throw error(errc::invalid_argument, "uv-m takes no parameters");
        return UVFunctionM{};
    }
    throw error(errc::invalid_argument, "unknown generator '" + std::string(name) + "'");
}

std::string describe_generator(const GeneratorSpec& spec) {
    char buf[128];
    return std::visit(
        [&](const auto& g) -> std::string {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, Constant>) {
                std::snprintf(buf, sizeof buf, "constant:%.17g", g.value);
            } else if constexpr (std::is_same_v<T, Monomial>) {
                std::snprintf(buf, sizeof buf, "monomial:%.17g,%.17g", g.p, g.q);
            } else if constexpr (std::is_same_v<T, SeparableSine>) {
                std::snprintf(buf, sizeof buf, "separable-sine:%.17g,%.17g", g.omega1, g.omega2);
            } else if constexpr (std::is_same_v<T, Weierstrass>) {
                std::snprintf(buf, sizeof buf, "weierstrass:%.17g,%.17g,%d", g.lambda, g.mu, g.terms);
            } else {
                std::snprintf(buf, sizeof buf, "uv-m");
            }
            return buf;
        },
        spec);
}

}  // namespace fracdim
