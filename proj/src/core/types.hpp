#pragma once

#include <stdexcept>
#include <string>

namespace fracdim {

/// Failure categories, mirrored one-to-one by the C API status codes.
enum class errc {
    invalid_argument,  ///< malformed parameter (bad grid size, bad spec string)
    domain_error,      ///< numeric precondition violated (gamma <= 0, a < 0, ...)
    format_error,      ///< surface CSV contract violated
    guard_error,       ///< size/alignment guard exceeded (DP guard, level alignment)
    io_error,          ///< filesystem failure
    numeric_error,     ///< non-finite value produced where finiteness is required
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// Closed rectangle [a,b] x [c,d].
struct Domain {
    double a = 0.0;
    double b = 1.0;
    double c = 0.0;
    double d = 1.0;

    double width() const noexcept { return b - a; }
    double height() const noexcept { return d - c; }

    /// a < b and c < d; throws invalid_argument otherwise.
    void validate() const;
    /// Integration additionally needs a >= 0 and c >= 0.
    void validate_for_integration() const;
};

/// Uniform grid with endpoints included: x_i = a + i*(b-a)/(nx-1).
struct GridSpec {
    int nx = 2;
    int ny = 2;

    void validate() const;
};

/// Fractional order pair (gamma1, gamma2), both > 0.
struct FracOrder {
    double gamma1 = 1.0;
    double gamma2 = 1.0;

    void validate() const;

    friend FracOrder operator+(FracOrder lhs, FracOrder rhs) noexcept {
        return {lhs.gamma1 + rhs.gamma1, lhs.gamma2 + rhs.gamma2};
    }
};

}  // namespace fracdim
