#include "abcone/errors.hpp"
#include "abcone/specfun.hpp"

#include <cmath>
#include <numbers>

namespace abcone::specfun {

namespace {

constexpr double kStirlingShift = 16.0;

// Stirling's series for ln Gamma(y) - [(y - 1/2) ln y - y + ln(2 pi)/2], y >= 16.
double stirling_correction(double y)
{
    const double r = 1.0 / y;
    const double r2 = r * r;
    return r * (1.0 / 12.0 +
                r2 * (-1.0 / 360.0 +
                      r2 * (1.0 / 1260.0 +
                            r2 * (-1.0 / 1680.0 +
                                  r2 * (1.0 / 1188.0 +
                                        r2 * (-691.0 / 360360.0 + r2 * (1.0 / 156.0)))))));
}

}  // namespace

double gamma(double x)
{
    if (!(x > 0.0)) {
        detail::throw_domain("gamma requires x > 0", x);
    }
    if (x > 171.0) {
        throw NumericalError("gamma overflows for x > 171 (got " + detail::format_value(x) + ")");
    }
    if (x == std::floor(x) && x <= 21.0) {
        double f = 1.0;
        for (int k = 2; k < static_cast<int>(x); ++k) {
            f *= k;
        }
        return f;
    }
    // Gamma(x) = Gamma(x + n) / (x (x+1) ... (x+n-1))
    double y = x;
    double denom = 1.0;
    while (y < kStirlingShift) {
        denom *= y;
        y += 1.0;
    }
    const double root = std::pow(y / std::numbers::e, 0.5 * y);
    const double g = std::sqrt(2.0 * std::numbers::pi / y) * root * root *
                     std::exp(stirling_correction(y));
    return g / denom;
}

}  // namespace abcone::specfun
