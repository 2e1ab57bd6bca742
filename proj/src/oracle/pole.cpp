#include "abcone/errors.hpp"
#include "abcone/oracle.hpp"
#include "abcone/specfun.hpp"
#include "bracket.hpp"

#include <cmath>
#include <numbers>

namespace abcone::oracle {

using bracket::narrow_geometric;

constexpr double kBracketFactor = 10.0;

std::complex<double> continued_denominator(double j, double nu, double kappa)
{
    using std::numbers::pi;
    const double a = std::fabs(j);
    const std::complex<double> k(0.0, kappa);
    const std::complex<double> k2a = std::pow(k, 2.0 * a);
    const double g_plus = specfun::gamma(1.0 + a);
    const double g_minus = specfun::gamma(1.0 - a);
    // D - i N with D, N the denominator and numerator of mu_nu
    const std::complex<double> d = std::pow(4.0, a) * g_plus * nu + k2a * g_minus * std::cos(a * pi);
    const std::complex<double> n = k2a * g_minus * std::sin(a * pi);
    return d - std::complex<double>(0.0, 1.0) * n;
}

double find_smatrix_pole(double j, double nu, const RootFindSpec& spec)
{
    const double a = std::fabs(j);
    if (!(a > 0.0 && a < 1.0)) {
        detail::throw_domain("pole search requires 0 < |j| < 1", j);
    }
    if (!(nu < 0.0)) {
        detail::throw_domain("pole search requires nu < 0", nu);
    }
    const auto f = [&](double kappa) { return continued_denominator(j, nu, kappa).real(); };

    double lo = spec.bracket_lo;
    double hi = spec.bracket_hi;
    if (!(lo > 0.0 && lo < hi)) {
        std::tie(lo, hi) = expand_bracket(f, 1.0, kBracketFactor, kBracketFactor, 700);
    }
    std::tie(lo, hi) = narrow_geometric(f, lo, hi);
    RootFindSpec s = spec;
    s.bracket_lo = lo;
    s.bracket_hi = hi;
    const double kappa = find_root(f, s);

    const std::complex<double> at_root = continued_denominator(j, nu, kappa);
    const double scale = std::pow(4.0, a) * specfun::gamma(1.0 + a) * std::fabs(nu);
    if (std::fabs(at_root.imag()) > 1e-9 * scale) {
        throw NumericalError("continued S-matrix denominator is not real at the root");
    }
    return kappa;
}

}  // namespace abcone::oracle
