#include "abcone/errors.hpp"
#include "abcone/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace abcone::specfun {

namespace {

using cd = std::complex<double>;

constexpr double kSeriesRadius = 4.0;
constexpr double kAsymptoticRadius = 20.0;

bool on_supported_ray(cd z)
{
    if (!(std::abs(z) > 0.0)) return false;
    const double arg = std::arg(z);
    const double tol = 1e-12;
    return std::fabs(arg) < tol || std::fabs(std::fabs(arg) - std::numbers::pi / 4.0) < tol;
}

// I_{+-nu}(z) power series; orders with 1 - nu > 0 keep every Gamma argument positive.
cd i_series(double order, cd z)
{
    const cd half = z / 2.0;
    const cd q = half * half;
    cd term = std::pow(half, order) / gamma(1.0 + order);
    cd sum = term;
    for (int k = 1; k < 1000; ++k) {
        term *= q / (static_cast<double>(k) * (k + order));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) return sum;
    }
    throw ConvergenceError("complex I series did not converge");
}

cd k_series(double nu, cd z)
{
    return std::numbers::pi / (2.0 * std::sin(nu * std::numbers::pi)) *
           (i_series(-nu, z) - i_series(nu, z));
}

// K_nu(z) ~ sqrt(pi/(2z)) e^{-z} sum_k a_k(nu) / z^k, truncated at the smallest term.
cd k_asymptotic(double nu, cd z)
{
    const double mu = 4.0 * nu * nu;
    cd term = 1.0;
    cd sum = 1.0;
    double last = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / (8.0 * k) / z;
        const double mag = std::abs(term);
        if (mag > last) break;
        last = mag;
        sum += term;
        if (mag < 1e-17 * std::abs(sum)) break;
    }
    return std::sqrt(std::numbers::pi / (2.0 * z)) * std::exp(-z) * sum;
}

// K_nu(z) = int_0^inf exp(-z cosh t) cosh(nu t) dt, Re z > 0. The trapezoid
// rule converges geometrically in 1/h for this analytic, decaying integrand.
cd k_integral(double nu, cd z)
{
    constexpr double h = 0.05;
    const double re = z.real();
    cd sum = 0.5 * std::exp(-z);
    double peak = std::abs(sum);
    for (int n = 1; n < 1000000; ++n) {
        const double t = n * h;
        const double mag_log = -re * std::cosh(t) + nu * t;
        if (mag_log < -745.0 && t > 1.0) break;
        const cd term = std::exp(-z * std::cosh(t)) * std::cosh(nu * t);
        sum += term;
        const double mag = std::abs(term);
        peak = std::max(peak, mag);
        if (mag < 1e-19 * peak && re * std::sinh(t) > nu) break;
    }
    return h * sum;
}

}  // namespace

cd bessel_k(double nu, cd z)
{
    if (!(nu > 0.0 && nu < 1.0)) {
        detail::throw_domain("modified Bessel order must satisfy 0 < nu < 1", nu);
    }
    if (!on_supported_ray(z)) {
        detail::throw_domain("complex K requires arg z in {0, +-pi/4} and z != 0", std::arg(z));
    }
    if (std::fabs(z.imag()) == 0.0) {
        return bessel_k(nu, z.real());
    }
    const double r = std::abs(z);
    if (r <= kSeriesRadius) return k_series(nu, z);
    if (r >= kAsymptoticRadius) return k_asymptotic(nu, z);
    return k_integral(nu, z);
}

cd bessel_k_any_order(double nu, cd z)
{
    const double order = std::fabs(nu);
    if (!on_supported_ray(z)) {
        detail::throw_domain("complex K requires arg z in {0, +-pi/4} and z != 0", std::arg(z));
    }
    if (order > 0.0 && order < 1.0) return bessel_k(order, z);
    if (std::fabs(z.imag()) == 0.0) {
        const double x = z.real();
        return bessel_ik_scaled(order, x).k * std::exp(-x);
    }
    if (std::abs(z) >= kAsymptoticRadius && order * order < std::abs(z)) {
        return k_asymptotic(order, z);
    }
    return k_integral(order, z);
}

}  // namespace abcone::specfun
