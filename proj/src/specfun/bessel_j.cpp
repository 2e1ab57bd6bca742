#include "abcone/errors.hpp"
#include "abcone/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace abcone::specfun {

void EvalPolicy::validate() const
{
    if (!(series_cutoff > 0.0)) {
        detail::throw_domain("EvalPolicy requires series_cutoff > 0", series_cutoff);
    }
    if (!(series_cutoff <= asymptotic_cutoff)) {
        detail::throw_domain("EvalPolicy requires series_cutoff <= asymptotic_cutoff",
                             asymptotic_cutoff);
    }
    if (!(abs_tol > 0.0)) {
        detail::throw_domain("EvalPolicy requires abs_tol > 0", abs_tol);
    }
    if (max_terms < 1) {
        detail::throw_domain("EvalPolicy requires max_terms >= 1", max_terms);
    }
}

namespace {

using ld = long double;

void check_small_order(double nu, double x)
{
    if (!(nu > -1.0 && nu < 2.0)) {
        detail::throw_domain("branch-forced J evaluation requires -1 < nu < 2", nu);
    }
    if (!(x >= 0.0)) {
        detail::throw_domain("bessel_j requires x >= 0", x);
    }
}

// Direct power series, summed in extended precision. Cancellation grows like
// e^x, so it is only used up to the series cutoff (and by the overlap checks).
double series(double nu, double x, const EvalPolicy& policy)
{
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        return nu > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    const ld half = static_cast<ld>(x) / 2;
    const ld q = half * half;
    ld term = std::pow(half, static_cast<ld>(nu)) / static_cast<ld>(gamma(1.0 + nu));
    ld sum = term;
    const int kmin = static_cast<int>(x / 2.0) + 2;
    for (int k = 1; k <= policy.max_terms + kmin; ++k) {
        term *= -q / (static_cast<ld>(k) * (static_cast<ld>(k) + nu));
        sum += term;
        if (k > kmin && std::fabs(term) <= std::numeric_limits<ld>::epsilon() * std::fabs(sum)) {
            return static_cast<double>(sum);
        }
    }
    throw ConvergenceError("bessel_j series did not converge within max_terms");
}

// Hankel expansion; stops at the smallest term.
double asymptotic(double nu, double x, const EvalPolicy& policy)
{
    const ld mu = 4.0L * static_cast<ld>(nu) * nu;
    const ld xl = x;
    ld p = 1.0L;
    ld q = 0.0L;
    ld a = 1.0L;  // a_k(nu) / x^k with alternating sign folded into P, Q
    ld last = std::numeric_limits<ld>::infinity();
    for (int k = 1; k <= policy.max_terms; ++k) {
        const ld odd = 2.0L * k - 1.0L;
        a *= (mu - odd * odd) / (static_cast<ld>(k) * 8.0L * xl);
        const ld mag = std::fabs(a);
        if (mag > last) break;
        last = mag;
        // a_k enters P for even k with sign (-1)^{k/2}, Q for odd k with (-1)^{(k-1)/2}
        const int r = k % 4;
        if (r == 1) q += a;
        else if (r == 2) p -= a;
        else if (r == 3) q -= a;
        else p += a;
        if (mag < policy.abs_tol * std::fabs(p)) break;
    }
    const ld phase = (static_cast<ld>(nu) / 2.0L + 0.25L) * std::numbers::pi_v<ld>;
    const ld c = std::cos(xl) * std::cos(phase) + std::sin(xl) * std::sin(phase);
    const ld s = std::sin(xl) * std::cos(phase) - std::cos(xl) * std::sin(phase);
    return static_cast<double>(std::sqrt(2.0L / (std::numbers::pi_v<ld> * xl)) * (p * c - q * s));
}

double small_order(double nu, double x, const EvalPolicy& policy)
{
    if (x <= policy.series_cutoff) return series(nu, x, policy);
    return asymptotic(nu, x, policy);
}

// J_nu / J_{nu-1} by continued fraction (modified Lentz).
double ratio_cf(double nu, double x)
{
    constexpr double tiny = 1e-300;
    constexpr double eps = 1e-16;
    double f = 2.0 * nu / x;
    if (f == 0.0) f = tiny;
    double c = f;
    double d = 0.0;
    for (int i = 1; i < 100000; ++i) {
        const double b = 2.0 * (nu + i) / x;
        d = b - d;
        if (d == 0.0) d = tiny;
        c = b - 1.0 / c;
        if (c == 0.0) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0) < eps) return 1.0 / f;
    }
    throw ConvergenceError("bessel_j continued fraction did not converge");
}

}  // namespace

double bessel_j_series(double nu, double x, const EvalPolicy& policy)
{
    policy.validate();
    check_small_order(nu, x);
    return series(nu, x, policy);
}

double bessel_j_asymptotic(double nu, double x, const EvalPolicy& policy)
{
    policy.validate();
    check_small_order(nu, x);
    if (!(x > 0.0)) {
        detail::throw_domain("asymptotic J requires x > 0", x);
    }
    return asymptotic(nu, x, policy);
}

double bessel_j(double nu, double x, const EvalPolicy& policy)
{
    if (!(nu > -1.0)) {
        detail::throw_domain("bessel_j requires nu > -1", nu);
    }
    if (!(x >= 0.0)) {
        detail::throw_domain("bessel_j requires x >= 0", x);
    }
    if (nu < 2.0) return small_order(nu, x, policy);
    if (x == 0.0) return 0.0;

    const double n = std::floor(nu);
    const double f = nu - n;
    const int steps = static_cast<int>(n);

    if (x > nu) {
        // forward recurrence is stable while the order stays below x
        double jm = small_order(f, x, policy);
        double j = small_order(f + 1.0, x, policy);
        for (int i = 1; i < steps; ++i) {
            const double mu = f + i;
            const double jp = 2.0 * mu / x * j - jm;
            jm = j;
            j = jp;
        }
        return j;
    }

    // backward recurrence from the continued-fraction ratio, normalised
    // against a directly evaluated low order
    double top = ratio_cf(nu, x);  // J_nu in units where J_{nu-1} = 1
    double u = 1.0;                // J_{nu-1}
    double up = top;               // J_nu
    for (int i = steps - 1; i >= 1; --i) {
        const double mu = f + i;   // current order of u
        const double um = 2.0 * mu / x * u - up;
        up = u;
        u = um;
        if (std::fabs(u) > 1e250) {
            u *= 1e-250;
            up *= 1e-250;
            top *= 1e-250;
        }
    }
    // u = J_f, up = J_{f+1}, unnormalised
    const double jf = small_order(f, x, policy);
    const double jf1 = small_order(f + 1.0, x, policy);
    const double scale = std::fabs(jf) >= std::fabs(jf1) ? jf / u : jf1 / up;
    return top * scale;
}

}  // namespace abcone::specfun
