#include "abcone/errors.hpp"
#include "abcone/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

// Real-argument I and K: Temme's series for K and the ascending series for I
// when x < 2; otherwise Steed's continued fraction for K, and I from the
// continued fraction for I'_nu/I_nu plus the Wronskian. All outputs are exponentially scaled so that products I*K
// stay finite for large x.

namespace abcone::specfun {

namespace {

constexpr double kEps = 1e-16;
constexpr double kFpMin = 1e-300;
constexpr int kMaxIter = 100000;

// Taylor coefficients of 1/Gamma(z) around z = 0 (z, z^2, ...).
constexpr std::array<double, 26> kRecipGamma = {
    1.0,
    0.5772156649015329,
    -0.6558780715202538,
    -0.0420026350340952,
    0.1665386113822915,
    -0.0421977345555443,
    -0.0096219715278770,
    0.0072189432466630,
    -0.0011651675918591,
    -0.0002152416741149,
    0.0001280502823882,
    -0.0000201348547807,
    -0.0000012504934821,
    0.0000011330272320,
    -0.0000002056338417,
    0.0000000061160950,
    0.0000000050020075,
    -0.0000000011812746,
    0.0000000001043427,
    0.0000000000077823,
    -0.0000000000036968,
    0.0000000000005100,
    -0.0000000000000206,
    -0.0000000000000054,
    0.0000000000000014,
    0.0000000000000001,
};

struct TemmeGammas {
    double gam1;   // (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)
    double gam2;   // (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
    double gampl;  // 1/Gamma(1+mu)
    double gammi;  // 1/Gamma(1-mu)
};

// |mu| <= 1/2; the even/odd split of the 1/Gamma series has no cancellation
// as mu -> 0.
TemmeGammas temme_gammas(double mu)
{
    // 1/Gamma(1+x) = sum_{n>=0} c_{n+1} x^n
    double even = 0.0;
    double odd = 0.0;
    const double mu2 = mu * mu;
    double p = 1.0;
    for (std::size_t n = 0; n + 1 < kRecipGamma.size(); n += 2) {
        even += kRecipGamma[n] * p;
        odd += kRecipGamma[n + 1] * p;
        p *= mu2;
    }
    TemmeGammas g{};
    g.gam1 = -odd;
    g.gam2 = even;
    g.gampl = g.gam2 - mu * g.gam1;
    g.gammi = g.gam2 + mu * g.gam1;
    return g;
}

// e^{-x} I_nu(x) from the ascending series, x < 2
double i_series_scaled(double nu, double x)
{
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 100; ++k) {
        term *= q / (k * (nu + k));
        sum += term;
        if (term < sum * kEps) break;
    }
    return std::exp(nu * std::log(0.5 * x) - x) / gamma(nu + 1.0) * sum;
}

}  // namespace

ScaledIK bessel_ik_scaled(double nu, double x)
{
    if (!(nu >= 0.0)) {
        detail::throw_domain("bessel_ik_scaled requires nu >= 0", nu);
    }
    if (!(x > 0.0)) {
        detail::throw_domain("modified Bessel functions require x > 0", x);
    }
    const int nl = static_cast<int>(nu + 0.5);
    const double mu = nu - nl;
    const double mu2 = mu * mu;
    const double xi = 1.0 / x;
    const double xi2 = 2.0 * xi;

    double rkmu = 0.0;  // K_mu e^x
    double rk1 = 0.0;   // K_{mu+1} e^x
    if (x < 2.0) {
        const double x2 = 0.5 * x;
        const double pimu = std::numbers::pi * mu;
        const double fct = std::fabs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
        double dd = -std::log(x2);
        double e = mu * dd;
        const double fact2 = std::fabs(e) < kEps ? 1.0 : std::sinh(e) / e;
        const TemmeGammas g = temme_gammas(mu);
        double ff = fct * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * dd);
        double sum = ff;
        e = std::exp(e);
        double p = 0.5 * e / g.gampl;
        double q = 0.5 / (e * g.gammi);
        double cc = 1.0;
        dd = x2 * x2;
        double sum1 = p;
        int i = 1;
        for (; i < kMaxIter; ++i) {
            ff = (i * ff + p + q) / (i * static_cast<double>(i) - mu2);
            cc *= dd / i;
            p /= i - mu;
            q /= i + mu;
            const double del = cc * ff;
            sum += del;
            sum1 += cc * (p - i * ff);
            if (std::fabs(del) < std::fabs(sum) * kEps) break;
        }
        if (i == kMaxIter) {
            throw ConvergenceError("Temme series for K did not converge");
        }
        const double scale = std::exp(x);
        rkmu = sum * scale;
        rk1 = sum1 * xi2 * scale;
    }
    else {
        double bb = 2.0 * (1.0 + x);
        double dd = 1.0 / bb;
        double hh = dd;
        double delh = dd;
        double q1 = 0.0;
        double q2 = 1.0;
        const double a1 = 0.25 - mu2;
        double q = a1;
        double cc = a1;
        double a = -a1;
        double s = 1.0 + q * delh;
        int i = 2;
        for (; i < kMaxIter; ++i) {
            a -= 2 * (i - 1);
            cc = -a * cc / i;
            const double qnew = (q1 - bb * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += cc * qnew;
            bb += 2.0;
            dd = 1.0 / (bb + a * dd);
            delh = (bb * dd - 1.0) * delh;
            hh += delh;
            const double dels = q * delh;
            s += dels;
            if (std::fabs(dels / s) < kEps) break;
        }
        if (i == kMaxIter) {
            throw ConvergenceError("Steed continued fraction for K did not converge");
        }
        hh = a1 * hh;
        rkmu = std::sqrt(std::numbers::pi / (2.0 * x)) / s;
        rk1 = rkmu * (mu + x + 0.5 - hh) * xi;
    }

    ScaledIK out{};
    if (x < 2.0) {
        out.i = i_series_scaled(nu, x);
        out.ip = i_series_scaled(nu + 1.0, x) + nu * xi * out.i;
    }
    else {
        // CF1: I'_nu / I_nu
        double h = nu * xi;
        if (h < kFpMin) h = kFpMin;
        double b = xi2 * nu;
        double d = 0.0;
        double c = h;
        int it = 0;
        for (; it < kMaxIter; ++it) {
            b += xi2;
            d = 1.0 / (b + d);
            c = b + 1.0 / c;
            const double del = c * d;
            h *= del;
            if (std::fabs(del - 1.0) < kEps) break;
        }
        if (it == kMaxIter) {
            throw ConvergenceError("bessel I continued fraction did not converge");
        }

        // downward recurrence to the order mu, unnormalised
        double ril = kFpMin;
        double ripl = h * ril;
        const double ril1 = ril;
        const double rip1 = ripl;
        double fact = nu * xi;
        for (int l = nl; l >= 1; --l) {
            const double ritemp = fact * ril + ripl;
            fact -= xi;
            ripl = fact * ritemp + ril;
            ril = ritemp;
        }
        const double f = ripl / ril;
        const double rkmup = mu * xi * rkmu - rk1;
        const double rimu = xi / (f * rkmu - rkmup);  // Wronskian, already scaled by e^{-x}
        out.i = rimu * (ril1 / ril);
        out.ip = rimu * (rip1 / ril);
    }
    for (int i = 1; i <= nl; ++i) {
        const double rktemp = (mu + i) * xi2 * rk1 + rkmu;
        rkmu = rk1;
        rk1 = rktemp;
    }
    out.k = rkmu;
    out.kp = nu * xi * rkmu - rk1;
    return out;
}

namespace {

void check_ik_domain(double nu, double x)
{
    if (!(nu > 0.0 && nu < 1.0)) {
        detail::throw_domain("modified Bessel order must satisfy 0 < nu < 1", nu);
    }
    if (!(x > 0.0)) {
        detail::throw_domain("modified Bessel functions require x > 0", x);
    }
}

}  // namespace

double bessel_i(double nu, double x)
{
    check_ik_domain(nu, x);
    return bessel_ik_scaled(nu, x).i * std::exp(x);
}

double bessel_k(double nu, double x)
{
    check_ik_domain(nu, x);
    return bessel_ik_scaled(nu, x).k * std::exp(-x);
}

double bessel_i_prime(double nu, double x)
{
    check_ik_domain(nu, x);
    return bessel_ik_scaled(nu, x).ip * std::exp(x);
}

double bessel_k_prime(double nu, double x)
{
    check_ik_domain(nu, x);
    return bessel_ik_scaled(nu, x).kp * std::exp(-x);
}

}  // namespace abcone::specfun
