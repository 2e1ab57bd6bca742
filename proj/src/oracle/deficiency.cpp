#include "abcone/errors.hpp"
#include "abcone/oracle.hpp"
#include "abcone/specfun.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>

namespace abcone::oracle {

namespace {

constexpr int kMaxDecades = 300;
constexpr int kDivergentRun = 3;
constexpr double kEnvelopeFloor = 1e-16;

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;

struct Piece {
    double value;
    double error;
};

}  // namespace

QuadratureReport deficiency_norm(double j, double k0, DeficiencySign sign, double tol)
{
    using std::numbers::pi;
    if (!std::isfinite(j)) {
        detail::throw_domain("angular momentum j must be finite", j);
    }
    if (!(k0 > 0.0) || !std::isfinite(k0)) {
        detail::throw_domain("reference wavenumber must satisfy k0 > 0", k0);
    }
    if (!(tol > 0.0)) {
        detail::throw_domain("tolerance must be positive", tol);
    }
    const double order = std::fabs(j);
    const double phase = sign == DeficiencySign::Plus ? -pi / 4.0 : pi / 4.0;
    const std::complex<double> c = std::polar(k0, phase);

    const auto density = [&](double r) {
        return std::norm(specfun::bessel_k_any_order(order, c * r)) * r;
    };
    // same integrand in u = ln r
    const auto density_log = [&](double u) {
        const double r = std::exp(u);
        return density(r) * r;
    };

    // outer cutoff: |K| ~ sqrt(pi / (2 k0 R)) exp(-k0 R / sqrt 2)
    double cutoff = 1.0 / k0;
    while (std::sqrt(pi / (2.0 * k0 * cutoff)) * std::exp(-k0 * cutoff / std::numbers::sqrt2) >
           kEnvelopeFloor) {
        cutoff *= 1.25;
    }

    const double r1 = 1.0 / k0;
    const double quad_tol = std::min(1e-13, tol * 1e-3);
    Piece outer{};
    outer.value = Kronrod::integrate(density, r1, cutoff, 15, quad_tol, &outer.error);

    double total = outer.value;
    double quad_error = outer.error;
    double prev_delta = 0.0;
    double prev_q = 0.0;
    int growing = 0;
    double upper = std::log(r1);
    for (int n = 0; n < kMaxDecades; ++n) {
        const double lower = upper - std::numbers::ln10;
        double err = 0.0;
        const double delta = Kronrod::integrate(density_log, lower, upper, 15, quad_tol, &err);
        upper = lower;
        total += delta;
        quad_error += err;
        if (!std::isfinite(total)) {
            return {total, INFINITY, false, cutoff};
        }
        if (n >= 1 && prev_delta > 0.0) {
            const double q = delta / prev_delta;
            if (q >= 1.0 - 1e-9) {
                if (++growing >= kDivergentRun) {
                    return {total, INFINITY, false, cutoff};
                }
            }
            else {
                growing = 0;
                if (n >= 3) {
                    const double tail = delta * q / (1.0 - q);
                    const double tail_error =
                        std::fabs(tail) * std::fabs(q - prev_q) / (q * (1.0 - q));
                    const double estimate = tail_error + quad_error;
                    if (estimate <= tol * std::fabs(total + tail)) {
                        return {total + tail, estimate, true, cutoff};
                    }
                }
            }
            prev_q = q;
        }
        prev_delta = delta;
    }
    return {total, INFINITY, false, cutoff};
}

DeficiencyIndices deficiency_indices(double j, double k0)
{
    const bool plus = deficiency_norm(j, k0, DeficiencySign::Plus).converged;
    const bool minus = deficiency_norm(j, k0, DeficiencySign::Minus).converged;
    return {plus ? 1 : 0, minus ? 1 : 0};
}

}  // namespace abcone::oracle
