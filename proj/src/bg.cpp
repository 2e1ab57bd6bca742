#include "abcone/bg.hpp"

#include "abcone/errors.hpp"
#include "abcone/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace abcone::bg {

using std::numbers::pi;
using cd = std::complex<double>;

ExtensionParam ExtensionParam::finite(double nu)
{
    if (!std::isfinite(nu)) {
        detail::throw_domain("finite extension requires a finite real nu (use Friedrichs for nu = inf)",
                             nu);
    }
    return ExtensionParam(FiniteNu{nu});
}

const char* method_tag(Method m)
{
    switch (m) {
    case Method::BG: return "BG";
    case Method::KS: return "KS";
    case Method::Shell: return "SHELL";
    }
    return "?";
}

BoundState bound_state_from_kappa(double kappa_b, double mass, Method method)
{
    return {kappa_b, -kappa_b * kappa_b / (2.0 * mass), method};
}

namespace {

// 0 < |j| < 1, the subspace where the extension acts
double critical_abs_j(double j)
{
    const double a = std::fabs(j);
    if (!(a < 1.0)) {
        detail::throw_domain("finite extension requires |j| < 1", j);
    }
    if (a < kDegenerateJ) {
        throw DegenerateChannelError(
            "finite extension undefined on the logarithmic channel |j| = 0 (got j = " +
            detail::format_value(j) + "); use the Friedrichs extension");
    }
    return a;
}

void check_k(double k)
{
    if (!(k > 0.0) || !std::isfinite(k)) {
        detail::throw_domain("wave number must satisfy k > 0", k);
    }
}

void check_mass(double mass)
{
    if (!(mass > 0.0)) {
        detail::throw_domain("mass must satisfy M > 0", mass);
    }
}

}  // namespace

double mu_nu(const ExtensionParam& ext, double j, double k)
{
    check_k(k);
    if (ext.is_friedrichs()) return 0.0;
    const double a = critical_abs_j(j);
    const double kp = std::pow(k, 2.0 * a) * specfun::gamma(1.0 - a);
    const double left = std::pow(4.0, a) * specfun::gamma(1.0 + a) * ext.nu();
    const double right = kp * std::cos(a * pi);
    const double den = left + right;
    if (std::fabs(den) <= 8.0 * std::numeric_limits<double>::epsilon() *
                              (std::fabs(left) + std::fabs(right))) {
        throw PoleError("mu_nu has a pole: 4^|j| Gamma(1+|j|) nu + k^(2|j|) Gamma(1-|j|) cos(|j| pi) = 0 at nu = " +
                        detail::format_value(ext.nu()) + ", k = " + detail::format_value(k));
    }
    return kp * std::sin(a * pi) / den;
}

double phase_shift_regular(long long m, double j)
{
    return pi / 2.0 * (std::fabs(static_cast<double>(m)) - std::fabs(j));
}

double phase_shift_extended(long long m, double j, const ExtensionParam& ext, double k)
{
    const double delta = phase_shift_regular(m, j);
    if (ext.is_friedrichs()) {
        check_k(k);
        return delta;
    }
    return delta + std::atan(mu_nu(ext, j, k));
}

cd s_matrix(long long m, double j, const ExtensionParam& ext, double k)
{
    const double delta = phase_shift_regular(m, j);
    const cd base = std::polar(1.0, 2.0 * delta);
    if (ext.is_friedrichs()) {
        check_k(k);
        return base;
    }
    const double mu = mu_nu(ext, j, k);
    return base * (cd(1.0, mu) / cd(1.0, -mu));
}

cd s_matrix_from_bound(long long m, double j, double kappa_b, double k)
{
    check_k(k);
    if (!(kappa_b > 0.0)) {
        detail::throw_domain("bound-state decay constant must satisfy kappa_b > 0", kappa_b);
    }
    const double a = critical_abs_j(j);
    const double q = std::pow(kappa_b / k, 2.0 * a);
    const cd num = std::polar(1.0, a * pi) - q;
    const cd den = std::polar(1.0, -a * pi) - q;
    return std::polar(1.0, 2.0 * phase_shift_regular(m, j)) * (num / den);
}

ScatteringEntry scatter(long long m, double j, const ExtensionParam& ext, double k)
{
    ScatteringEntry e{};
    e.m = m;
    e.j = j;
    e.delta_reg = phase_shift_regular(m, j);
    e.delta_nu = phase_shift_extended(m, j, ext, k);
    e.s_element = s_matrix(m, j, ext, k);
    return e;
}

BoundState bound_state_bg(const ExtensionParam& ext, double j, double mass)
{
    check_mass(mass);
    if (ext.is_friedrichs()) {
        throw DomainError("bound state requires a finite nu < 0 (got the Friedrichs extension)");
    }
    const double nu = ext.nu();
    if (!(nu < 0.0)) {
        detail::throw_domain("bound state requires nu < 0", nu);
    }
    const double a = critical_abs_j(j);
    const double bracket = -nu * specfun::gamma(1.0 + a) / specfun::gamma(1.0 - a);
    const double energy = -2.0 / mass * std::pow(bracket, 1.0 / a);
    return {std::sqrt(2.0 * mass * -energy), energy, Method::BG};
}

cd radial_wavefunction(long long /*m*/, double j, const ExtensionParam& ext, double k, double r)
{
    check_k(k);
    if (!(r > 0.0)) {
        detail::throw_domain("radius must satisfy r > 0", r);
    }
    const double a = std::fabs(j);
    const cd coeff = std::polar(1.0, -a * pi / 2.0);
    const double x = k * r;
    if (ext.is_friedrichs()) {
        return coeff * specfun::bessel_j(a, x);
    }
    const double mu = mu_nu(ext, j, k);
    return coeff * (specfun::bessel_j(a, x) - mu * specfun::bessel_j(-a, x));
}

PartialWaveSum partial_wave_sum(const model::PhysicalConfig& cfg, const ExtensionParam& ext,
                                double k, double r, double varphi, long long m_max)
{
    cfg.validate();
    check_k(k);
    if (m_max < 1) {
        detail::throw_domain("partial-wave cutoff must satisfy m_max >= 1", static_cast<double>(m_max));
    }
    const ExtensionParam regular = ExtensionParam::friedrichs();
    PartialWaveSum out{cd(0.0, 0.0), 0.0};
    for (long long m = -m_max; m <= m_max; ++m) {
        const model::Channel ch = model::make_channel(cfg, m);
        const ExtensionParam& use = ch.in_critical_subspace ? ext : regular;
        const cd term = radial_wavefunction(m, ch.j, use, k, r) *
                        std::polar(1.0, static_cast<double>(m) * varphi);
        out.psi += term;
        if (m == -m_max || m == m_max) out.tail_estimate += std::abs(term);
    }
    return out;
}

}  // namespace abcone::bg
