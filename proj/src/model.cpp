#include "abcone/model.hpp"

#include "abcone/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace abcone::model {

namespace {

// |j| within this distance of 1 counts as sitting on a plane.
constexpr double kBoundaryTol = 1e-12;

void check_alpha(double alpha)
{
    if (!(alpha > 0.0)) {
        detail::throw_domain("cone parameter must satisfy alpha > 0", alpha);
    }
    if (!(alpha <= 1.0)) {
        detail::throw_domain("cone parameter must satisfy alpha <= 1 (anticone not supported)",
                             alpha);
    }
}

void check_spin(int s)
{
    if (s != 1 && s != -1) {
        detail::throw_domain("spin projection must satisfy s in {-1, +1}", s);
    }
}

void check_beta(double beta)
{
    if (!(beta >= 0.0 && beta < 1.0)) {
        detail::throw_domain("flux fraction must satisfy 0 <= beta < 1", beta);
    }
}

Planes raw_planes(Effect effect, double alpha, double beta, int s, long long n_integer)
{
    const double flux = static_cast<double>(n_integer) + beta;
    const double shift = (effect == Effect::AharonovBohm ? flux : s * flux);
    const double spin_term = (1.0 - alpha) * s / 2.0;
    return {-alpha - shift + spin_term, alpha - shift + spin_term};
}

// coefficients (a, b) of a linear function alpha -> a*alpha + b
struct Linear {
    double a;
    double b;
};

// Smallest alpha with a*alpha + b > 0; -inf when it holds for every alpha,
// +inf when it never holds.
double lower_bound(Linear g)
{
    if (g.a > 0.0) return -g.b / g.a;
    if (g.a == 0.0) {
        return g.b > 0.0 ? -std::numeric_limits<double>::infinity()
                         : std::numeric_limits<double>::infinity();
    }
    // a < 0 gives an upper bound only; not produced by the plane formulas
    return g.b > 0.0 ? -std::numeric_limits<double>::infinity()
                     : std::numeric_limits<double>::infinity();
}

// pi_plus(alpha, beta) - m, or m - pi_minus(alpha, beta), as linear functions of alpha
Linear above_minus(int s, double beta, long long m)
{
    const double at0 = raw_planes(Effect::AharonovBohm, 0.0, beta, s, 0).pi_minus;
    const double at1 = raw_planes(Effect::AharonovBohm, 1.0, beta, s, 0).pi_minus;
    return {-(at1 - at0), static_cast<double>(m) - at0};
}

Linear below_plus(int s, double beta, long long m)
{
    const double at0 = raw_planes(Effect::AharonovBohm, 0.0, beta, s, 0).pi_plus;
    const double at1 = raw_planes(Effect::AharonovBohm, 1.0, beta, s, 0).pi_plus;
    return {at1 - at0, at0 - static_cast<double>(m)};
}

}  // namespace

void PhysicalConfig::validate() const
{
    check_alpha(alpha);
    check_spin(s);
    if (!std::isfinite(phi)) {
        detail::throw_domain("flux must be finite", phi);
    }
    if (!(mass > 0.0)) {
        detail::throw_domain("mass must satisfy M > 0", mass);
    }
    if (!(g_factor > 0.0)) {
        detail::throw_domain("g-factor must satisfy g_e > 0", g_factor);
    }
}

double effective_j(const PhysicalConfig& cfg, long long m)
{
    return (static_cast<double>(m) + cfg.phi) / cfg.alpha -
           (1.0 - cfg.alpha) * cfg.s / (2.0 * cfg.alpha);
}

double coupling_lambda(const PhysicalConfig& cfg)
{
    return cfg.g_factor * cfg.phi * cfg.s / (2.0 * cfg.alpha);
}

Channel make_channel(const PhysicalConfig& cfg, long long m)
{
    const double j = effective_j(cfg, m);
    return {m, j, coupling_lambda(cfg), std::fabs(j) < 1.0 - kBoundaryTol};
}

FluxParts flux_decompose(double phi)
{
    if (!std::isfinite(phi)) {
        detail::throw_domain("flux must be finite", phi);
    }
    const double n = std::floor(phi);
    double beta = phi - n;
    if (beta >= 1.0) beta = 0.0;  // rounding of tiny negative phi
    return {static_cast<long long>(n), beta};
}

Planes planes_ab(double alpha, double beta, int s, long long n_integer)
{
    return planes(Effect::AharonovBohm, alpha, beta, s, n_integer);
}

Planes planes_ac(double alpha, double beta, int s, long long n_integer)
{
    return planes(Effect::AharonovCasher, alpha, beta, s, n_integer);
}

Planes planes(Effect effect, double alpha, double beta, int s, long long n_integer)
{
    check_alpha(alpha);
    check_beta(beta);
    check_spin(s);
    return raw_planes(effect, alpha, beta, s, n_integer);
}

namespace {

template <class Keep>
std::vector<Channel> scan_channels(const PhysicalConfig& cfg, Keep keep)
{
    cfg.validate();
    const FluxParts flux = flux_decompose(cfg.phi);
    const Planes p = raw_planes(Effect::AharonovBohm, cfg.alpha, flux.beta, cfg.s, flux.n_integer);
    std::vector<Channel> out;
    const auto lo = static_cast<long long>(std::floor(p.pi_minus)) - 1;
    const auto hi = static_cast<long long>(std::ceil(p.pi_plus)) + 1;
    for (long long m = lo; m <= hi; ++m) {
        const Channel ch = make_channel(cfg, m);
        if (keep(ch)) out.push_back(ch);
    }
    return out;
}

}  // namespace

std::vector<Channel> critical_channels(const PhysicalConfig& cfg)
{
    return scan_channels(cfg, [](const Channel& ch) { return ch.in_critical_subspace; });
}

std::vector<Channel> boundary_channels(const PhysicalConfig& cfg)
{
    return scan_channels(cfg, [](const Channel& ch) {
        return std::fabs(std::fabs(ch.j) - 1.0) <= kBoundaryTol;
    });
}

std::vector<BetaWindow> critical_channels_over_beta(double alpha, int s, long long n_integer)
{
    check_alpha(alpha);
    check_spin(s);
    // pi_-(beta) < m < pi_+(beta)  <=>  beta in (pi_-(0) - m, pi_+(0) - m)
    const Planes p0 = raw_planes(Effect::AharonovBohm, alpha, 0.0, s, n_integer);
    std::vector<BetaWindow> out;
    const auto lo = static_cast<long long>(std::floor(p0.pi_minus - 1.0)) - 1;
    const auto hi = static_cast<long long>(std::ceil(p0.pi_plus)) + 1;
    for (long long m = lo; m <= hi; ++m) {
        const double b_lo = std::max(p0.pi_minus - static_cast<double>(m), 0.0);
        const double b_hi = std::min(p0.pi_plus - static_cast<double>(m), 1.0);
        if (b_lo < b_hi) out.push_back({m, b_lo, b_hi});
    }
    return out;
}

AlphaMin alpha_min_for_two_channels(int s)
{
    check_spin(s);
    // Over beta in [0,1) the stripe sweeps (pi_-(alpha,1), pi_+(alpha,0)), so
    // channel m is reached iff pi_-(alpha,1) < m < pi_+(alpha,0). With N = 0
    // the two channels are m = 0 and m = -1.
    double bound = 0.0;
    for (long long m : {0LL, -1LL}) {
        bound = std::max(bound, lower_bound(above_minus(s, 1.0, m)));
        bound = std::max(bound, lower_bound(below_plus(s, 0.0, m)));
    }
    return {bound, false};
}

std::optional<AlphaMin> alpha_min_at_beta(int s, double beta)
{
    check_spin(s);
    check_beta(beta);
    double bound = 0.0;
    for (long long m : {0LL, -1LL}) {
        bound = std::max(bound, lower_bound(above_minus(s, beta, m)));
        bound = std::max(bound, lower_bound(below_plus(s, beta, m)));
    }
    if (!(bound < 1.0)) return std::nullopt;
    return AlphaMin{bound, false};
}

}  // namespace abcone::model
