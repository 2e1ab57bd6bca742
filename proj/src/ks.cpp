#include "abcone/ks.hpp"

#include "abcone/errors.hpp"
#include "abcone/specfun.hpp"

#include <cmath>

namespace abcone::ks {

namespace {

double shell_abs_j(double j)
{
    const double a = std::fabs(j);
    if (!(a > 0.0 && a < 1.0)) {
        detail::throw_domain("shell matching requires 0 < |j| < 1", j);
    }
    return a;
}

}  // namespace

void ShellConfig::validate() const
{
    if (!(r0 > 0.0) || !std::isfinite(r0)) {
        detail::throw_domain("core radius must satisfy r0 > 0", r0);
    }
    if (!std::isfinite(lambda)) {
        detail::throw_domain("coupling lambda must be finite", lambda);
    }
}

double small_argument_ratio(double j, double kappa, double r0)
{
    const double a = shell_abs_j(j);
    return specfun::gamma(1.0 - a) / specfun::gamma(1.0 + a) * std::pow(kappa * r0 / 2.0, 2.0 * a);
}

LogDerivative exterior_log_derivative(double j, double kappa, double r0)
{
    if (!(kappa > 0.0)) {
        detail::throw_domain("decay constant must satisfy kappa > 0", kappa);
    }
    if (!(r0 > 0.0)) {
        detail::throw_domain("core radius must satisfy r0 > 0", r0);
    }
    const double a = shell_abs_j(j);
    const double x = small_argument_ratio(j, kappa, r0);
    if (x == 1.0) {
        throw PoleError("exterior logarithmic derivative has a pole at X = 1 (kappa = " +
                        detail::format_value(kappa) + ")");
    }
    return {-a * (1.0 + x) / (1.0 - x), kappa * r0 < 0.5};
}

double interior_log_derivative(const ShellConfig& shell, double j, Matching variant)
{
    shell.validate();
    if (variant == Matching::Published) return shell.lambda;
    return shell.lambda + std::fabs(j);
}

bg::BoundState bound_state_ks(const ShellConfig& shell, double j, double mass, Matching variant)
{
    shell.validate();
    if (!(mass > 0.0)) {
        detail::throw_domain("mass must satisfy M > 0", mass);
    }
    const double a = shell_abs_j(j);
    const double v = interior_log_derivative(shell, j, variant);
    const double ratio = (v + a) / (v - a);
    if (!(ratio > 0.0) || !std::isfinite(ratio)) {
        detail::throw_domain("no bound state for this coupling: requires (v+|j|)/(v-|j|) > 0 "
                             "with v the interior matching value",
                             ratio);
    }
    const double bracket = ratio * specfun::gamma(1.0 + a) / specfun::gamma(1.0 - a);
    const double energy = -2.0 / (mass * shell.r0 * shell.r0) * std::pow(bracket, 1.0 / a);
    return {std::sqrt(2.0 * mass * -energy), energy, bg::Method::KS};
}

bg::ExtensionParam nu_from_physical(const ShellConfig& shell, double j)
{
    shell.validate();
    const double a = shell_abs_j(j);
    if (shell.lambda == a) {
        detail::throw_domain("nu is undefined at lambda = |j|", shell.lambda);
    }
    const double nu = -(shell.lambda + a) / (shell.lambda - a) / std::pow(shell.r0, 2.0 * a);
    return bg::ExtensionParam::finite(nu);
}

}  // namespace abcone::ks
