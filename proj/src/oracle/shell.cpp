#include "abcone/errors.hpp"
#include "abcone/oracle.hpp"
#include "abcone/specfun.hpp"
#include "bracket.hpp"

#include <cmath>

namespace abcone::oracle {

double shell_residual(double j, double lambda, double z)
{
    const specfun::ScaledIK ik = specfun::bessel_ik_scaled(std::fabs(j), z);
    return lambda * ik.i * ik.k + 1.0;
}

bg::BoundState delta_shell_bound_state(const ks::ShellConfig& shell, double j, double mass,
                                       const RootFindSpec& spec)
{
    shell.validate();
    const double a = std::fabs(j);
    if (!(a > 0.0 && a < 1.0)) {
        detail::throw_domain("shell oracle requires 0 < |j| < 1", j);
    }
    if (!(mass > 0.0)) {
        detail::throw_domain("mass must satisfy M > 0", mass);
    }
    if (!(shell.lambda < 0.0)) {
        detail::throw_domain("shell bound state requires an attractive coupling lambda < 0",
                             shell.lambda);
    }
    const double lambda = shell.lambda;
    if (!(lambda < -2.0 * a)) {
        throw BracketError("no shell bound state: requires lambda < -2|j| (lambda = " +
                           detail::format_value(lambda) + ", 2|j| = " + detail::format_value(2.0 * a) + ")");
    }
    const auto f = [&](double z) { return shell_residual(a, lambda, z); };

    double lo = spec.bracket_lo;
    double hi = spec.bracket_hi;
    if (!(lo > 0.0 && lo < hi)) {
        try {
            std::tie(lo, hi) = expand_bracket(f, 0.1, 1.0, 10.0, 280);
        }
        catch (const BracketError&) {
            throw BracketError("shell root lies below kappa r0 = 1e-281 (lambda = " +
                               detail::format_value(lambda) + ", 2|j| = " +
                               detail::format_value(2.0 * a) + ")");
        }
    }
    std::tie(lo, hi) = bracket::narrow_geometric(f, lo, hi);
    RootFindSpec s = spec;
    s.bracket_lo = lo;
    s.bracket_hi = hi;
    const double z = find_root(f, s);
    return bg::bound_state_from_kappa(z / shell.r0, mass, bg::Method::Shell);
}

}  // namespace abcone::oracle
