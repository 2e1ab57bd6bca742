#pragma once

// Independent numerical checks of the closed forms: S-matrix poles by root
// search, exact delta-shell bound states, square integrability of the
// deficiency solutions by quadrature, and boundary values read off sampled
// wavefunctions.

#include "abcone/bg.hpp"
#include "abcone/ks.hpp"

#include <complex>
#include <functional>
#include <span>
#include <utility>

namespace abcone::oracle {

struct RootFindSpec {
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double rel_tol = 1e-12;
    int max_iter = 200;
};

/// Brent's method: bisection safeguarded inverse-quadratic/secant steps.
/// Requires a sign change on [bracket_lo, bracket_hi]; throws BracketError
/// otherwise and ConvergenceError past max_iter.
double find_root(const std::function<double(double)>& f, const RootFindSpec& spec);

/// Widens [lo, hi] geometrically (lo /= factor, hi *= factor, lo > 0) until
/// f changes sign. Throws BracketError after max_steps.
std::pair<double, double> expand_bracket(const std::function<double(double)>& f, double lo,
                                         double hi, double factor = 2.0, int max_steps = 200);

/// Zero on the positive imaginary k axis of the S-matrix denominator 1 - i mu_nu.
/// The bracket in spec is used when non-empty; otherwise one is grown around
/// a seed.
double find_smatrix_pole(double j, double nu, const RootFindSpec& spec = {});

/// The analytically continued denominator at k = i kappa, before reduction
/// to a real function.
std::complex<double> continued_denominator(double j, double nu, double kappa);

/// Exact shell problem: interior I_{|j|}(kappa r), exterior K_{|j|}(kappa r),
/// matched by I K = -1/lambda at kappa r0.
bg::BoundState delta_shell_bound_state(const ks::ShellConfig& shell, double j, double mass,
                                       const RootFindSpec& spec = {});

/// lambda * I_{|j|}(z) K_{|j|}(z) + 1, the residual of the shell condition.
double shell_residual(double j, double lambda, double z);

struct QuadratureReport {
    double value;
    double abs_error_estimate;
    bool converged;
    double cutoff_radius;
};

enum class DeficiencySign { Plus, Minus };

/// int_0^R |K_{|j|}(sqrt(-+i) k0 r)|^2 r dr by adaptive quadrature, with the
/// inner limit pushed toward 0 one decade at a time. Divergence is reported
/// through converged = false.
QuadratureReport deficiency_norm(double j, double k0, DeficiencySign sign, double tol = 1e-10);

struct DeficiencyIndices {
    int n_plus;
    int n_minus;
};

DeficiencyIndices deficiency_indices(double j, double k0);

struct RadialSample {
    double r;
    std::complex<double> psi;
};

struct BoundaryValues {
    std::complex<double> psi0;  // lim r^{|j|} psi
    std::complex<double> psi1;  // lim r^{-|j|} (psi - psi0 r^{-|j|})
};

/// Richardson extrapolation over samples at r_max, r_max/2, r_max/4, ...
/// (descending, ratio 2, spanning at least two decades).
BoundaryValues boundary_values_extract(std::span<const RadialSample> samples, double j);

}  // namespace abcone::oracle
