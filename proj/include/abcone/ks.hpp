#pragma once

// Delta-shell regularisation of the spin-flux contact term and the
// zero-energy logarithmic-derivative matching that fixes the bound state.

#include "abcone/bg.hpp"

namespace abcone::ks {

struct ShellConfig {
    double r0;      // core radius; physically below the Compton wavelength (not enforced)
    double lambda;  // contact coupling

    void validate() const;
};

/// Value matched against the exterior logarithmic derivative at r0.
enum class Matching {
    Published,  // lambda: the contact term alone
    Corrected,  // lambda + |j|: adds the interior regular solution r^{|j|}
};

/// X = Gamma(1-|j|)/Gamma(1+|j|) * (kappa r0 / 2)^{2|j|}.
double small_argument_ratio(double j, double kappa, double r0);

struct LogDerivative {
    double value;  // r0 psi'/psi at r0 from the two-term small-z form of K_|j|
    bool small_argument_ok;  // false when kappa r0 >= 0.5
};

/// -|j| (1 + X) / (1 - X). Throws PoleError at X = 1.
LogDerivative exterior_log_derivative(double j, double kappa, double r0);

/// Interior matching value: lambda (Published) or lambda + |j| (Corrected).
double interior_log_derivative(const ShellConfig& shell, double j,
                               Matching variant = Matching::Published);

/// Bound state from matching the interior value to the exterior logarithmic
/// derivative. Requires (v+|j|)/(v-|j|) > 0 for the matching value v.
bg::BoundState bound_state_ks(const ShellConfig& shell, double j, double mass,
                              Matching variant = Matching::Published);

/// nu = -(lambda + |j|) / ((lambda - |j|) r0^{2|j|}), in length^(-2|j|).
bg::ExtensionParam nu_from_physical(const ShellConfig& shell, double j);

}  // namespace abcone::ks
