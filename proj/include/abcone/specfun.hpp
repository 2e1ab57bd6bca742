#pragma once

// Special-function kernel: gamma for positive arguments, Bessel J of real
// order, modified Bessel I and K of order in (0,1). Complex K is limited to
// arguments on the rays arg z = +-pi/4.

#include <complex>

namespace abcone::specfun {

struct EvalPolicy {
    double series_cutoff = 12.0;      // power series for x <= series_cutoff
    double asymptotic_cutoff = 25.0;  // Hankel expansion for x >= asymptotic_cutoff
    int max_terms = 500;
    double abs_tol = 1e-17;

    /// Throws DomainError unless series_cutoff <= asymptotic_cutoff and abs_tol > 0.
    void validate() const;
};

double gamma(double x);

/// J_nu(x) for nu > -1, x >= 0.
double bessel_j(double nu, double x, const EvalPolicy& policy = {});

/// Branch-forced evaluations, for the overlap checks. Both accept
/// -1 < nu < 2 only.
double bessel_j_series(double nu, double x, const EvalPolicy& policy = {});
double bessel_j_asymptotic(double nu, double x, const EvalPolicy& policy = {});

/// I_nu(x), 0 < nu < 1, x > 0.
double bessel_i(double nu, double x);

/// K_nu(x), 0 < nu < 1, x > 0.
double bessel_k(double nu, double x);

/// K_nu(z) for z real positive or arg z = +-pi/4.
std::complex<double> bessel_k(double nu, std::complex<double> z);

/// Derivatives from the order recurrences.
double bessel_i_prime(double nu, double x);
double bessel_k_prime(double nu, double x);

/// I_nu(x) e^{-x} and K_nu(x) e^{x} together with the scaled derivatives.
/// Valid for any nu >= 0; used where I and K appear as a product.
struct ScaledIK {
    double i;
    double k;
    double ip;
    double kp;
};
ScaledIK bessel_ik_scaled(double nu, double x);

/// K_nu(z) for any real order, Re z > 0, arg z in {0, +-pi/4}. Used by the
/// deficiency quadrature, which also probes orders |j| >= 1.
std::complex<double> bessel_k_any_order(double nu, std::complex<double> z);

}  // namespace abcone::specfun
