#pragma once

// Scattering and bound states for the one-parameter family of self-adjoint
// extensions selected by the boundary condition nu * psi_0 = psi_1 at r = 0.
//
// Units: hbar = c = 1, k in reciprocal length, nu in length^(-2|j|). With
// those units the bound-state energy below is an energy.

#include "abcone/model.hpp"

#include <complex>
#include <variant>

namespace abcone::bg {

/// Channels with |j| below this are logarithmic at the origin; only the
/// Friedrichs extension is offered there.
inline constexpr double kDegenerateJ = 1e-12;

struct Friedrichs {};

struct FiniteNu {
    double nu;
};

class ExtensionParam {
public:
    static ExtensionParam friedrichs() { return ExtensionParam(Friedrichs{}); }
    static ExtensionParam finite(double nu);

    bool is_friedrichs() const { return std::holds_alternative<Friedrichs>(value_); }
    /// Precondition: !is_friedrichs().
    double nu() const { return std::get<FiniteNu>(value_).nu; }

private:
    explicit ExtensionParam(std::variant<Friedrichs, FiniteNu> v) : value_(v) {}
    std::variant<Friedrichs, FiniteNu> value_;
};

enum class Method { BG, KS, Shell };

const char* method_tag(Method m);

struct BoundState {
    double kappa_b;
    double energy;  // -kappa_b^2 / (2 M)
    Method method;
};

/// Builds a bound state from its decay constant; energy follows k^2 = 2 M E.
BoundState bound_state_from_kappa(double kappa_b, double mass, Method method);

struct ScatteringEntry {
    long long m;
    double j;
    double delta_reg;
    double delta_nu;
    std::complex<double> s_element;
};

/// Admixture of the irregular solution J_{-|j|}; zero for Friedrichs.
/// Throws PoleError where the denominator vanishes.
double mu_nu(const ExtensionParam& ext, double j, double k);

double phase_shift_regular(long long m, double j);

/// delta_m + arctan(mu_nu), principal branch.
double phase_shift_extended(long long m, double j, const ExtensionParam& ext, double k);

std::complex<double> s_matrix(long long m, double j, const ExtensionParam& ext, double k);

/// Same S-matrix element, parametrised by the bound-state decay constant
/// kappa_b generated by a negative nu. See README for the form used.
std::complex<double> s_matrix_from_bound(long long m, double j, double kappa_b, double k);

ScatteringEntry scatter(long long m, double j, const ExtensionParam& ext, double k);

/// Requires nu < 0 and 0 < |j| < 1.
BoundState bound_state_bg(const ExtensionParam& ext, double j, double mass);

/// psi_m(r) = a_m [J_{|j|}(kr) - mu_nu J_{-|j|}(kr)], a_m = exp(-i |j| pi / 2).
std::complex<double> radial_wavefunction(long long m, double j, const ExtensionParam& ext,
                                         double k, double r);

struct PartialWaveSum {
    std::complex<double> psi;
    double tail_estimate;  // |term(m_max)| + |term(-m_max)|
};

/// Truncated partial-wave sum over m in [-m_max, m_max]. Critical channels
/// (|j| < 1) carry the extension; the others use the regular solution.
PartialWaveSum partial_wave_sum(const model::PhysicalConfig& cfg, const ExtensionParam& ext,
                                double k, double r, double varphi, long long m_max);

}  // namespace abcone::bg
