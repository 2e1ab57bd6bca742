#pragma once

// Kinematics of the spin-1/2 Aharonov-Bohm problem on a cone: effective
// angular momentum, spin-flux coupling, flux decomposition and the planes
// that bound the channels where the radial operator is not self-adjoint.

#include <optional>
#include <utility>
#include <vector>

namespace abcone::model {

/// Anomalous magnetic moment of the electron, a_e = (g_e - 2)/2.
inline constexpr double kElectronAnomaly = 0.00115965218091;
inline constexpr double kElectronGFactor = 2.0 * (1.0 + kElectronAnomaly);

struct PhysicalConfig {
    double alpha = 1.0;  // cone parameter, 0 < alpha <= 1
    double phi = 0.0;    // flux in units of the flux quantum
    int s = 1;           // spin projection, +-1
    double mass = 1.0;   // natural units, hbar = c = 1
    double g_factor = kElectronGFactor;

    /// Throws DomainError naming the first violated inequality.
    void validate() const;
};

struct FluxParts {
    long long n_integer;
    double beta;  // 0 <= beta < 1
};

struct Channel {
    long long m;
    double j;
    double lambda;
    bool in_critical_subspace;
};

struct Planes {
    double pi_minus;
    double pi_plus;
};

enum class Effect { AharonovBohm, AharonovCasher };

double effective_j(const PhysicalConfig& cfg, long long m);
double coupling_lambda(const PhysicalConfig& cfg);
Channel make_channel(const PhysicalConfig& cfg, long long m);

FluxParts flux_decompose(double phi);

Planes planes_ab(double alpha, double beta, int s, long long n_integer);
Planes planes_ac(double alpha, double beta, int s, long long n_integer);
Planes planes(Effect effect, double alpha, double beta, int s, long long n_integer);

/// All channels with |j| < 1 (strict), ascending in m. At most two.
std::vector<Channel> critical_channels(const PhysicalConfig& cfg);

/// Channels with |j| == 1 exactly; they sit on a plane and are excluded
/// from critical_channels.
std::vector<Channel> boundary_channels(const PhysicalConfig& cfg);

/// A channel that becomes critical somewhere in the flux window beta in [0,1)
/// for fixed integer part N, with the open beta interval where it is.
struct BetaWindow {
    long long m;
    double beta_lo;
    double beta_hi;
};

/// Channels reached as beta sweeps [0,1) at fixed (alpha, s, N): the region
/// drawn in the beta cross sections of the planes.
std::vector<BetaWindow> critical_channels_over_beta(double alpha, int s, long long n_integer);

struct AlphaMin {
    double alpha;
    bool attained;  // false: the bound is an infimum (a channel sits on a plane there)
};

/// Smallest cone parameter for which both m = -N and m = -N-1 enter the
/// non-self-adjoint region as beta sweeps [0,1). Independent of N.
AlphaMin alpha_min_for_two_channels(int s);

/// Pointwise variant: smallest alpha for which both channels satisfy |j| < 1
/// at the given beta. Empty when no alpha in (0,1] works.
std::optional<AlphaMin> alpha_min_at_beta(int s, double beta);

}  // namespace abcone::model
