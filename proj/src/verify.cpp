#include "abcone/verify.hpp"

#include "abcone/bg.hpp"
#include "abcone/errors.hpp"
#include "abcone/ks.hpp"
#include "abcone/model.hpp"
#include "abcone/oracle.hpp"
#include "abcone/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numbers>
#include <random>

namespace abcone::verify {

namespace {

using std::numbers::pi;
using cd = std::complex<double>;

constexpr double kShellR0 = 1e-3;

double rel(double got, double want)
{
    return std::fabs(got - want) / std::fabs(want);
}

// Uniform on [0, 1) from the top 53 bits; identical on every platform.
double unit(std::mt19937_64& gen)
{
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

class Suite {
public:
    void add(const char* module, const char* name, double metric, double tol)
    {
        checks_.push_back({module, name, metric <= tol, metric, tol});
    }
    void add_flag(const char* module, const char* name, bool ok)
    {
        checks_.push_back({module, name, ok, ok ? 0.0 : 1.0, 0.0});
    }
    std::vector<CheckResult> take() { return std::move(checks_); }

private:
    std::vector<CheckResult> checks_;
};

double d4(const std::function<double(double)>& f, double x, double h)
{
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

void specfun_checks(Suite& s, const VerifyOptions& opt)
{
    const auto g = opt.gamma ? opt.gamma : [](double x) { return specfun::gamma(x); };
    double worst = 0.0;
    for (int i = 1; i <= 99; ++i) {
        const double nu = i / 100.0;
        const double want = pi * nu / std::sin(pi * nu);
        worst = std::max(worst, rel(g(1.0 + nu) * g(1.0 - nu), want));
    }
    s.add("specfun", "gamma_reflection", worst, 1e-11);

    worst = std::max({rel(specfun::gamma(0.5), std::sqrt(pi)), rel(specfun::gamma(1.0), 1.0),
                      rel(specfun::gamma(4.5), 11.631728396567448)});
    s.add("specfun", "gamma_known_values", worst, 1e-12);

    worst = 0.0;
    for (int i = 1; i <= 9; ++i) {
        const double nu = i / 10.0;
        for (double z : {0.1, 0.2, 0.5, 1.0, 2.0, 3.0, 5.0, 7.5, 10.0}) {
            const auto fi = [nu](double x) { return specfun::bessel_i(nu, x); };
            const auto fk = [nu](double x) { return specfun::bessel_k(nu, x); };
            const double h = 1e-3 * z;
            const double w = z * (fi(z) * d4(fk, z, h) - d4(fi, z, h) * fk(z));
            worst = std::max(worst, std::fabs(w + 1.0));
        }
    }
    s.add("specfun", "wronskian_fd", worst, 1e-9);

    worst = 0.0;
    for (int i = 1; i <= 9; ++i) {
        const double nu = i / 10.0;
        for (double z : {0.1, 1.0, 3.0, 10.0}) {
            const double w = z * (specfun::bessel_i(nu, z) * specfun::bessel_k_prime(nu, z) -
                                  specfun::bessel_i_prime(nu, z) * specfun::bessel_k(nu, z));
            worst = std::max(worst, std::fabs(w + 1.0));
        }
    }
    s.add("specfun", "wronskian_recurrence", worst, 1e-12);

    worst = 0.0;
    const specfun::EvalPolicy policy;
    for (double nu : {-0.9, -0.5, -0.1, 0.1, 0.3, 0.5, 0.7, 0.9}) {
        for (double x = policy.series_cutoff; x <= policy.asymptotic_cutoff; x += 0.25) {
            const double a = specfun::bessel_j_series(nu, x, policy);
            const double b = specfun::bessel_j_asymptotic(nu, x, policy);
            worst = std::max(worst, std::fabs(a - b) / std::sqrt(2.0 / (pi * x)));
        }
    }
    s.add("specfun", "j_series_asymptotic_overlap", worst, 1e-8);

    double wj = 0.0;
    double wi = 0.0;
    double wk = 0.0;
    double wc = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double x = 0.1 * std::pow(500.0, i / 200.0);
        const double env = std::sqrt(2.0 / (pi * x));
        wj = std::max(wj, std::fabs(specfun::bessel_j(0.5, x) - env * std::sin(x)) / env);
        wj = std::max(wj, std::fabs(specfun::bessel_j(-0.5, x) - env * std::cos(x)) / env);
        wi = std::max(wi, rel(specfun::bessel_i(0.5, x), env * std::sinh(x)));
        wk = std::max(wk, rel(specfun::bessel_k(0.5, x), std::sqrt(pi / (2.0 * x)) * std::exp(-x)));
        if (x <= 40.0) {
            for (double phase : {-pi / 4.0, pi / 4.0}) {
                const cd z = std::polar(x, phase);
                const cd want = std::sqrt(pi / (2.0 * z)) * std::exp(-z);
                wc = std::max(wc, std::abs(specfun::bessel_k(0.5, z) - want) / std::abs(want));
            }
        }
    }
    s.add("specfun", "half_integer_j", wj, 1e-10);
    s.add("specfun", "half_integer_i", wi, 1e-10);
    s.add("specfun", "half_integer_k", wk, 1e-10);
    s.add("specfun", "half_integer_k_complex", wc, 1e-10);
}

void model_checks(Suite& s)
{
    double worst = 0.0;
    double ac = 0.0;
    for (int s_spin : {-1, 1}) {
        for (long long n : {-2LL, 0LL, 3LL}) {
            for (int ia = 1; ia <= 20; ++ia) {
                const double alpha = ia / 20.0;
                for (int ib = 0; ib < 20; ++ib) {
                    const double beta = ib / 20.0;
                    const auto p = model::planes_ab(alpha, beta, s_spin, n);
                    worst = std::max(worst, std::fabs(p.pi_plus - p.pi_minus - 2.0 * alpha));
                    if (s_spin == 1) {
                        const auto q = model::planes_ac(alpha, beta, s_spin, n);
                        ac = std::max({ac, std::fabs(q.pi_minus - p.pi_minus),
                                       std::fabs(q.pi_plus - p.pi_plus)});
                    }
                }
            }
        }
    }
    s.add("model", "plane_width_two_alpha", worst, 1e-14);
    s.add("model", "ac_equals_ab_spin_up", ac, 0.0);

    const auto ms = [](const std::vector<model::Channel>& c) {
        std::vector<long long> out;
        for (const auto& ch : c) out.push_back(ch.m);
        return out;
    };
    bool ok = true;
    for (long long n : {-2LL, 0LL, 3LL}) {
        const double phi = static_cast<double>(n) + 0.5;
        ok &= ms(model::critical_channels({0.25, phi, -1})) == std::vector<long long>{-n - 1};
        ok &= ms(model::critical_channels({0.25, phi, 1})) == std::vector<long long>{-n};
        for (int s_spin : {-1, 1}) {
            std::vector<long long> swept;
            for (const auto& w : model::critical_channels_over_beta(0.5, s_spin, n)) {
                swept.push_back(w.m);
            }
            std::sort(swept.begin(), swept.end());
            ok &= swept == std::vector<long long>{-n - 1, -n};
            for (int ib = 1; ib < 20; ++ib) {
                const model::PhysicalConfig flat{1.0, static_cast<double>(n) + ib / 20.0, s_spin};
                ok &= ms(model::critical_channels(flat)) == std::vector<long long>{-n - 1, -n};
            }
        }
    }
    s.add_flag("model", "region_text_claims", ok);

    worst = 0.0;
    for (int s_spin : {-1, 1}) {
        worst = std::max(worst, std::fabs(model::alpha_min_for_two_channels(s_spin).alpha - 1.0 / 3.0));
    }
    s.add("model", "alpha_min_one_third", worst, 1e-12);
}

void bg_checks(Suite& s)
{
    double worst = 0.0;
    for (int ip = 1; ip <= 9; ++ip) {
        const double phi = ip / 10.0;
        const model::PhysicalConfig cfg{1.0, phi, 1};
        for (long long m = -10; m <= 10; ++m) {
            const double j = model::effective_j(cfg, m);
            const double d = bg::phase_shift_extended(m, j, bg::ExtensionParam::friedrichs(), 1.0);
            const double want = pi * (std::fabs(static_cast<double>(m)) - std::fabs(m + phi)) / 2.0;
            worst = std::max(worst, std::fabs(d - want));
        }
    }
    s.add("bg", "flat_ab_phase_shift", worst, 1e-14);

    std::mt19937_64 gen(0x5eed);
    worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double aj = std::max(unit(gen), 1e-9);
        const bool friedrichs = unit(gen) < 0.1;
        const double nu = -1e3 + 2e3 * unit(gen);
        const double k = 100.0 * (1.0 - unit(gen));
        const auto ext = friedrichs ? bg::ExtensionParam::friedrichs() : bg::ExtensionParam::finite(nu);
        try {
            worst = std::max(worst, std::fabs(std::abs(bg::s_matrix(0, aj, ext, k)) - 1.0));
        }
        catch (const PoleError&) {
        }
    }
    s.add("bg", "unitarity_random", worst, 1e-12);

    worst = 0.0;
    for (double j : {0.2, 0.5, 0.8, 1.7, 3.3}) {
        for (double k : {0.1, 1.0, 10.0}) {
            const long long m = 1;
            const cd got = bg::s_matrix(m, j, bg::ExtensionParam::friedrichs(), k);
            worst = std::max(worst, std::abs(got - std::polar(1.0, 2.0 * bg::phase_shift_regular(m, j))));
        }
    }
    s.add("bg", "friedrichs_consistency", worst, 1e-15);

    worst = 0.0;
    for (double j : {0.3, 0.5, 0.7}) {
        for (double nu : {-0.5, -2.0}) {
            const double kb = bg::bound_state_bg(bg::ExtensionParam::finite(nu), j, 1.0).kappa_b;
            for (double k : {0.3, 1.0, 3.0}) {
                const cd a = bg::s_matrix(0, j, bg::ExtensionParam::finite(nu), k);
                const cd b = bg::s_matrix_from_bound(0, j, kb, k);
                worst = std::max(worst, std::abs(a - b) / std::abs(a));
            }
        }
    }
    s.add("bg", "s_matrix_from_bound_identity", worst, 1e-10);

    worst = 0.0;
    for (double j : {0.2, 0.5, 0.9}) {
        for (double nu : {-1e12, 1e12}) {
            const cd got = bg::s_matrix(0, j, bg::ExtensionParam::finite(nu), 1.0);
            worst = std::max(worst, std::abs(got - std::polar(1.0, 2.0 * bg::phase_shift_regular(0, j))));
        }
    }
    s.add("bg", "large_nu_limit", worst, 1e-6);

    const auto e = [](double nu, double j) {
        return bg::bound_state_bg(bg::ExtensionParam::finite(nu), j, 1.0).energy;
    };
    worst = rel(e(-1.0, 0.5), -0.5);
    for (double j : {0.2, 0.6}) {
        worst = std::max(worst, rel(e(-1.4, j), std::pow(2.0, 1.0 / j) * e(-0.7, j)));
    }
    s.add("bg", "bound_state_closed_form", worst, 1e-13);

    worst = 0.0;
    for (double phase : {0.0, 1.0, 2.5}) {
        const auto sum = bg::partial_wave_sum({1.0, 0.0, 1}, bg::ExtensionParam::friedrichs(), 1.0,
                                              5.0, phase, 60);
        worst = std::max(worst, std::fabs(std::abs(sum.psi) - 1.0));
    }
    s.add("bg", "plane_wave_recovery", worst, 1e-3);
}

void ks_checks(Suite& s)
{
    double worst = 0.0;
    for (double lambda : {-0.6, -1.5, -5.0, -50.0}) {
        for (int i = 1; i <= 9; ++i) {
            const double j = i / 10.0;
            if (!(lambda < -j)) continue;
            for (double r0 : {1e-3, 1e-2, 1.0}) {
                const ks::ShellConfig shell{r0, lambda};
                const double a = bg::bound_state_bg(ks::nu_from_physical(shell, j), j, 1.0).energy;
                const double b = ks::bound_state_ks(shell, j, 1.0).energy;
                worst = std::max(worst, rel(a, b));
            }
        }
    }
    s.add("ks", "bg_ks_bridge", worst, 1e-13);

    const ks::ShellConfig shell{1.0, -1.5};
    worst = std::max(rel(ks::bound_state_ks(shell, 0.5, 1.0).energy, -0.125),
                     rel(ks::nu_from_physical(shell, 0.5).nu(), -0.5));
    s.add("ks", "worked_example", worst, 1e-14);

    worst = 0.0;
    for (double j : {0.2, 0.5, 0.8}) {
        for (double lambda : {-1.0, -4.0}) {
            const ks::ShellConfig sh{0.01, lambda};
            const double kb = ks::bound_state_ks(sh, j, 1.0).kappa_b;
            const auto f = [&](double kappa) {
                return ks::exterior_log_derivative(j, kappa, sh.r0).value - lambda;
            };
            // keep the bracket below the pole at X = 1
            const double kappa_pole = 2.0 / sh.r0 *
                std::pow(specfun::gamma(1.0 + j) / specfun::gamma(1.0 - j), 0.5 / j);
            oracle::RootFindSpec spec{kb / 2.0, kappa_pole * (1.0 - 1e-12), 1e-14, 200};
            worst = std::max(worst, rel(oracle::find_root(f, spec), kb));
        }
    }
    s.add("ks", "log_derivative_inversion", worst, 1e-10);
}

void oracle_checks(Suite& s)
{
    double worst = 0.0;
    for (int i = 1; i <= 9; ++i) {
        const double j = i / 10.0;
        for (double nu : {-10.0, -1.0, -0.1}) {
            const double kb = bg::bound_state_bg(bg::ExtensionParam::finite(nu), j, 1.0).kappa_b;
            worst = std::max(worst, rel(oracle::find_smatrix_pole(j, nu), kb));
        }
    }
    s.add("oracle", "pole_energy_duality", worst, 1e-8);

    worst = 0.0;
    for (int i = 1; i <= 9; ++i) {
        const double j = i / 10.0;
        for (double lambda : {-2.0, -5.0, -50.0}) {
            if (!(lambda < -2.0 * j)) continue;
            const auto b = oracle::delta_shell_bound_state({1e-2, lambda}, j, 1.0);
            worst = std::max(worst, std::fabs(oracle::shell_residual(j, lambda, b.kappa_b * 1e-2)));
        }
    }
    s.add("oracle", "shell_residual", worst, 1e-12);

    worst = 0.0;
    for (double lambda : {-1.5, -3.0, -10.0, -50.0}) {
        const double z = oracle::delta_shell_bound_state({1e-2, lambda}, 0.5, 1.0).kappa_b * 1e-2;
        worst = std::max(worst, rel(z, half_integer_shell_root(lambda)));
    }
    s.add("oracle", "shell_half_integer_scalar", worst, 1e-10);

    const ShellStudy study = shell_ks_study();
    s.add("oracle", "shell_ks_convergence", study.in_window == 0 ? INFINITY : study.worst_deviation,
          1e-2);
    s.add_flag("oracle", "shell_ks_monotone", study.in_window > 0 && study.monotone);

    bool ok = true;
    for (double k0 : {0.5, 1.0, 2.0}) {
        for (int i = 1; i <= 9; ++i) {
            const auto d = oracle::deficiency_indices(i / 10.0, k0);
            ok &= d.n_plus == 1 && d.n_minus == 1;
        }
        for (double j : {1.1, 1.5}) {
            const auto d = oracle::deficiency_indices(j, k0);
            ok &= d.n_plus == 0 && d.n_minus == 0;
        }
    }
    s.add_flag("oracle", "deficiency_indices", ok);

    worst = 0.0;
    for (double k0 : {0.5, 1.0, 2.0}) {
        for (auto sign : {oracle::DeficiencySign::Plus, oracle::DeficiencySign::Minus}) {
            const auto r = oracle::deficiency_norm(0.5, k0, sign);
            const double want = pi / (2.0 * std::numbers::sqrt2 * k0 * k0);
            worst = std::max(worst, r.converged ? rel(r.value, want) : INFINITY);
        }
    }
    s.add("oracle", "deficiency_half_integer_norm", worst, 1e-8);

    worst = 0.0;
    for (double j : {0.1, 0.3, 0.5, 0.7}) {
        const double a = 1.0;
        const double b = 2.0;
        const double k = 1.0;
        std::vector<oracle::RadialSample> samples;
        for (int i = 0; i < 12; ++i) {
            const double r = 0.05 * std::ldexp(1.0, -i);
            samples.push_back({r, a * specfun::bessel_j(j, k * r) + b * specfun::bessel_j(-j, k * r)});
        }
        const auto bv = oracle::boundary_values_extract(samples, j);
        const double want = (a / b) * std::pow(k / 2.0, 2.0 * j) * specfun::gamma(1.0 - j) /
                            specfun::gamma(1.0 + j);
        worst = std::max(worst, std::abs(bv.psi1 / bv.psi0 - want) / want);
    }
    s.add("oracle", "boundary_values_round_trip", worst, 1e-6);
}

}  // namespace

bool VerifyReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::table() const
{
    std::string out;
    char line[256];
    std::snprintf(line, sizeof line, "%-8s %-32s %-6s %-12s %s\n", "module", "check", "status",
                  "metric", "tolerance");
    out += line;
    std::size_t passed = 0;
    for (const auto& c : checks) {
        std::snprintf(line, sizeof line, "%-8s %-32s %-6s %-12.3e %.1e\n", c.module.c_str(),
                      c.name.c_str(), c.passed ? "PASS" : "FAIL", c.metric, c.tolerance);
        out += line;
        passed += c.passed ? 1 : 0;
    }
    std::snprintf(line, sizeof line, "%zu/%zu checks passed\n", passed, checks.size());
    out += line;
    return out;
}

VerifyReport run_verify(const VerifyOptions& options)
{
    Suite s;
    specfun_checks(s, options);
    model_checks(s);
    bg_checks(s);
    ks_checks(s);
    oracle_checks(s);
    return {s.take()};
}

double half_integer_shell_root(double lambda)
{
    if (!(lambda < -1.0)) {
        detail::throw_domain("the |j| = 1/2 shell equation has a root only for lambda < -1", lambda);
    }
    const double target = -1.0 / lambda;
    const auto f = [target](double z) { return -std::expm1(-2.0 * z) / (2.0 * z) - target; };
    double lo = 1e-300;
    double hi = 1.0;
    while (f(hi) > 0.0) hi *= 2.0;
    for (int i = 0; i < 2000 && hi - lo > 1e-16 * hi; ++i) {
        const double mid = lo < 1e-3 * hi ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
        (f(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

ShellStudy shell_ks_study()
{
    const std::vector<double> abs_js = {0.001, 0.005, 0.01, 0.1, 0.2, 0.3, 0.4,   0.5,
                                        0.6,   0.7,   0.8,  0.9, 0.99, 0.999, 0.9999};
    const std::vector<double> ratios = {20.0, 40.0, 80.0, 160.0, 320.0, 640.0};
    ShellStudy study{{}, 0, 0.0, true, false};
    for (double aj : abs_js) {
        double previous = INFINITY;
        for (double ratio : ratios) {
            const double lambda = -ratio * aj;
            const ks::ShellConfig shell{kShellR0, lambda};
            const double kappa_ks = ks::bound_state_ks(shell, aj, 1.0).kappa_b;
            const double kappa_shell = oracle::delta_shell_bound_state(shell, aj, 1.0).kappa_b;
            const double dev = rel(kappa_shell, kappa_ks);
            const double z_ks = kappa_ks * kShellR0;
            study.rows.push_back({aj, ratio, lambda, kappa_shell, kappa_ks, dev, z_ks});
            if (z_ks <= 0.05) {
                ++study.in_window;
                study.worst_deviation = std::max(study.worst_deviation, dev);
                if (!(dev < previous)) study.monotone = false;
                previous = dev;
            }
        }
    }
    study.passed = study.in_window > 0 && study.worst_deviation <= 1e-2 && study.monotone;
    return study;
}

}  // namespace abcone::verify
