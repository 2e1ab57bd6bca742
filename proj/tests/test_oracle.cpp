#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abcone/bg.hpp"
#include "abcone/errors.hpp"
#include "abcone/ks.hpp"
#include "abcone/oracle.hpp"
#include "abcone/specfun.hpp"
#include "abcone/verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <vector>

using namespace abcone;
using std::numbers::pi;
using cd = std::complex<double>;

namespace {

double rel(double got, double want)
{
    return std::fabs(got - want) / std::fabs(want);
}

std::vector<oracle::RadialSample> samples(double j, double a, double b, double k, double r_max, int n)
{
    std::vector<oracle::RadialSample> out;
    for (int i = 0; i < n; ++i) {
        const double r = r_max * std::ldexp(1.0, -i);
        out.push_back({r, a * specfun::bessel_j(j, k * r) + b * specfun::bessel_j(-j, k * r)});
    }
    return out;
}

}  // namespace

TEST_CASE("Brent root finder")
{
    const double r = oracle::find_root([](double x) { return x * x - 2.0; }, {0.0, 2.0});
    CHECK(rel(r, std::sqrt(2.0)) <= 1e-12);
    CHECK_THROWS_AS(oracle::find_root([](double x) { return x * x + 1.0; }, {0.0, 2.0}), BracketError);
    CHECK_THROWS_AS(oracle::find_root([](double x) { return x; }, {1.0, 0.0}), BracketError);
    CHECK_THROWS_AS(oracle::find_root([](double x) { return std::cbrt(x - 0.3); }, {0.0, 1.0, 1e-300, 3}),
                    ConvergenceError);
    const auto br = oracle::expand_bracket([](double x) { return std::log(x) - 10.0; }, 1.0, 2.0);
    CHECK(std::log(br.first) - 10.0 < 0.0);
    CHECK(std::log(br.second) - 10.0 > 0.0);
}

TEST_CASE("pole of the S-matrix")
{
    CHECK(rel(oracle::find_smatrix_pole(0.5, -1.0), 1.0) <= 1e-12);
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 1; i <= 9; ++i) {
        const double j = i / 10.0;
        for (double nu : {-10.0, -1.0, -0.1}) {
            const double kb = bg::bound_state_bg(bg::ExtensionParam::finite(nu), j, 1.0).kappa_b;
            CHECK(rel(oracle::find_smatrix_pole(j, nu), kb) <= 1e-8);
            CHECK(std::abs(oracle::continued_denominator(j, nu, kb).imag()) <= 1e-12 * std::fabs(nu) * 10);
        }
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(dt < 1.0);
    CHECK(oracle::find_smatrix_pole(0.6, -1e-8) < 1e-5);
    CHECK_THROWS_AS(oracle::find_smatrix_pole(0.5, 1.0), DomainError);
}

TEST_CASE("pole search is bitwise deterministic")
{
    const double a = oracle::find_smatrix_pole(0.37, -2.3);
    const double b = oracle::find_smatrix_pole(0.37, -2.3);
    CHECK(a == b);
}

TEST_CASE("delta shell bound state satisfies its equation")
{
    for (int i = 1; i <= 9; ++i) {
        const double j = i / 10.0;
        for (double lambda : {-2.0, -7.0, -80.0}) {
            if (!(lambda < -2.0 * j)) continue;
            const auto b = oracle::delta_shell_bound_state({0.01, lambda}, j, 1.0);
            CHECK(b.method == bg::Method::Shell);
            CHECK(std::fabs(oracle::shell_residual(j, lambda, b.kappa_b * 0.01)) <= 1e-12);
        }
    }
}

TEST_CASE("shell at |j| = 1/2 matches the scalar equation")
{
    const double z = oracle::delta_shell_bound_state({0.01, -1.5}, 0.5, 1.0).kappa_b * 0.01;
    CHECK(z > 0.4);
    CHECK(z < 0.5);
    CHECK(std::fabs(1.0 - std::exp(-2.0 * z) - 4.0 / 3.0 * z) <= 1e-13);
    for (double lambda : {-1.01, -1.5, -4.0, -40.0}) {
        const double zs = oracle::delta_shell_bound_state({1.0, lambda}, 0.5, 1.0).kappa_b;
        CHECK(rel(zs, verify::half_integer_shell_root(lambda)) <= 1e-10);
    }
}

TEST_CASE("shell has no bound state for weak coupling")
{
    CHECK_THROWS_WITH_AS(oracle::delta_shell_bound_state({0.01, -0.5}, 0.3, 1.0),
                         doctest::Contains("lambda < -2|j|"), BracketError);
    CHECK_THROWS_AS(oracle::delta_shell_bound_state({0.01, 0.5}, 0.3, 1.0), DomainError);
}

TEST_CASE("shell and KS agree to leading order only")
{
    // near threshold the two agree when the corrected matching value is used
    const ks::ShellConfig shell{1.0, -1.02};
    const double z_shell = oracle::delta_shell_bound_state(shell, 0.5, 1.0).kappa_b;
    const double z_corr = ks::bound_state_ks(shell, 0.5, 1.0, ks::Matching::Corrected).kappa_b;
    CHECK(rel(z_shell, z_corr) <= 2e-2);
    // deep binding: the shell root sits near |lambda|/2, far from the KS value
    const ks::ShellConfig deep{1e-3, -50.0};
    const double zs = oracle::delta_shell_bound_state(deep, 0.5, 1.0).kappa_b * 1e-3;
    const double zk = ks::bound_state_ks(deep, 0.5, 1.0).kappa_b * 1e-3;
    CHECK(zs == doctest::Approx(25.0).epsilon(1e-6));
    CHECK(rel(zs, zk) > 1.0);
}

TEST_CASE("deficiency norm: closed form and convergence")
{
    for (double j : {0.0, 0.1, 0.5, 0.9, 0.999}) {
        for (double k0 : {0.5, 2.0}) {
            for (auto sign : {oracle::DeficiencySign::Plus, oracle::DeficiencySign::Minus}) {
                const auto r = oracle::deficiency_norm(j, k0, sign, 1e-10);
                const double want = pi / (4.0 * std::cos(j * pi / 2.0)) / (k0 * k0);
                CAPTURE(j);
                CAPTURE(k0);
                REQUIRE(r.converged);
                CHECK(r.abs_error_estimate <= 1e-10 * r.value);
                CHECK(rel(r.value, want) <= 1e-8);
                CHECK(r.cutoff_radius > 30.0 / k0);
            }
        }
    }
}

TEST_CASE("deficiency norm diverges for |j| >= 1")
{
    for (double j : {1.0, 1.1, 1.5, -1.2}) {
        for (double k0 : {0.5, 1.0, 2.0}) {
            CHECK_FALSE(oracle::deficiency_norm(j, k0, oracle::DeficiencySign::Plus).converged);
            CHECK_FALSE(oracle::deficiency_norm(j, k0, oracle::DeficiencySign::Minus).converged);
        }
    }
}

TEST_CASE("deficiency indices")
{
    for (double k0 : {0.5, 1.0, 2.0}) {
        for (int i = 1; i <= 9; ++i) {
            const auto d = oracle::deficiency_indices(i / 10.0, k0);
            CHECK(d.n_plus == 1);
            CHECK(d.n_minus == 1);
        }
        const auto e = oracle::deficiency_indices(0.999, k0);
        CHECK(e.n_plus == 1);
        for (double j : {1.1, 1.5}) {
            const auto d = oracle::deficiency_indices(j, k0);
            CHECK(d.n_plus == 0);
            CHECK(d.n_minus == 0);
        }
    }
    CHECK_THROWS_AS(oracle::deficiency_norm(0.5, 0.0, oracle::DeficiencySign::Plus), DomainError);
}

TEST_CASE("boundary values from sampled wavefunctions")
{
    const auto bv = oracle::boundary_values_extract(samples(0.5, 1.0, 2.0, 1.0, 0.05, 12), 0.5);
    CHECK(rel(bv.psi0.real(), 2.0 * std::sqrt(2.0) / std::sqrt(pi)) <= 1e-9);
    CHECK(std::fabs(bv.psi0.imag()) == 0.0);
    CHECK(rel(bv.psi1.real(), std::sqrt(0.5) / specfun::gamma(1.5)) <= 1e-7);

    const auto reg = oracle::boundary_values_extract(samples(0.3, 1.0, 0.0, 2.0, 0.05, 12), 0.3);
    CHECK(std::abs(reg.psi0) <= 1e-12);

    for (double j : {0.1, 0.3, 0.5, 0.7}) {
        for (double k : {0.5, 2.0}) {
            const double a = 0.8;
            const double b = -1.3;
            const auto v = oracle::boundary_values_extract(samples(j, a, b, k, 0.05 / k, 12), j);
            const double want = (a / b) * std::pow(k / 2.0, 2.0 * j) * specfun::gamma(1 - j) / specfun::gamma(1 + j);
            CAPTURE(j);
            CHECK(std::abs(v.psi1 / v.psi0 - want) / std::fabs(want) <= 1e-6);
        }
    }
}

TEST_CASE("boundary value extraction preconditions")
{
    auto s = samples(0.3, 1.0, 1.0, 1.0, 0.05, 12);
    CHECK_THROWS_AS(oracle::boundary_values_extract(std::span(s).first(5), 0.3), DomainError);
    s[3].r *= 1.1;
    CHECK_THROWS_AS(oracle::boundary_values_extract(s, 0.3), DomainError);
    CHECK_THROWS_AS(oracle::boundary_values_extract(samples(0.98, 1.0, 1.0, 1.0, 0.05, 30), 0.98),
                    IllConditionedError);
}

TEST_CASE("boundary values quantify the admixture ratio against mu_nu")
{
    // psi = J_|j| - mu J_-|j| implies nu_bc = psi1/psi0; compare with nu
    const double j = 0.4;
    const double k = 1.0;
    const double nu = -2.0;
    const double mu = bg::mu_nu(bg::ExtensionParam::finite(nu), j, k);
    const auto v = oracle::boundary_values_extract(samples(j, 1.0, -mu, k, 0.05, 12), j);
    const double implied = (v.psi1 / v.psi0).real();
    const double c = std::pow(k / 2.0, 2.0 * j) * specfun::gamma(1 - j) / specfun::gamma(1 + j);
    const double predicted = -(nu + c * std::cos(j * pi)) / std::sin(j * pi);
    CHECK(rel(implied, predicted) <= 1e-6);
    CHECK(rel(implied, nu) > 1e-2);
}
