#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abcone/bg.hpp"
#include "abcone/errors.hpp"
#include "abcone/ks.hpp"
#include "abcone/oracle.hpp"
#include "abcone/specfun.hpp"

#include <cmath>

using namespace abcone;
using ks::ShellConfig;

namespace {

double rel(double got, double want)
{
    return std::fabs(got - want) / std::fabs(want);
}

}  // namespace

TEST_CASE("worked example")
{
    const ShellConfig shell{1.0, -1.5};
    const auto b = ks::bound_state_ks(shell, 0.5, 1.0);
    CHECK(rel(b.energy, -0.125) <= 1e-15);
    CHECK(b.method == bg::Method::KS);
    CHECK(rel(ks::nu_from_physical(shell, 0.5).nu(), -0.5) <= 1e-15);
    CHECK(rel(bg::bound_state_bg(bg::ExtensionParam::finite(-0.5), 0.5, 1.0).energy, -0.125) <= 1e-15);
}

TEST_CASE("exterior logarithmic derivative")
{
    CHECK(ks::exterior_log_derivative(0.3, 1e-12, 1e-3).value == doctest::Approx(-0.3).epsilon(1e-8));
    // X = 1/2 at |j| = 1/2: Gamma(1/2)/Gamma(3/2) (kappa r0 / 2) = 1/2
    const double kappa_r0 = 0.5;
    CHECK(ks::small_argument_ratio(0.5, kappa_r0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
    const auto d = ks::exterior_log_derivative(0.5, kappa_r0, 1.0);
    CHECK(d.value == doctest::Approx(-1.5).epsilon(1e-14));
    CHECK_FALSE(d.small_argument_ok);
    CHECK(ks::exterior_log_derivative(0.5, 0.1, 1.0).small_argument_ok);
    CHECK_THROWS_AS(ks::exterior_log_derivative(0.5, 1.0, 1.0), PoleError);
    CHECK_THROWS_AS(ks::exterior_log_derivative(0.5, -1.0, 1.0), DomainError);
}

TEST_CASE("interior matching value")
{
    const ShellConfig shell{0.01, -2.0};
    CHECK(ks::interior_log_derivative(shell, 0.3) == -2.0);
    CHECK(ks::interior_log_derivative(shell, -0.3, ks::Matching::Corrected) == doctest::Approx(-1.7));
    CHECK(ks::interior_log_derivative({0.01, 0.0}, 0.3) == 0.0);
}

TEST_CASE("bridge identity between BG and KS")
{
    for (double lambda : {-0.6, -1.5, -5.0, -50.0}) {
        for (int i = 1; i <= 9; ++i) {
            const double j = i / 10.0;
            if (!(lambda < -j)) continue;
            for (double r0 : {1e-3, 1e-2, 1.0}) {
                const ShellConfig shell{r0, lambda};
                const auto ext = ks::nu_from_physical(shell, j);
                CHECK(ext.nu() < 0.0);
                CHECK(rel(bg::bound_state_bg(ext, j, 1.3).energy, ks::bound_state_ks(shell, j, 1.3).energy) <= 1e-13);
            }
        }
    }
}

TEST_CASE("existence and sign consistency")
{
    for (double lambda : {-3.0, -0.2, 0.1, 2.0}) {
        const double j = 0.4;
        const ShellConfig shell{0.1, lambda};
        const bool exists = (lambda + j) / (lambda - j) > 0.0;
        CHECK((ks::nu_from_physical(shell, j).nu() < 0.0) == exists);
        if (exists) {
            CHECK_NOTHROW(ks::bound_state_ks(shell, j, 1.0));
        }
        else {
            CHECK_THROWS_WITH_AS(ks::bound_state_ks(shell, j, 1.0), doctest::Contains("no bound state"),
                                 DomainError);
        }
    }
    CHECK_THROWS_AS(ks::nu_from_physical({0.1, 0.4}, 0.4), DomainError);
    CHECK_THROWS_AS(ks::bound_state_ks({0.0, -1.0}, 0.4, 1.0), DomainError);
}

TEST_CASE("scale laws")
{
    const double j = 0.35;
    const auto e = [j](double r0, double lambda) { return ks::bound_state_ks({r0, lambda}, j, 1.0).energy; };
    CHECK(rel(e(1e-3 / 4.0, -2.0), 16.0 * e(1e-3, -2.0)) <= 1e-14);
    const double limit = -2.0 * std::pow(specfun::gamma(1 + j) / specfun::gamma(1 - j), 1.0 / j);
    CHECK(rel(e(1.0, -1e12), limit) <= 1e-9);
}

TEST_CASE("inverting the exterior derivative reproduces the KS bound state")
{
    for (double j : {0.2, 0.5, 0.8}) {
        for (double lambda : {-1.0, -4.0}) {
            const ShellConfig shell{0.01, lambda};
            const double kb = ks::bound_state_ks(shell, j, 1.0).kappa_b;
            const auto f = [&](double kappa) { return ks::exterior_log_derivative(j, kappa, 0.01).value - lambda; };
            const double pole =
                2.0 / 0.01 * std::pow(specfun::gamma(1 + j) / specfun::gamma(1 - j), 0.5 / j);
            const double root = oracle::find_root(f, {kb / 2.0, pole * (1 - 1e-12), 1e-14, 200});
            CHECK(rel(root, kb) <= 1e-10);
        }
    }
}

TEST_CASE("corrected variant")
{
    const ShellConfig shell{1.0, -1.5};
    const auto b = ks::bound_state_ks(shell, 0.5, 1.0, ks::Matching::Corrected);
    // ratio (v+|j|)/(v-|j|) with v = -1: 1/3
    const double want = -2.0 * std::pow(1.0 / 3.0 * 0.5, 2.0);
    CHECK(rel(b.energy, want) <= 1e-14);
}
