#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abcone/bg.hpp"
#include "abcone/errors.hpp"
#include "abcone/specfun.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace abcone;
using bg::ExtensionParam;
using std::numbers::pi;
using cd = std::complex<double>;

namespace {

double rel(double got, double want)
{
    return std::fabs(got - want) / std::fabs(want);
}

const ExtensionParam kF = ExtensionParam::friedrichs();

}  // namespace

TEST_CASE("mu_nu")
{
    CHECK(bg::mu_nu(kF, 0.3, 2.0) == 0.0);
    for (double nu : {-3.0, 0.5, 2.0}) {
        for (double k : {0.1, 1.0, 7.0}) {
            CHECK(rel(bg::mu_nu(ExtensionParam::finite(nu), 0.5, k), k / nu) <= 1e-14);
        }
    }
    CHECK(rel(bg::mu_nu(ExtensionParam::finite(2.0), -0.5, 1.0), 0.5) <= 1e-14);
}

TEST_CASE("mu_nu pole is reported")
{
    // denominator zero: 4^a G(1+a) nu = -k^2a G(1-a) cos(a pi)
    const double a = 0.3;
    const double k = 1.0;
    const double nu = -specfun::gamma(1 - a) * std::cos(a * pi) / (std::pow(4.0, a) * specfun::gamma(1 + a));
    CHECK_THROWS_AS(bg::mu_nu(ExtensionParam::finite(nu), a, k), PoleError);
}

TEST_CASE("degenerate channel offers only Friedrichs")
{
    CHECK_THROWS_AS(bg::mu_nu(ExtensionParam::finite(1.0), 0.0, 1.0), DegenerateChannelError);
    CHECK(bg::mu_nu(kF, 0.0, 1.0) == 0.0);
}

TEST_CASE("regular phase shift")
{
    CHECK(bg::phase_shift_regular(0, -0.5) == doctest::Approx(-pi / 4.0));
    for (long long m = -10; m <= 10; ++m) {
        CHECK(bg::phase_shift_regular(m, static_cast<double>(m)) == 0.0);
        for (double phi : {0.1, 0.5, 0.9}) {
            const double want = pi * (std::fabs(static_cast<double>(m)) - std::fabs(m + phi)) / 2.0;
            CHECK(std::fabs(bg::phase_shift_regular(m, m + phi) - want) <= 1e-14);
        }
    }
}

TEST_CASE("extended phase shift and S-matrix examples")
{
    const auto ext = ExtensionParam::finite(1.0);
    CHECK(bg::phase_shift_extended(2, 0.5, ext, 1.0) ==
          doctest::Approx(bg::phase_shift_regular(2, 0.5) + pi / 4.0).epsilon(1e-15));
    const cd s = bg::s_matrix(2, 0.5, ext, 1.0);
    const cd want = std::polar(1.0, 2.0 * bg::phase_shift_regular(2, 0.5)) * cd(0.0, 1.0);
    CHECK(std::abs(s - want) <= 1e-15);
    CHECK(bg::phase_shift_extended(1, 0.4, kF, 3.0) == bg::phase_shift_regular(1, 0.4));
    CHECK(std::abs(bg::s_matrix(1, 0.4, kF, 3.0) - std::polar(1.0, 2.0 * bg::phase_shift_regular(1, 0.4))) ==
          0.0);
}

TEST_CASE("unitarity on random samples")
{
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double j = std::max(u(gen), 1e-9);
        const double nu = -1e3 + 2e3 * u(gen);
        const double k = 100.0 * (1.0 - u(gen));
        const cd s = bg::s_matrix(0, j, ExtensionParam::finite(nu), k);
        CHECK(std::fabs(std::abs(s) - 1.0) <= 1e-12);
    }
}

TEST_CASE("large nu approaches Friedrichs")
{
    for (double nu : {-1e12, 1e12}) {
        const cd s = bg::s_matrix(0, 0.7, ExtensionParam::finite(nu), 1.0);
        CHECK(std::abs(s - bg::s_matrix(0, 0.7, kF, 1.0)) <= 1e-6);
    }
}

TEST_CASE("S-matrix from the bound state")
{
    for (double j : {0.3, 0.5, 0.7}) {
        for (double nu : {-0.2, -1.0, -4.0}) {
            const double kb = bg::bound_state_bg(ExtensionParam::finite(nu), j, 1.0).kappa_b;
            for (double k : {0.05, 0.5, 1.7, 20.0}) {
                const cd a = bg::s_matrix(1, j, ExtensionParam::finite(nu), k);
                const cd b = bg::s_matrix_from_bound(1, j, kb, k);
                CHECK(std::abs(a - b) <= 1e-10);
                CHECK(std::fabs(std::abs(b) - 1.0) <= 1e-12);
            }
        }
    }
    const double j = 0.4;
    const cd limit = bg::s_matrix_from_bound(0, j, 1e-12, 1.0);
    CHECK(std::abs(limit - std::polar(1.0, 2.0 * bg::phase_shift_regular(0, j) + 2.0 * pi * j)) <= 1e-9);
    CHECK_THROWS_AS(bg::s_matrix_from_bound(0, j, -1.0, 1.0), DomainError);
}

TEST_CASE("BG bound state")
{
    const auto b = bg::bound_state_bg(ExtensionParam::finite(-1.0), 0.5, 1.0);
    CHECK(rel(b.energy, -0.5) <= 1e-15);
    CHECK(rel(b.kappa_b, 1.0) <= 1e-15);
    CHECK(b.method == bg::Method::BG);
    CHECK(std::string(bg::method_tag(b.method)) == "BG");
    for (double j : {0.1, 0.5, 0.9}) {
        const double e1 = bg::bound_state_bg(ExtensionParam::finite(-0.8), j, 2.0).energy;
        const double e3 = bg::bound_state_bg(ExtensionParam::finite(-2.4), j, 2.0).energy;
        CHECK(rel(e3, std::pow(3.0, 1.0 / j) * e1) <= 1e-13);
        CHECK(bg::bound_state_bg(ExtensionParam::finite(-1e-9), j, 1.0).energy < 0.0);
        CHECK(bg::bound_state_bg(ExtensionParam::finite(-1e-9), j, 1.0).energy > -1e-6);
    }
    CHECK_THROWS_AS(bg::bound_state_bg(ExtensionParam::finite(0.5), 0.5, 1.0), DomainError);
    CHECK_THROWS_AS(bg::bound_state_bg(kF, 0.5, 1.0), DomainError);
    CHECK_THROWS_AS(bg::bound_state_bg(ExtensionParam::finite(-1.0), 1.2, 1.0), DomainError);
}

TEST_CASE("radial wavefunction")
{
    CHECK(std::abs(bg::radial_wavefunction(0, 0.4, kF, 1.0, 1e-12)) < 1e-4);
    const double j = 0.4;
    const auto ext = ExtensionParam::finite(2.0);
    const double mu = bg::mu_nu(ext, j, 1.0);
    const double r = 1e-8;
    const cd lead = -mu * std::polar(1.0, -j * pi / 2.0) * std::pow(r / 2.0, -j) / specfun::gamma(1.0 - j);
    CHECK(std::abs(bg::radial_wavefunction(0, j, ext, 1.0, r) - lead) / std::abs(lead) <= 1e-5);
    CHECK_THROWS_AS(bg::radial_wavefunction(0, j, ext, 1.0, 0.0), DomainError);
}

TEST_CASE("partial wave sum recovers the plane wave in flat free space")
{
    const model::PhysicalConfig cfg{1.0, 0.0, 1};
    for (double varphi : {0.0, 0.8, 2.0}) {
        const auto w = bg::partial_wave_sum(cfg, kF, 1.0, 5.0, varphi, 60);
        CHECK(std::fabs(std::abs(w.psi) - 1.0) <= 1e-3);
        CHECK(std::abs(w.psi - std::polar(1.0, -5.0 * std::cos(varphi))) <= 1e-10);
    }
    const auto a = bg::partial_wave_sum(cfg, kF, 1.0, 5.0, 0.3, 10);
    const auto b = bg::partial_wave_sum(cfg, kF, 1.0, 5.0, 0.3, 20);
    CHECK(b.tail_estimate < a.tail_estimate);
    CHECK(std::abs(b.psi - a.psi) <= 10 * a.tail_estimate);
}
