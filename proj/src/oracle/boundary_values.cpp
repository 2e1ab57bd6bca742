#include "abcone/errors.hpp"
#include "abcone/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace abcone::oracle {

namespace {

constexpr std::size_t kMinSamples = 8;
constexpr int kMaxLevels = 6;

using Complex = std::complex<double>;

std::vector<double> exponents(double first, double second)
{
    // two interleaved families first + 2n and second + 2n
    std::vector<double> p;
    for (int n = 0; n < kMaxLevels; ++n) {
        p.push_back(first + 2.0 * n);
        p.push_back(second + 2.0 * n);
    }
    std::sort(p.begin(), p.end());
    p.resize(kMaxLevels);
    return p;
}

// Richardson tableau over values at r, r/2, r/4, ...; returns the entry whose
// change from the previous level is smallest.
Complex extrapolate(std::vector<Complex> column, const std::vector<double>& powers)
{
    Complex best = column.back();
    double best_change = std::numeric_limits<double>::infinity();
    const std::size_t levels = std::min(powers.size(), column.size() - 1);
    for (std::size_t l = 0; l < levels; ++l) {
        const double w = std::exp2(powers[l]);
        std::vector<Complex> next(column.size() - 1);
        for (std::size_t i = 0; i + 1 < column.size(); ++i) {
            next[i] = (w * column[i + 1] - column[i]) / (w - 1.0);
        }
        const double change = std::abs(next.back() - column.back());
        if (change < best_change) {
            best_change = change;
            best = next.back();
        }
        column = std::move(next);
    }
    return best;
}

}  // namespace

BoundaryValues boundary_values_extract(std::span<const RadialSample> samples, double j)
{
    const double a = std::fabs(j);
    if (!(a > 0.0 && a < 1.0)) {
        detail::throw_domain("boundary values are defined for 0 < |j| < 1", j);
    }
    if (samples.size() < kMinSamples) {
        detail::throw_domain("boundary value extraction needs at least 8 samples",
                             static_cast<double>(samples.size()));
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double r = samples[i].r;
        if (!(r > 0.0) || !std::isfinite(r)) {
            detail::throw_domain("sample radius must satisfy r > 0", r);
        }
        if (i > 0 && std::fabs(samples[i - 1].r / r - 2.0) > 1e-12) {
            detail::throw_domain("samples must descend by a factor of 2", samples[i - 1].r / r);
        }
    }

    std::vector<Complex> f0;
    f0.reserve(samples.size());
    for (const auto& s : samples) f0.push_back(std::pow(s.r, a) * s.psi);
    const Complex psi0 = extrapolate(f0, exponents(2.0 * a, 2.0));

    std::vector<Complex> g;
    g.reserve(samples.size());
    for (const auto& s : samples) {
        g.push_back(std::pow(s.r, -a) * (s.psi - psi0 * std::pow(s.r, -a)));
    }
    const Complex psi1 = extrapolate(g, exponents(2.0 - 2.0 * a, 2.0));

    const double r_min = samples.back().r;
    const double noise = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(psi0) *
                         std::pow(r_min, -2.0 * a);
    if (noise > 1e-6 * std::max(std::abs(psi1), std::numeric_limits<double>::min())) {
        throw IllConditionedError(
            "subdominant coefficient psi_1 is below the cancellation noise of the r^{-|j|} "
            "term (|j| = " +
            detail::format_value(a) + ", smallest r = " + detail::format_value(r_min) + ")");
    }
    return {psi0, psi1};
}

}  // namespace abcone::oracle
