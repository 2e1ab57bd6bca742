#include "abcone/errors.hpp"
#include "abcone/oracle.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace abcone::oracle {

double find_root(const std::function<double(double)>& f, const RootFindSpec& spec)
{
    double a = spec.bracket_lo;
    double b = spec.bracket_hi;
    if (!(a < b)) {
        throw BracketError("root bracket requires lo < hi (got [" + detail::format_value(a) + ", " +
                           detail::format_value(b) + "])");
    }
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) {
        throw BracketError("no sign change on [" + detail::format_value(a) + ", " +
                           detail::format_value(b) + "]");
    }
    double c = a;
    double fc = fa;
    double d = b - a;
    double e = d;
    for (int iter = 0; iter < spec.max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::fabs(b) +
                           0.5 * spec.rel_tol * std::fabs(b);
        const double m = 0.5 * (c - b);
        if (std::fabs(m) <= tol || fb == 0.0) return b;
        if (std::fabs(e) >= tol && std::fabs(fa) > std::fabs(fb)) {
            const double s = fb / fa;
            double p;
            double q;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            }
            else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            else p = -p;
            if (2.0 * p < std::min(3.0 * m * q - std::fabs(tol * q), std::fabs(e * q))) {
                e = d;
                d = p / q;
            }
            else {
                d = m;
                e = m;
            }
        }
        else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += std::fabs(d) > tol ? d : (m > 0.0 ? tol : -tol);
        fb = f(b);
    }
    throw ConvergenceError("root finder exceeded " + std::to_string(spec.max_iter) + " iterations");
}

std::pair<double, double> expand_bracket(const std::function<double(double)>& f, double lo,
                                         double hi, double factor, int max_steps)
{
    if (!(lo > 0.0 && lo < hi && factor > 1.0)) {
        throw BracketError("bracket expansion requires 0 < lo < hi and factor > 1");
    }
    double flo = f(lo);
    double fhi = f(hi);
    for (int step = 0; step < max_steps; ++step) {
        if ((flo > 0.0) != (fhi > 0.0) || flo == 0.0 || fhi == 0.0) return {lo, hi};
        // move the end whose value is closer to zero
        if (std::fabs(flo) < std::fabs(fhi)) {
            lo /= factor;
            flo = f(lo);
        }
        else {
            hi *= factor;
            fhi = f(hi);
        }
    }
    throw BracketError("could not bracket a sign change");
}

}  // namespace abcone::oracle
