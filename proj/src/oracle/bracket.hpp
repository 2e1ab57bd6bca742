#pragma once

#include <cmath>
#include <functional>
#include <utility>

namespace abcone::oracle::bracket {

// Shrinks a positive bracket geometrically until hi/lo <= 2, keeping the sign change.
inline std::pair<double, double> narrow_geometric(const std::function<double(double)>& f, double lo,
                                                  double hi)
{
    double flo = f(lo);
    for (int i = 0; i < 2000 && hi / lo > 2.0; ++i) {
        const double mid = std::sqrt(lo * hi);
        const double fm = f(mid);
        if (fm == 0.0) return {mid, mid * 1.5};
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        }
        else {
            hi = mid;
        }
    }
    return {lo, hi};
}

}  // namespace abcone::oracle::bracket
