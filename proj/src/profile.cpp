#include "fringelab/profile.hpp"

#include "fringelab/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace fringelab {

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 2) throw std::invalid_argument("linspace needs at least 2 points");
    if (!(lo < hi)) throw std::invalid_argument("linspace needs lo < hi");
    std::vector<double> xs(static_cast<std::size_t>(n));
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = lo + step * i;
    xs.back() = hi; // exact endpoint regardless of rounding
    return xs;
}

void validate(const IntensityProfile& p) {
    if (p.x.size() != p.value.size()) {
        throw std::invalid_argument("profile x/value size mismatch");
    }
    if (p.x.size() < 16) {
        throw std::invalid_argument("profile needs at least 16 samples");
    }
    for (std::size_t i = 1; i < p.x.size(); ++i) {
        if (!(p.x[i] > p.x[i - 1])) {
            throw std::invalid_argument("profile positions must be strictly increasing");
        }
    }
    for (double v : p.value) {
        if (v < 0.0) throw std::invalid_argument("profile values must be nonnegative");
    }
}

IntensityProfile sample_profile(const std::vector<double>& xs,
                                const std::function<double(double)>& fn,
                                std::string tag) {
    IntensityProfile p;
    p.x = xs;
    p.value.resize(xs.size());
    p.tag = std::move(tag);
    parallel_for(xs.size(), [&](std::size_t i) { p.value[i] = fn(p.x[i]); });
    return p;
}

double interp_linear(const IntensityProfile& p, double x) {
    if (p.x.empty()) throw std::invalid_argument("empty profile");
    if (x < p.x.front() || x > p.x.back()) {
        throw std::invalid_argument("interpolation point outside profile range");
    }
    auto it = std::lower_bound(p.x.begin(), p.x.end(), x);
    if (it == p.x.begin()) return p.value.front();
    const std::size_t hi = static_cast<std::size_t>(it - p.x.begin());
    const std::size_t lo = hi - 1;
    const double t = (x - p.x[lo]) / (p.x[hi] - p.x[lo]);
    return p.value[lo] + t * (p.value[hi] - p.value[lo]);
}

} // namespace fringelab
