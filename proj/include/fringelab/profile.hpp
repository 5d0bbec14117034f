#pragma once

#include <functional>
#include <string>
#include <vector>

namespace fringelab {

// Sampled intensity over a strictly increasing position grid.
// Values are relative intensities (or counts once fitted to data).
struct IntensityProfile {
    std::vector<double> x;     // positions [m], strictly increasing
    std::vector<double> value; // intensities, >= 0
    std::string tag;           // model label echoed into file headers
};

std::vector<double> linspace(double lo, double hi, int n);

// Throws std::invalid_argument on size mismatch, n < 16, unsorted x,
// or negative values.
void validate(const IntensityProfile& p);

// Evaluates fn over xs (in parallel for large grids) and packages the result.
IntensityProfile sample_profile(const std::vector<double>& xs,
                                const std::function<double(double)>& fn,
                                std::string tag = {});

// Linear interpolation; x must lie inside [p.x.front(), p.x.back()].
double interp_linear(const IntensityProfile& p, double x);

} // namespace fringelab
