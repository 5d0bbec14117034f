#pragma once

#include "fringelab/geometry.hpp"
#include "fringelab/profile.hpp"
#include "fringelab/quantum.hpp"

#include <vector>

namespace fringelab {

// Positions with measured counts, e.g. a detector scan read from CSV.
struct ScanDataset {
    std::vector<double> x;      // [m], strictly increasing
    std::vector<double> counts; // >= 0
    std::vector<double> err;    // optional, empty or same length
};

void validate(const ScanDataset& data);

struct VisibilityResult {
    double v;          // (i_max - i_min) / (i_max + i_min)
    double x_max;      // refined position of the central maximum [m]
    double x_min_left; // refined positions of the flanking minima [m]
    double x_min_right;
    double i_max;
    double i_min_left;
    double i_min_right;
};

// Fringe visibility from the central maximum (the interior local maximum
// closest to x = 0, ties toward smaller |x|) and the mean of its two
// flanking minima. All three extrema are refined by 3-point quadratic
// interpolation. Throws numeric_error when the profile has no interior
// maximum with flanking minima (constant or monotone profiles, or a pure
// envelope without fringes).
VisibilityResult fringe_visibility(const IntensityProfile& p);

// Mean spacing between adjacent refined interior maxima whose height is at
// least min_height_frac of the profile peak (filters edge ripple). Only the
// central_count maxima closest to x = 0 enter (0 = no limit); the outermost
// fringes sit on the envelope roll-off, which skews their spacing. Throws
// numeric_error when fewer than two qualifying maxima exist.
double mean_fringe_spacing(const IntensityProfile& p, double min_height_frac = 0.02,
                           int central_count = 5);

// Oscillation amplitude in the outer bands |x| >= band_lo: the largest
// absolute difference between consecutive interior local extrema within
// either band, normalized by the profile peak. 0 when a band holds fewer
// than two extrema (monotone-decaying envelope).
double band_ripple(const IntensityProfile& p, double band_lo);

struct ScaleBackgroundFit {
    double scale;
    double background;
    double rms;
};

// Least-squares scale and constant background mapping the model onto the
// data counts: minimizes sum (scale * model(x_i) + background - counts_i)^2
// via the closed-form 2x2 normal equations. The model profile is linearly
// interpolated onto the data positions, which must lie inside its grid.
// Throws std::invalid_argument on singular normal equations (constant
// model); a non-positive fitted scale is clamped to zero.
ScaleBackgroundFit fit_scale_background(const IntensityProfile& model,
                                        const ScanDataset& data);

struct FitResult {
    double lambda_hat;
    double scale;
    double background;
    double rms;
    std::vector<double> residuals; // counts - (scale * model + background)
    bool at_boundary = false;      // argmin pinned to Lambda = 0 or 1
};

// Estimates the coherence degree by golden-section search of rms(Lambda)
// over [0, 1], with the scale/background fit nested inside each candidate
// evaluation. The beam's wave functions are evaluated once, on the data
// positions; candidates only recombine envelope + Lambda * cross.
// deco_template supplies the environment phase. Deterministic.
FitResult fit_coherence_degree(const BeamState& beam,
                               const DecoherenceModel& deco_template,
                               const ScanDataset& data,
                               const ExperimentGeometry& geom);

struct ProfileComparison {
    double rms;              // after normalizing both profiles to unit mean
    double max_abs;          // same normalization
    double visibility_delta; // |V(a) - V(b)|, NaN when either has no fringes
};

// Compares two profiles on a uniform 1024-point grid spanning their x
// overlap, after scaling each to unit mean there (shape comparison,
// insensitive to overall intensity scale). Throws std::invalid_argument
// when the supports do not overlap.
ProfileComparison compare_profiles(const IntensityProfile& a, const IntensityProfile& b);

} // namespace fringelab
