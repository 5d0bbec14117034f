#pragma once

#include "fringelab/geometry.hpp"
#include "fringelab/profile.hpp"

#include <complex>
#include <functional>

namespace fringelab {

// sin(b)/b with the removable singularity handled by series expansion.
double sinc(double b);

// Spectral weight of the beam. Monochromatic profiles carry their delta
// factor analytically (weight is only sampled for uniform bands).
struct SpectralProfile {
    enum class Kind { Monochromatic, UniformBand };
    Kind kind = Kind::Monochromatic;
    double center = 0.0; // [m]
    double width = 0.0;  // full band width [m], UniformBand only

    // Normalized so the uniform band integrates to 1 over wavelength.
    double weight(double lambda) const;
};

SpectralProfile monochromatic(double lambda);
SpectralProfile uniform_band(const ExperimentGeometry& geom);

// Free-propagation point-spread phase between planes a distance dist apart:
// exp(i k (x - xi)^2 / (2 dist)), unit modulus by construction.
struct FresnelKernel {
    double k;
    double dist;
    std::complex<double> operator()(double x, double xi) const;
};

// The double slit acting as an amplitude modulator: either two delta
// openings at the slit centers or two hat (top-hat) openings of the
// physical widths.
struct SlitModulation {
    enum class Kind { DeltaPair, HatPair };
    Kind kind = Kind::DeltaPair;
    double center1 = 0.0, center2 = 0.0; // [m]
    double width1 = 0.0, width2 = 0.0;   // [m], HatPair only
};

SlitModulation delta_pair(const ExperimentGeometry& geom);
SlitModulation hat_pair(const ExperimentGeometry& geom);

// Transverse coherence factor imprinted by the entrance slit:
// sinc(k * dx * w / 2z) for two points separated by dx at the double slit.
// Even in dx, 1 at dx = 0, first zero at dx = z*lambda/w.
double coherence_factor(double dx, double lambda, const ExperimentGeometry& geom);

// Two-point power spectrum just before the double slit, per unit spectral
// weight: coherence_factor(x1 - x2) times the Fresnel phase
// exp(i k (x1^2 - x2^2)/2z). Hermitian in (x1, x2); diagonal equals 1.
std::complex<double> power_spectrum_before_slits(double x1, double x2, double lambda,
                                                 const ExperimentGeometry& geom);

// Two-point power spectrum at the detector plane for delta slits at
// -d_bar/2 and +d_bar/2, per unit spectral weight:
// cos(k (x1-x2) d_bar / 2v) + coherence_factor(d_bar) cos(k (x1+x2) d_bar / 2v).
// Real-valued and Hermitian; the diagonal reproduces intensity_delta_slits.
std::complex<double> power_spectrum_delta_slits(double x1, double x2, double lambda,
                                                const ExperimentGeometry& geom);

// Detector-plane intensity for delta slits, monochromatic, per unit
// spectral weight: 1 + sinc(k d_bar w / 2z) cos(k d_bar x / v).
double intensity_delta_slits(double x, double lambda, const ExperimentGeometry& geom);

// Sliding mean over the scanning-slit window [x - w0/2, x + w0/2],
// computed as the exact integral of the piecewise-linear interpolant of
// the sampled profile. Windows are clamped to the sampled support near the
// edges (a constant profile is a fixed point everywhere).
// Throws std::invalid_argument when the window is wider than the sampled
// support or spans fewer than 8 samples.
IntensityProfile detector_average(const IntensityProfile& profile, double w0);

// Delta-slit intensity after both averaging steps (scanning window and
// uniform wavelength band), in the constant-sinc approximation: the two
// aperture sinc factors are frozen at the band center and only the fringe
// cosine is band-averaged, which contributes the sinc((dlambda/lambda) *
// k d_bar x / 2v) roll-off.
double intensity_delta_slits_band_averaged(double x, const ExperimentGeometry& geom);

// As above but with the band integral done by explicit quadrature over the
// uniform wavelength band (per-wavelength scanning-window average via the
// analytic cosine window integral, composite Simpson across the band).
// Validates the constant-sinc approximation; n_panels must be even.
double intensity_delta_slits_band_quadrature(double x, const ExperimentGeometry& geom,
                                             int n_panels = 200);

// Finite (hat) slits, monochromatic: single-slit diffraction envelopes
// sinc(k a_bar eta/2v) around the projected slit-center images at
// -+ v*d_bar/(2b), eta_m = x - v*d_bar/(2b), eta_p = x + v*d_bar/(2b):
//   env_m^2 + env_p^2 + 2 env_m env_p coherence_factor(d_bar) cos(k d_bar x/v)
double intensity_finite_slits(double x, double lambda, const ExperimentGeometry& geom);

// Finite slits after scanning-window and band averaging (constant-sinc
// approximation applied to the cross term only).
double intensity_finite_slits_band_averaged(double x, const ExperimentGeometry& geom);

// Damped two-beam combination from externally supplied component profiles:
// I1(x) + I2(x) + 2 A I12(x) cos(k d_bar x / v), 0 <= A <= 1.
// Throws std::invalid_argument when A is out of range or I12 violates the
// Cauchy-Schwarz bound |I12| <= sqrt(I1 I2) at the evaluation point.
double phenomenological_intensity(double x, double A,
                                  const std::function<double(double)>& I1,
                                  const std::function<double(double)>& I2,
                                  const std::function<double(double)>& I12,
                                  const ExperimentGeometry& geom);

} // namespace fringelab
