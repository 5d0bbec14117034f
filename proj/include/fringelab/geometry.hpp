#pragma once

#include "fringelab/constants.hpp"

namespace fringelab {

// Placement of the two slit centers used by the wave-packet model.
//   Symmetric: centers at -(d+a1)/2 and +(d+a2)/2, separation exactly
//              d + (a1+a2)/2 = d_bar.
//   Offset:    centers at (a1-d)/2 and (a2+d)/2, an alternative reading of
//              the apparatus sketch; separation (d + (a1+a2)/2) - a1.
enum class SlitCenterConvention { Symmetric, Offset };

// Beamline, upstream to downstream: entrance slit C, double slit O (two
// openings separated by an opaque wire), scanning slit D in front of the
// detector. All lengths in meters.
struct ExperimentGeometry {
    double a1 = 21.9e-6;   // left slit width
    double a2 = 22.5e-6;   // right slit width
    double d = 104.1e-6;   // wire width between the slits
    double w = 20.0e-6;    // entrance slit width (sets transverse coherence)
    double w0 = 20.0e-6;   // scanning slit width at the detector
    double z = 5.0;        // C -> O distance
    double v = 5.0;        // O -> D distance
    double lambda = 18.45e-10;  // de Broglie wavelength
    double dlambda = 2.80e-10;  // spectral bandwidth, full width
    double mass = constants::neutron_mass;

    // Projection distance b for the single-slit envelope centers in the
    // finite-slit formulas (envelope offsets +- v*d_bar/(2b) on the screen).
    // 0 means auto: use the reduced distance z*v/(z+v) of the two-segment
    // geometry, i.e. point-source projection from the entrance slit
    // (magnification 1 + v/z). Setting b = z instead gives collimated
    // (magnification-1) envelopes.
    double envelope_b = 0.0;

    SlitCenterConvention slit_centers = SlitCenterConvention::Symmetric;
};

// Quantities derived once from the geometry and shared by both engines.
struct DerivedParams {
    double k;              // beam wavenumber 2*pi/lambda [1/m]
    double d_bar;          // slit-center separation d + (a1+a2)/2 [m]
    double a_bar;          // mean slit width (a1+a2)/2 [m]
    double p_beam;         // longitudinal momentum 2*pi*hbar/lambda [kg m/s]
    double speed;          // p_beam/mass [m/s]
    double t_flight;       // O -> D flight time v/speed [s]
    double px1, px2;       // transverse diffraction kicks -hbar/a1, +hbar/a2
    double pz1, pz2;       // longitudinal components, px^2 + pz^2 = p_beam^2
    double fringe_spacing; // v*lambda/d_bar [m]
    double coherence_zero; // z*lambda/w [m], first zero of the source coherence
    double envelope_b;     // resolved projection distance (auto -> z*v/(z+v))
    double center1, center2; // slit centers per the chosen convention [m]
};

// Throws std::invalid_argument when a field is out of range.
void validate(const ExperimentGeometry& geom);

DerivedParams derive_parameters(const ExperimentGeometry& geom);

} // namespace fringelab
