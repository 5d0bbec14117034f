#pragma once

#include "fringelab/geometry.hpp"
#include "fringelab/packet.hpp"
#include "fringelab/profile.hpp"

#include <complex>
#include <vector>

namespace fringelab {

// Coherent superposition of equal-width, equal-momentum packets forming the
// wave leaving one slit. Packet weights include the overall normalization
// factor, so <Psi|Psi> = 1 by construction (closed-form Gaussian overlaps).
struct WaveSuperposition {
    std::vector<GaussianPacket> packets;
    int slit_id = 0; // 1 = left, 2 = right (diagnostic label)

    // Closed-form norm; 1 after build_slit_wave. Time independent under
    // free evolution.
    double norm() const;
};

// How the wavefront filling a slit is modeled:
//   QuasiPlane: a dense train of narrow packets spanning the slit width,
//               which keeps the hard-edge diffraction ripple.
//   Gaussian:   a single packet whose density std is width/4, so the
//               intensity at the slit border is e^-2 of the center value.
enum class SlitMode { QuasiPlane, Gaussian };

struct SlitSpec {
    double center = 0.0; // [m]
    double width = 0.0;  // [m]
    int n_packets = 2;   // QuasiPlane train size, >= 2
};

// Builds the normalized slit wave at t = 0, z0 = 0, with every packet
// carrying the slit's transverse kick px and longitudinal pz.
// QuasiPlane: n equal-weight packets, centers spaced width/(n-1) across the
// slit, density std width/(sqrt(2) n) each. Gaussian: one packet, density
// std width/4. Both use longitudinal density std 2*a_bar, which barely
// spreads over the flight distance.
WaveSuperposition build_slit_wave(const SlitSpec& slit, SlitMode mode,
                                  double px, double pz,
                                  const ExperimentGeometry& geom);

// Two-slit beam: |Psi> = c1 |psi1> + c2 |psi2> with |c1|^2 + |c2|^2 = 1.
// Carries the particle mass so the state can be propagated on its own.
struct BeamState {
    WaveSuperposition psi1, psi2;
    std::complex<double> c1{0.0, 0.0}, c2{0.0, 0.0};
    double mass = 0.0; // [kg]
};

// Standard beam for the configured geometry: slit centers from the chosen
// convention, c1 = c2 = 1/sqrt(2), kicks -+hbar/a_i (or none, with pz =
// p_beam, for the symmetric control case). QuasiPlane trains use 30
// packets on the left slit and 31 on the right.
BeamState make_two_slit_beam(const ExperimentGeometry& geom, SlitMode mode,
                             bool with_kicks = true);

// Environment-induced damping of the interference cross term.
struct DecoherenceModel {
    enum class Mode { LambdaDirect, TauC };
    Mode mode = Mode::LambdaDirect;
    double lambda = 1.0;    // LambdaDirect: coherence degree in [0, 1]
    double tau_c = 0.0;     // TauC: coherence time [s], > 0
    double env_phase = 0.0; // constant phase the environment adds to the cross term
};

// Coherence degree at time t: the stored Lambda (LambdaDirect) or
// sech(t / tau_c) (TauC). Throws on out-of-range Lambda, non-positive
// tau_c, or negative t.
double coherence_degree(const DecoherenceModel& deco, double t);

// Coherence degree from the modulus of the environment-state overlap:
// 2|alpha| / (1 + |alpha|^2), mapping |alpha| in [0, 1] onto [0, 1].
double coherence_degree_from_overlap(double alpha_abs);

// Inverts Lambda = sech(t / tau_c) for the coherence time:
// tau_c = t / arcsech(Lambda). Requires 0 < Lambda < 1 and t > 0
// (Lambda = 1 has no finite coherence time).
double tau_c_from_lambda(double lambda, double t);

// |c1 psi1 + c2 psi2|^2 sampled along the line z = z_eval at time t.
IntensityProfile intensity_coherent(const BeamState& beam, double t,
                                    const std::vector<double>& xs, double z_eval);

// Decohered intensity: the one-slit terms survive intact and the cross
// term is scaled by the coherence degree with the environment phase
// applied:
//   |c1 psi1|^2 + |c2 psi2|^2
//     + 2 Lambda Re[e^{i phase} (c1 psi1) conj(c2 psi2)]
// The global prefactor that would renormalize the mixed state is dropped;
// data comparisons go through a fitted scale factor anyway.
// Lambda = 1 with zero phase reproduces intensity_coherent.
IntensityProfile intensity_decohered(const BeamState& beam,
                                     const DecoherenceModel& deco, double t,
                                     const std::vector<double>& xs, double z_eval);

// Envelope (one-slit sum) and cross-term components of the decohered
// intensity, so callers can form envelope + Lambda * cross for any Lambda
// without re-evaluating the wave functions. Used by the coherence-degree fit.
struct IntensityComponents {
    std::vector<double> x;
    std::vector<double> envelope;
    std::vector<double> cross; // already includes the factor 2 and env_phase
};

IntensityComponents intensity_components(const BeamState& beam, double env_phase,
                                         double t, const std::vector<double>& xs,
                                         double z_eval);

} // namespace fringelab
