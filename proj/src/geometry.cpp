#include "fringelab/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fringelab {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0)) {
        throw std::invalid_argument(std::string(name) + " must be strictly positive");
    }
}

} // namespace

void validate(const ExperimentGeometry& geom) {
    require_positive(geom.a1, "a1");
    require_positive(geom.a2, "a2");
    require_positive(geom.d, "d");
    require_positive(geom.w, "w");
    require_positive(geom.w0, "w0");
    require_positive(geom.z, "z");
    require_positive(geom.v, "v");
    require_positive(geom.lambda, "lambda");
    require_positive(geom.dlambda, "dlambda");
    require_positive(geom.mass, "mass");
    if (!(geom.dlambda < geom.lambda)) {
        throw std::invalid_argument("dlambda must be smaller than lambda");
    }
    if (geom.envelope_b < 0.0) {
        throw std::invalid_argument("envelope_b must be positive (or 0 for auto)");
    }
}

DerivedParams derive_parameters(const ExperimentGeometry& geom) {
    validate(geom);

    DerivedParams out{};
    out.k = 2.0 * std::numbers::pi / geom.lambda;
    out.a_bar = 0.5 * (geom.a1 + geom.a2);
    out.d_bar = geom.d + out.a_bar;
    out.p_beam = constants::planck_h / geom.lambda;
    out.speed = out.p_beam / geom.mass;
    out.t_flight = geom.v / out.speed;

    // Diffraction by a slit of width a transfers transverse momentum of
    // order hbar/a; the left slit kicks toward negative x, the right slit
    // toward positive x. The longitudinal component shrinks so the total
    // momentum stays on the k-sphere.
    out.px1 = -constants::hbar / geom.a1;
    out.px2 = constants::hbar / geom.a2;
    if (std::abs(out.px1) >= out.p_beam || std::abs(out.px2) >= out.p_beam) {
        throw std::invalid_argument(
            "slit too narrow: diffraction kick exceeds the beam momentum");
    }
    out.pz1 = std::sqrt(out.p_beam * out.p_beam - out.px1 * out.px1);
    out.pz2 = std::sqrt(out.p_beam * out.p_beam - out.px2 * out.px2);

    out.fringe_spacing = geom.v * geom.lambda / out.d_bar;
    out.coherence_zero = geom.z * geom.lambda / geom.w;
    out.envelope_b = geom.envelope_b > 0.0
                         ? geom.envelope_b
                         : geom.z * geom.v / (geom.z + geom.v);

    if (geom.slit_centers == SlitCenterConvention::Symmetric) {
        out.center1 = -0.5 * (geom.d + geom.a1);
        out.center2 = 0.5 * (geom.d + geom.a2);
    } else {
        out.center1 = 0.5 * (geom.a1 - geom.d);
        out.center2 = 0.5 * (geom.a2 + geom.d);
    }
    return out;
}

} // namespace fringelab
