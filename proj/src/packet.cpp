#include "fringelab/packet.hpp"

#include "fringelab/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fringelab {

double Evolved1D::center() const { return x0 + p * t / mass; }

double Evolved1D::width_abs() const { return std::abs(sigma_t); }

std::complex<double> Evolved1D::operator()(double x) const {
    const double u = x - center();
    const std::complex<double> gauss = -u * u / (2.0 * sigma * sigma_t);
    const double phase =
        (p * u + p * p * t / (2.0 * mass)) / constants::hbar;
    const double prefactor = std::pow(std::numbers::pi * sigma * sigma, -0.25);
    const std::complex<double> shrink = std::sqrt(sigma / sigma_t);
    return prefactor * shrink *
           std::exp(gauss + std::complex<double>(0.0, phase));
}

Evolved1D propagate_free(const Gaussian1D& g, double t, double mass) {
    if (!(g.sigma > 0.0)) throw std::invalid_argument("packet width must be positive");
    if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
    if (t < 0.0) throw std::invalid_argument("free propagation requires t >= 0");
    const double spread = constants::hbar * t / (mass * g.sigma * g.sigma);
    return Evolved1D{g.x0, g.p, g.sigma, t, mass,
                     g.sigma * std::complex<double>(1.0, spread)};
}

EvolvedPacket propagate_free(const GaussianPacket& p, double t, double mass) {
    return EvolvedPacket{propagate_free(p.gx, t, mass),
                         propagate_free(p.gz, t, mass), p.amp};
}

std::complex<double> overlap_same_width(const Gaussian1D& gi, const Gaussian1D& gj) {
    if (gi.sigma != gj.sigma || gi.p != gj.p) {
        throw std::invalid_argument("overlap_same_width needs equal sigma and momentum");
    }
    const double dx = gi.x0 - gj.x0;
    const double damp = std::exp(-dx * dx / (4.0 * gi.sigma * gi.sigma));
    return std::polar(damp, gi.p * dx / constants::hbar);
}

} // namespace fringelab
