#pragma once

#include <complex>

namespace fringelab {

// One-dimensional Gaussian wave packet. Width convention:
//   psi0(x) = (pi sigma^2)^(-1/4) exp(-(x - x0)^2 / (2 sigma^2)
//                                     + i p (x - x0) / hbar)
// so the position density |psi0|^2 has standard deviation sigma/sqrt(2).
struct Gaussian1D {
    double x0 = 0.0;    // initial center [m]
    double p = 0.0;     // momentum [kg m/s]
    double sigma = 1.0; // width parameter [m], > 0
};

// Free evolution of a Gaussian1D, exact for the quadratic Hamiltonian:
//   psi(x,t) = (pi sigma^2)^(-1/4) sqrt(sigma/sigma_t)
//              exp(-(x - xt)^2 / (2 sigma sigma_t)
//                  + i [p (x - xt) + p^2 t / 2m] / hbar)
// with sigma_t = sigma (1 + i hbar t / (m sigma^2)) and xt = x0 + p t / m.
// |sigma_t| = sigma sqrt(1 + (hbar t / (m sigma^2))^2) is the spreading law
// for the width parameter; the norm is preserved exactly.
struct Evolved1D {
    double x0, p, sigma, t, mass;
    std::complex<double> sigma_t;

    double center() const; // x0 + p t / m
    double width_abs() const; // |sigma_t|
    std::complex<double> operator()(double x) const;
};

// Throws std::invalid_argument for t < 0 or non-positive sigma/mass.
Evolved1D propagate_free(const Gaussian1D& g, double t, double mass);

// Separable transverse (x) times longitudinal (z) product packet with a
// complex weight. |amp| = 1 gives a unit-norm packet.
struct GaussianPacket {
    Gaussian1D gx;
    Gaussian1D gz;
    std::complex<double> amp{1.0, 0.0};
};

struct EvolvedPacket {
    Evolved1D gx;
    Evolved1D gz;
    std::complex<double> amp;

    std::complex<double> operator()(double x, double z) const {
        return amp * gx(x) * gz(z);
    }
};

EvolvedPacket propagate_free(const GaussianPacket& p, double t, double mass);

// Closed-form overlap <gi|gj> of two packets sharing sigma and momentum:
// exp(-(xi - xj)^2 / (4 sigma^2)) * exp(i p (xi - xj) / hbar).
// Free evolution is unitary, so this is time independent.
std::complex<double> overlap_same_width(const Gaussian1D& gi, const Gaussian1D& gj);

} // namespace fringelab
