#include "fringelab/optics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fringelab {

double sinc(double b) {
    const double ab = std::abs(b);
    if (ab < 1e-4) {
        // sin(b)/b = 1 - b^2/6 + b^4/120, remainder < 1e-26 here
        const double b2 = b * b;
        return 1.0 - b2 / 6.0 + b2 * b2 / 120.0;
    }
    return std::sin(b) / b;
}

double SpectralProfile::weight(double lambda) const {
    if (kind == Kind::Monochromatic) {
        return lambda == center ? 1.0 : 0.0;
    }
    const double half = 0.5 * width;
    if (lambda < center - half || lambda > center + half) return 0.0;
    return 1.0 / width;
}

SpectralProfile monochromatic(double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    return SpectralProfile{SpectralProfile::Kind::Monochromatic, lambda, 0.0};
}

SpectralProfile uniform_band(const ExperimentGeometry& geom) {
    validate(geom);
    return SpectralProfile{SpectralProfile::Kind::UniformBand, geom.lambda, geom.dlambda};
}

std::complex<double> FresnelKernel::operator()(double x, double xi) const {
    const double u = x - xi;
    return std::polar(1.0, k * u * u / (2.0 * dist));
}

SlitModulation delta_pair(const ExperimentGeometry& geom) {
    const DerivedParams der = derive_parameters(geom);
    return SlitModulation{SlitModulation::Kind::DeltaPair,
                          -0.5 * der.d_bar, 0.5 * der.d_bar, 0.0, 0.0};
}

SlitModulation hat_pair(const ExperimentGeometry& geom) {
    const DerivedParams der = derive_parameters(geom);
    return SlitModulation{SlitModulation::Kind::HatPair,
                          der.center1, der.center2, geom.a1, geom.a2};
}

namespace {

double wavenumber(double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    return 2.0 * std::numbers::pi / lambda;
}

// Exact integral of the piecewise-linear interpolant of (x, y) from a to b,
// both inside [x.front(), x.back()].
double integrate_linear_interpolant(const std::vector<double>& x,
                                    const std::vector<double>& y,
                                    double a, double b) {
    // antiderivative within cell i at position t in [x[i], x[i+1]]:
    // y[i]*(t - x[i]) + slope*(t - x[i])^2/2
    auto cell_of = [&](double t) {
        std::size_t lo = 0, hi = x.size() - 1;
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            if (x[mid] <= t) lo = mid; else hi = mid;
        }
        return lo;
    };
    auto partial = [&](std::size_t i, double t) {
        const double h = x[i + 1] - x[i];
        const double s = (y[i + 1] - y[i]) / h;
        const double u = t - x[i];
        return y[i] * u + 0.5 * s * u * u;
    };
    const std::size_t ca = cell_of(a);
    const std::size_t cb = cell_of(b);
    if (ca == cb) return partial(ca, b) - partial(ca, a);
    double total = partial(ca, x[ca + 1]) - partial(ca, a);
    for (std::size_t i = ca + 1; i < cb; ++i) {
        total += 0.5 * (y[i] + y[i + 1]) * (x[i + 1] - x[i]);
    }
    total += partial(cb, b);
    return total;
}

} // namespace

double coherence_factor(double dx, double lambda, const ExperimentGeometry& geom) {
    const double k = wavenumber(lambda);
    return sinc(k * dx * geom.w / (2.0 * geom.z));
}

std::complex<double> power_spectrum_before_slits(double x1, double x2, double lambda,
                                                 const ExperimentGeometry& geom) {
    validate(geom);
    const double k = wavenumber(lambda);
    const FresnelKernel kernel{k, geom.z};
    // phase exp(ik(x1^2 - x2^2)/2z) written via the kernel pair so the
    // unit-modulus factor structure stays explicit
    const std::complex<double> phase =
        kernel(x1, 0.0) * std::conj(kernel(x2, 0.0));
    return coherence_factor(x1 - x2, lambda, geom) * phase;
}

std::complex<double> power_spectrum_delta_slits(double x1, double x2, double lambda,
                                                const ExperimentGeometry& geom) {
    const DerivedParams der = derive_parameters(geom);
    const double k = wavenumber(lambda);
    const double half_arg = k * der.d_bar / (2.0 * geom.v);
    const double value = std::cos(half_arg * (x1 - x2)) +
                         coherence_factor(der.d_bar, lambda, geom) *
                             std::cos(half_arg * (x1 + x2));
    return {value, 0.0};
}

double intensity_delta_slits(double x, double lambda, const ExperimentGeometry& geom) {
    const DerivedParams der = derive_parameters(geom);
    const double k = wavenumber(lambda);
    return 1.0 + coherence_factor(der.d_bar, lambda, geom) *
                     std::cos(k * der.d_bar * x / geom.v);
}

IntensityProfile detector_average(const IntensityProfile& profile, double w0) {
    validate(profile);
    if (!(w0 > 0.0)) throw std::invalid_argument("window width must be positive");
    const double support = profile.x.back() - profile.x.front();
    if (w0 > support) {
        throw std::invalid_argument("scanning window is wider than the profile support");
    }
    double max_step = 0.0;
    for (std::size_t i = 1; i < profile.x.size(); ++i) {
        max_step = std::max(max_step, profile.x[i] - profile.x[i - 1]);
    }
    if (w0 < 8.0 * max_step) {
        throw std::invalid_argument("scanning window must span at least 8 samples");
    }

    IntensityProfile out;
    out.x = profile.x;
    out.value.resize(profile.value.size());
    out.tag = profile.tag.empty() ? std::string("window-averaged")
                                  : profile.tag + " | window-averaged";
    const double half = 0.5 * w0;
    for (std::size_t i = 0; i < profile.x.size(); ++i) {
        // clamp so edge samples average over the available support
        const double lo = std::max(profile.x.front(), profile.x[i] - half);
        const double hi = std::min(profile.x.back(), profile.x[i] + half);
        out.value[i] =
            integrate_linear_interpolant(profile.x, profile.value, lo, hi) / (hi - lo);
    }
    return out;
}

double intensity_delta_slits_band_averaged(double x, const ExperimentGeometry& geom) {
    const DerivedParams der = derive_parameters(geom);
    const double fringe_arg = der.k * der.d_bar * x / geom.v;
    const double window_sinc = sinc(der.k * der.d_bar * geom.w0 / (2.0 * geom.v));
    const double band_sinc = sinc((geom.dlambda / geom.lambda) * 0.5 * fringe_arg);
    return 1.0 + coherence_factor(der.d_bar, geom.lambda, geom) * window_sinc *
                     band_sinc * std::cos(fringe_arg);
}

double intensity_delta_slits_band_quadrature(double x, const ExperimentGeometry& geom,
                                             int n_panels) {
    if (n_panels < 2 || n_panels % 2 != 0) {
        throw std::invalid_argument("n_panels must be even and >= 2");
    }
    const DerivedParams der = derive_parameters(geom);
    // per-wavelength intensity with the scanning-window average applied
    // exactly: averaging cos(c x') over [x - w0/2, x + w0/2] multiplies the
    // amplitude by sinc(c w0/2)
    auto averaged_at = [&](double lambda) {
        const double k = 2.0 * std::numbers::pi / lambda;
        const double c = k * der.d_bar / geom.v;
        return 1.0 + coherence_factor(der.d_bar, lambda, geom) *
                         sinc(0.5 * c * geom.w0) * std::cos(c * x);
    };
    const SpectralProfile band = uniform_band(geom);
    const double lo = band.center - 0.5 * band.width;
    const double hi = band.center + 0.5 * band.width;
    const double h = (hi - lo) / n_panels;
    double sum = averaged_at(lo) * band.weight(lo) + averaged_at(hi) * band.weight(hi);
    for (int i = 1; i < n_panels; ++i) {
        const double lam = lo + h * i;
        sum += averaged_at(lam) * band.weight(lam) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return sum * h / 3.0;
}

namespace {

struct FiniteSlitTerms {
    double env_m, env_p, fringe_arg, coherence;
};

FiniteSlitTerms finite_slit_terms(double x, double lambda, const DerivedParams& der,
                                  const ExperimentGeometry& geom) {
    const double k = wavenumber(lambda);
    const double offset = geom.v * der.d_bar / (2.0 * der.envelope_b);
    const double eta_m = x - offset;
    const double eta_p = x + offset;
    const double env_scale = k * der.a_bar / (2.0 * geom.v);
    return {sinc(env_scale * eta_m), sinc(env_scale * eta_p),
            k * der.d_bar * x / geom.v,
            coherence_factor(der.d_bar, lambda, geom)};
}

} // namespace

double intensity_finite_slits(double x, double lambda, const ExperimentGeometry& geom) {
    const DerivedParams der = derive_parameters(geom);
    const FiniteSlitTerms t = finite_slit_terms(x, lambda, der, geom);
    return t.env_m * t.env_m + t.env_p * t.env_p +
           2.0 * t.env_m * t.env_p * t.coherence * std::cos(t.fringe_arg);
}

double intensity_finite_slits_band_averaged(double x, const ExperimentGeometry& geom) {
    const DerivedParams der = derive_parameters(geom);
    const FiniteSlitTerms t = finite_slit_terms(x, geom.lambda, der, geom);
    const double window_sinc = sinc(der.k * der.d_bar * geom.w0 / (2.0 * geom.v));
    const double band_sinc = sinc((geom.dlambda / geom.lambda) * 0.5 * t.fringe_arg);
    return t.env_m * t.env_m + t.env_p * t.env_p +
           2.0 * t.env_m * t.env_p * t.coherence * window_sinc * band_sinc *
               std::cos(t.fringe_arg);
}

double phenomenological_intensity(double x, double A,
                                  const std::function<double(double)>& I1,
                                  const std::function<double(double)>& I2,
                                  const std::function<double(double)>& I12,
                                  const ExperimentGeometry& geom) {
    if (!(A >= 0.0 && A <= 1.0)) {
        throw std::invalid_argument("damping A must lie in [0, 1]");
    }
    const DerivedParams der = derive_parameters(geom);
    const double i1 = I1(x);
    const double i2 = I2(x);
    const double i12 = I12(x);
    if (i1 < 0.0 || i2 < 0.0) {
        throw std::invalid_argument("component intensities must be nonnegative");
    }
    // allow for rounding when the caller passes I12 = sqrt(I1 I2) exactly
    const double bound = std::sqrt(i1 * i2) * (1.0 + 1e-12) + 1e-300;
    if (std::abs(i12) > bound) {
        throw std::invalid_argument("cross intensity violates |I12| <= sqrt(I1 I2)");
    }
    return i1 + i2 + 2.0 * A * i12 * std::cos(der.k * der.d_bar * x / geom.v);
}

} // namespace fringelab
