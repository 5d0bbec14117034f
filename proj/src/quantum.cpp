#include "fringelab/quantum.hpp"

#include "fringelab/constants.hpp"
#include "fringelab/parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace fringelab {

namespace {

// Width parameters are specified as density standard deviations throughout
// this module; the packet field stores sqrt(2) times that (see packet.hpp).
constexpr double field_width_factor = 1.4142135623730951; // sqrt(2)

// Sum of all pairwise overlaps <gi|gj> within one train. Real by symmetry
// (conjugate pairs), equals the squared norm of the unweighted packet sum.
double train_norm_squared(const std::vector<Gaussian1D>& gs) {
    double total = 0.0;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        total += 1.0; // <gi|gi>
        for (std::size_t j = i + 1; j < gs.size(); ++j) {
            total += 2.0 * overlap_same_width(gs[i], gs[j]).real();
        }
    }
    return total;
}

struct EvolvedSuperposition {
    std::vector<EvolvedPacket> packets;

    std::complex<double> operator()(double x, double z) const {
        std::complex<double> sum{0.0, 0.0};
        for (const auto& p : packets) sum += p(x, z);
        return sum;
    }
};

EvolvedSuperposition evolve(const WaveSuperposition& wave, double t, double mass) {
    EvolvedSuperposition out;
    out.packets.reserve(wave.packets.size());
    for (const auto& p : wave.packets) {
        out.packets.push_back(propagate_free(p, t, mass));
    }
    return out;
}

void check_beam(const BeamState& beam) {
    if (!(beam.mass > 0.0)) throw std::invalid_argument("beam mass must be positive");
    const double weight = std::norm(beam.c1) + std::norm(beam.c2);
    if (std::abs(weight - 1.0) > 1e-9) {
        throw std::invalid_argument("beam amplitudes must satisfy |c1|^2 + |c2|^2 = 1");
    }
}

void check_grid(const std::vector<double>& xs) {
    if (xs.empty()) throw std::invalid_argument("evaluation grid is empty");
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (!(xs[i] > xs[i - 1])) {
            throw std::invalid_argument("evaluation grid must be strictly increasing");
        }
    }
}

} // namespace

double WaveSuperposition::norm() const {
    if (packets.empty()) return 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < packets.size(); ++i) {
        for (std::size_t j = 0; j < packets.size(); ++j) {
            const std::complex<double> ov =
                std::conj(packets[i].amp) * packets[j].amp *
                overlap_same_width(packets[i].gx, packets[j].gx) *
                overlap_same_width(packets[i].gz, packets[j].gz);
            total += ov.real();
        }
    }
    return std::sqrt(total);
}

WaveSuperposition build_slit_wave(const SlitSpec& slit, SlitMode mode,
                                  double px, double pz,
                                  const ExperimentGeometry& geom) {
    if (!(slit.width > 0.0)) throw std::invalid_argument("slit width must be positive");
    const DerivedParams der = derive_parameters(geom);
    const double sigma_z = field_width_factor * 2.0 * der.a_bar;

    WaveSuperposition wave;
    if (mode == SlitMode::Gaussian) {
        const double sigma_x = field_width_factor * slit.width / 4.0;
        wave.packets.push_back(GaussianPacket{
            Gaussian1D{slit.center, px, sigma_x},
            Gaussian1D{0.0, pz, sigma_z},
            {1.0, 0.0}});
        return wave;
    }

    const int n = slit.n_packets;
    if (n < 2) throw std::invalid_argument("quasi-plane mode needs at least 2 packets");
    const double sigma_x = field_width_factor * slit.width / n;
    const double spacing = slit.width / (n - 1);
    std::vector<Gaussian1D> train;
    train.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        train.push_back(Gaussian1D{slit.center - 0.5 * slit.width + spacing * i,
                                   px, sigma_x});
    }
    const double weight = 1.0 / std::sqrt(train_norm_squared(train));
    for (const auto& g : train) {
        wave.packets.push_back(
            GaussianPacket{g, Gaussian1D{0.0, pz, sigma_z}, {weight, 0.0}});
    }
    return wave;
}

BeamState make_two_slit_beam(const ExperimentGeometry& geom, SlitMode mode,
                             bool with_kicks) {
    const DerivedParams der = derive_parameters(geom);
    const double px1 = with_kicks ? der.px1 : 0.0;
    const double px2 = with_kicks ? der.px2 : 0.0;
    const double pz1 = with_kicks ? der.pz1 : der.p_beam;
    const double pz2 = with_kicks ? der.pz2 : der.p_beam;

    BeamState beam;
    beam.psi1 = build_slit_wave(SlitSpec{der.center1, geom.a1, 30}, mode, px1, pz1, geom);
    beam.psi2 = build_slit_wave(SlitSpec{der.center2, geom.a2, 31}, mode, px2, pz2, geom);
    beam.psi1.slit_id = 1;
    beam.psi2.slit_id = 2;
    beam.mass = geom.mass;
    const double amp = 1.0 / std::sqrt(2.0);
    beam.c1 = {amp, 0.0};
    beam.c2 = {amp, 0.0};
    return beam;
}

double coherence_degree(const DecoherenceModel& deco, double t) {
    if (t < 0.0) throw std::invalid_argument("time must be nonnegative");
    if (deco.mode == DecoherenceModel::Mode::LambdaDirect) {
        if (!(deco.lambda >= 0.0 && deco.lambda <= 1.0)) {
            throw std::invalid_argument("coherence degree must lie in [0, 1]");
        }
        return deco.lambda;
    }
    if (!(deco.tau_c > 0.0)) throw std::invalid_argument("tau_c must be positive");
    return 1.0 / std::cosh(t / deco.tau_c);
}

double coherence_degree_from_overlap(double alpha_abs) {
    if (!(alpha_abs >= 0.0 && alpha_abs <= 1.0)) {
        throw std::invalid_argument("overlap modulus must lie in [0, 1]");
    }
    return 2.0 * alpha_abs / (1.0 + alpha_abs * alpha_abs);
}

double tau_c_from_lambda(double lambda, double t) {
    if (!(lambda > 0.0 && lambda < 1.0)) {
        throw std::invalid_argument("tau_c is only defined for 0 < Lambda < 1");
    }
    if (!(t > 0.0)) throw std::invalid_argument("time must be positive");
    // arcsech(L) = arccosh(1/L)
    return t / std::acosh(1.0 / lambda);
}

IntensityProfile intensity_coherent(const BeamState& beam, double t,
                                    const std::vector<double>& xs, double z_eval) {
    check_beam(beam);
    check_grid(xs);
    const EvolvedSuperposition w1 = evolve(beam.psi1, t, beam.mass);
    const EvolvedSuperposition w2 = evolve(beam.psi2, t, beam.mass);

    IntensityProfile out;
    out.x = xs;
    out.value.resize(xs.size());
    out.tag = "quantum coherent";
    parallel_for(xs.size(), [&](std::size_t i) {
        const std::complex<double> total =
            beam.c1 * w1(xs[i], z_eval) + beam.c2 * w2(xs[i], z_eval);
        out.value[i] = std::norm(total);
    });
    return out;
}

IntensityComponents intensity_components(const BeamState& beam, double env_phase,
                                         double t, const std::vector<double>& xs,
                                         double z_eval) {
    check_beam(beam);
    check_grid(xs);
    const EvolvedSuperposition w1 = evolve(beam.psi1, t, beam.mass);
    const EvolvedSuperposition w2 = evolve(beam.psi2, t, beam.mass);
    const std::complex<double> phase = std::polar(1.0, env_phase);

    IntensityComponents out;
    out.x = xs;
    out.envelope.resize(xs.size());
    out.cross.resize(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) {
        const std::complex<double> f1 = beam.c1 * w1(xs[i], z_eval);
        const std::complex<double> f2 = beam.c2 * w2(xs[i], z_eval);
        out.envelope[i] = std::norm(f1) + std::norm(f2);
        out.cross[i] = 2.0 * (phase * f1 * std::conj(f2)).real();
    });
    return out;
}

IntensityProfile intensity_decohered(const BeamState& beam,
                                     const DecoherenceModel& deco, double t,
                                     const std::vector<double>& xs, double z_eval) {
    const double lam = coherence_degree(deco, t);
    const IntensityComponents parts =
        intensity_components(beam, deco.env_phase, t, xs, z_eval);

    IntensityProfile out;
    out.x = xs;
    out.value.resize(xs.size());
    out.tag = "quantum decohered";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        // clip the tiny negative excursions float cancellation can produce
        // at deep minima
        out.value[i] = std::max(0.0, parts.envelope[i] + lam * parts.cross[i]);
    }
    return out;
}

} // namespace fringelab
