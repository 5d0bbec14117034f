#include "fringelab/cli.hpp"

#include "fringelab/analysis.hpp"
#include "fringelab/config.hpp"
#include "fringelab/csv.hpp"
#include "fringelab/errors.hpp"
#include "fringelab/optics.hpp"
#include "fringelab/quantum.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace fringelab {

namespace {

// All numeric summary output uses 6 significant digits.
std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << text;
}

RunConfig load_config(const std::string& path) {
    if (path.empty()) return parse_config("");
    return parse_config(read_file(path));
}

GridSpec parse_grid_spec(const std::string& spec) {
    // MIN:MAX:N in micrometers
    double lo = 0.0, hi = 0.0;
    int n = 0;
    char trailing = '\0';
    if (std::sscanf(spec.c_str(), "%lf:%lf:%d%c", &lo, &hi, &n, &trailing) != 3) {
        throw std::invalid_argument("grid spec must be MIN:MAX:N in micrometers");
    }
    GridSpec grid{lo * 1e-6, hi * 1e-6, n};
    validate(grid);
    return grid;
}

struct SweepSpec {
    double lo, hi, step;
};

SweepSpec parse_sweep_spec(const std::string& spec) {
    double lo = 0.0, hi = 0.0, step = 0.0;
    char trailing = '\0';
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &lo, &hi, &step, &trailing) != 3) {
        throw std::invalid_argument("sweep spec must be MIN:MAX:STEP");
    }
    if (!(step > 0.0) || !(hi >= lo)) {
        throw std::invalid_argument("sweep spec needs MAX >= MIN and STEP > 0");
    }
    if (lo < 0.0 || hi > 1.0) {
        throw std::invalid_argument("sweep range must stay inside [0, 1]");
    }
    return {lo, hi, step};
}

ModelKind parse_optical_model(const std::string& name) {
    if (name == "delta") return ModelKind::OpticalDelta;
    if (name == "delta-avg") return ModelKind::OpticalDeltaAvg;
    if (name == "finite") return ModelKind::OpticalFinite;
    if (name == "finite-avg") return ModelKind::OpticalFiniteAvg;
    throw std::invalid_argument(
        "unknown optical model '" + name + "' (delta, delta-avg, finite, finite-avg)");
}

SlitMode parse_quantum_mode(const std::string& name) {
    if (name == "gaussian") return SlitMode::Gaussian;
    if (name == "quasiplane" || name == "quasi-plane") return SlitMode::QuasiPlane;
    throw std::invalid_argument(
        "unknown quantum mode '" + name + "' (gaussian, quasiplane)");
}

const char* optical_model_tag(ModelKind model) {
    switch (model) {
        case ModelKind::OpticalDelta: return "optical-delta";
        case ModelKind::OpticalDeltaAvg: return "optical-delta-avg";
        case ModelKind::OpticalFinite: return "optical-finite";
        case ModelKind::OpticalFiniteAvg: return "optical-finite-avg";
        default: return "optical";
    }
}

double visibility_or_zero(const IntensityProfile& p) {
    try {
        return fringe_visibility(p).v;
    } catch (const numeric_error&) {
        return 0.0; // no measurable fringes
    }
}

void print_profile_summary(std::ostream& out, const IntensityProfile& profile,
                           const std::string& model_tag) {
    std::string spacing = "nan";
    try {
        spacing = fmt6(mean_fringe_spacing(profile) * 1e6);
    } catch (const numeric_error&) {
    }
    std::string visibility = "0", x_max = "nan";
    try {
        const VisibilityResult vis = fringe_visibility(profile);
        visibility = fmt6(vis.v);
        x_max = fmt6(vis.x_max * 1e6);
    } catch (const numeric_error&) {
        // profiles without fringes report zero visibility
    }
    out << "model=" << model_tag << "\n";
    out << "fringe_spacing_um=" << spacing << "\n";
    out << "visibility=" << visibility << "\n";
    out << "x_max_um=" << x_max << "\n";
}

void emit_profile(const IntensityProfile& profile, const std::string& out_path) {
    if (!out_path.empty()) write_file(out_path, write_profile_csv(profile));
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const CLI::ParseError&) {
        // handled inside dispatch; defensive fallback
        return 2;
    } catch (const numeric_error& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}

namespace {

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"double-slit fringe models: classical-optics averaging and "
                 "Gaussian wave-packet propagation with coherence damping"};
    app.require_subcommand(1);

    std::string config_path, out_path, data_path, grid_spec;
    std::string model_name = "finite-avg";
    std::string mode_name = "gaussian";
    std::string sweep_spec;
    double lambda_opt = -1.0; // sentinel: not set
    double tau_c_opt = -1.0;
    bool no_kicks = false;

    auto* sim_o = app.add_subcommand("simulate-optical",
                                     "intensity profile from the incoherence model");
    sim_o->add_option("--config", config_path, "geometry config file");
    sim_o->add_option("--model", model_name,
                      "delta | delta-avg | finite | finite-avg (default finite-avg)");
    sim_o->add_option("--grid", grid_spec, "evaluation grid MIN:MAX:N in um");
    sim_o->add_option("--out", out_path, "write the profile CSV here");

    auto* sim_q = app.add_subcommand("simulate-quantum",
                                     "intensity profile from the wave-packet model");
    sim_q->add_option("--config", config_path, "geometry config file");
    sim_q->add_option("--mode", mode_name, "gaussian | quasiplane (default gaussian)");
    sim_q->add_option("--lambda", lambda_opt, "coherence degree in [0, 1]");
    sim_q->add_option("--tau-c", tau_c_opt, "coherence time in seconds");
    sim_q->add_flag("--no-kicks", no_kicks, "disable the per-slit transverse momentum kicks");
    sim_q->add_option("--grid", grid_spec, "evaluation grid MIN:MAX:N in um");
    sim_q->add_option("--out", out_path, "write the profile CSV here");

    auto* vis = app.add_subcommand("visibility", "fringe visibility of a profile/scan CSV");
    vis->add_option("--data", data_path, "profile or scan CSV")->required();

    auto* fit = app.add_subcommand("fit", "estimate the coherence degree from scan data");
    fit->add_option("--config", config_path, "geometry config file");
    fit->add_option("--mode", mode_name, "gaussian | quasiplane (default gaussian)");
    fit->add_option("--data", data_path, "scan CSV with counts")->required();
    fit->add_flag("--no-kicks", no_kicks, "disable the per-slit transverse momentum kicks");

    auto* sweep = app.add_subcommand("sweep", "tabulate visibility over a coherence-degree grid");
    sweep->add_option("--config", config_path, "geometry config file");
    sweep->add_option("--mode", mode_name, "gaussian | quasiplane (default gaussian)");
    sweep->add_option("--lambda,--sweep", sweep_spec, "MIN:MAX:STEP over [0, 1]")->required();
    sweep->add_flag("--no-kicks", no_kicks, "disable the per-slit transverse momentum kicks");
    sweep->add_option("--grid", grid_spec, "evaluation grid MIN:MAX:N in um");
    sweep->add_option("--out", out_path, "write the table CSV here");

    auto* cmp = app.add_subcommand("compare", "shape metrics between two profile CSVs");
    std::string path_a, path_b;
    cmp->add_option("file_a", path_a, "first profile CSV")->required();
    cmp->add_option("file_b", path_b, "second profile CSV")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    RunConfig cfg = load_config(config_path);
    if (!grid_spec.empty()) cfg.grid = parse_grid_spec(grid_spec);
    cfg.out_path = out_path;
    cfg.with_kicks = !no_kicks;
    const std::vector<double> xs = linspace(cfg.grid.x_min, cfg.grid.x_max, cfg.grid.n);
    const ExperimentGeometry& geom = cfg.geometry;

    if (sim_o->parsed()) {
        cfg.model = parse_optical_model(model_name);
        std::function<double(double)> intensity;
        switch (cfg.model) {
            case ModelKind::OpticalDelta:
                intensity = [&](double x) { return intensity_delta_slits(x, geom.lambda, geom); };
                break;
            case ModelKind::OpticalDeltaAvg:
                intensity = [&](double x) { return intensity_delta_slits_band_averaged(x, geom); };
                break;
            case ModelKind::OpticalFinite:
                intensity = [&](double x) { return intensity_finite_slits(x, geom.lambda, geom); };
                break;
            default:
                intensity = [&](double x) { return intensity_finite_slits_band_averaged(x, geom); };
                break;
        }
        const IntensityProfile profile =
            sample_profile(xs, intensity, optical_model_tag(cfg.model));
        print_profile_summary(out, profile, optical_model_tag(cfg.model));
        emit_profile(profile, cfg.out_path);
        return 0;
    }

    if (sim_q->parsed()) {
        const SlitMode mode = parse_quantum_mode(mode_name);
        if (lambda_opt >= 0.0 && tau_c_opt >= 0.0) {
            throw std::invalid_argument("--lambda and --tau-c are mutually exclusive");
        }
        const DerivedParams der = derive_parameters(geom);
        const BeamState beam = make_two_slit_beam(geom, mode, cfg.with_kicks);

        DecoherenceModel deco;
        double lambda_t = 1.0;
        bool coherent = true;
        if (lambda_opt >= 0.0) {
            deco.mode = DecoherenceModel::Mode::LambdaDirect;
            deco.lambda = lambda_opt;
            coherent = false;
        } else if (tau_c_opt >= 0.0) {
            deco.mode = DecoherenceModel::Mode::TauC;
            deco.tau_c = tau_c_opt;
            coherent = false;
        }

        IntensityProfile profile;
        std::string tag = mode == SlitMode::Gaussian ? "quantum-gaussian" : "quantum-quasiplane";
        if (coherent) {
            profile = intensity_coherent(beam, der.t_flight, xs, geom.v);
        } else {
            lambda_t = coherence_degree(deco, der.t_flight);
            profile = intensity_decohered(beam, deco, der.t_flight, xs, geom.v);
        }
        profile.tag = tag;
        print_profile_summary(out, profile, tag);
        out << "lambda=" << fmt6(lambda_t) << "\n";
        out << "t_flight_s=" << fmt6(der.t_flight) << "\n";
        emit_profile(profile, cfg.out_path);
        return 0;
    }

    if (vis->parsed()) {
        const IntensityProfile profile = read_profile_csv(read_file(data_path));
        const VisibilityResult res = fringe_visibility(profile); // numeric_error -> exit 3
        out << "visibility=" << fmt6(res.v) << "\n";
        out << "x_max_um=" << fmt6(res.x_max * 1e6) << "\n";
        out << "x_min_left_um=" << fmt6(res.x_min_left * 1e6) << "\n";
        out << "x_min_right_um=" << fmt6(res.x_min_right * 1e6) << "\n";
        out << "i_max=" << fmt6(res.i_max) << "\n";
        out << "i_min_mean=" << fmt6(0.5 * (res.i_min_left + res.i_min_right)) << "\n";
        return 0;
    }

    if (fit->parsed()) {
        const SlitMode mode = parse_quantum_mode(mode_name);
        const ScanDataset data = read_scan_csv(read_file(data_path));
        const BeamState beam = make_two_slit_beam(geom, mode, cfg.with_kicks);
        const DecoherenceModel tmpl; // zero environment phase
        const FitResult res = fit_coherence_degree(beam, tmpl, data, geom);
        out << "lambda_hat=" << fmt6(res.lambda_hat) << "\n";
        out << "scale=" << fmt6(res.scale) << "\n";
        out << "background=" << fmt6(res.background) << "\n";
        out << "rms=" << fmt6(res.rms) << "\n";
        if (res.lambda_hat > 0.0 && res.lambda_hat < 1.0) {
            const DerivedParams der = derive_parameters(geom);
            out << "tau_c_s=" << fmt6(tau_c_from_lambda(res.lambda_hat, der.t_flight)) << "\n";
        } else {
            out << "tau_c_s=inf\n";
        }
        out << "at_boundary=" << (res.at_boundary ? 1 : 0) << "\n";
        return 0;
    }

    if (sweep->parsed()) {
        const SlitMode mode = parse_quantum_mode(mode_name);
        const SweepSpec sw = parse_sweep_spec(sweep_spec);
        const DerivedParams der = derive_parameters(geom);
        const BeamState beam = make_two_slit_beam(geom, mode, cfg.with_kicks);
        // evaluate the wave functions once; candidates only recombine them
        const IntensityComponents parts =
            intensity_components(beam, 0.0, der.t_flight, xs, geom.v);

        std::ostringstream table;
        table << "lambda,visibility\n";
        // half-step tolerance so MAX lands on the grid despite rounding
        for (double lam = sw.lo; lam <= sw.hi + 0.5 * sw.step; lam += sw.step) {
            const double clamped = std::min(lam, 1.0);
            IntensityProfile profile;
            profile.x = parts.x;
            profile.value.resize(parts.x.size());
            for (std::size_t i = 0; i < parts.x.size(); ++i) {
                profile.value[i] = std::max(
                    0.0, parts.envelope[i] + clamped * parts.cross[i]);
            }
            table << fmt6(clamped) << ',' << fmt6(visibility_or_zero(profile)) << '\n';
        }
        out << table.str();
        if (!cfg.out_path.empty()) write_file(cfg.out_path, table.str());
        return 0;
    }

    if (cmp->parsed()) {
        const IntensityProfile a = read_profile_csv(read_file(path_a));
        const IntensityProfile b = read_profile_csv(read_file(path_b));
        const ProfileComparison res = compare_profiles(a, b);
        out << "rms=" << fmt6(res.rms) << "\n";
        out << "max_abs=" << fmt6(res.max_abs) << "\n";
        out << "visibility_delta=" << fmt6(res.visibility_delta) << "\n";
        return 0;
    }

    err << "error: no subcommand selected\n";
    return 2;
}

} // namespace

} // namespace fringelab
