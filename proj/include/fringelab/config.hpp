#pragma once

#include "fringelab/geometry.hpp"
#include "fringelab/quantum.hpp"

#include <optional>
#include <string>

namespace fringelab {

enum class ModelKind {
    OpticalDelta,
    OpticalDeltaAvg,
    OpticalFinite,
    OpticalFiniteAvg,
    QuantumQuasiPlane,
    QuantumGaussian,
};

struct GridSpec {
    double x_min = -500e-6; // [m]
    double x_max = 500e-6;  // [m]
    int n = 4001;
};

void validate(const GridSpec& grid);

// Everything a CLI run needs. parse_config fills the geometry from the
// config file; model, grid, decoherence and output come from CLI flags and
// keep their defaults here.
struct RunConfig {
    ExperimentGeometry geometry;
    ModelKind model = ModelKind::OpticalFiniteAvg;
    std::optional<DecoherenceModel> deco;
    GridSpec grid;
    std::string out_path;
    bool with_kicks = true;
};

// Parses flat "key = value" text with '#' comments and blank lines.
// Geometry keys (a1, a2, d, w, w0, z, v, lambda, dlambda) take a number
// with an explicit length unit (m, mm, um/µm, nm, A/Å); mass takes kg.
// Optional keys: envelope_b (length or "auto") and slit_centers
// ("symmetric" or "offset"). Unknown keys, missing units, and
// non-positive values are errors, each reported with its line number.
// Empty text yields the default geometry.
RunConfig parse_config(const std::string& text);

// Unit-suffix parsers used by parse_config and the CLI.
double parse_length(const std::string& token);     // -> meters
double parse_mass(const std::string& token);       // -> kilograms

} // namespace fringelab
