#include "fringelab/config.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace fringelab {

namespace {

std::string trim(const std::string& s) {
    std::size_t lo = 0, hi = s.size();
    while (lo < hi && std::isspace(static_cast<unsigned char>(s[lo]))) ++lo;
    while (hi > lo && std::isspace(static_cast<unsigned char>(s[hi - 1]))) --hi;
    return s.substr(lo, hi - lo);
}

struct NumberUnit {
    double number;
    std::string unit;
};

NumberUnit split_number_unit(const std::string& token) {
    const char* begin = token.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin) throw std::invalid_argument("expected a number");
    return {value, trim(std::string(end))};
}

[[noreturn]] void fail_line(int line_no, const std::string& msg) {
    std::ostringstream os;
    os << "config line " << line_no << ": " << msg;
    throw std::invalid_argument(os.str());
}

} // namespace

double parse_length(const std::string& token) {
    const NumberUnit nu = split_number_unit(token);
    double factor = 0.0;
    // micro sign and Angstrom both appear in UTF-8 config files
    if (nu.unit == "m") factor = 1.0;
    else if (nu.unit == "mm") factor = 1e-3;
    else if (nu.unit == "um" || nu.unit == "\xc2\xb5m" || nu.unit == "\xce\xbcm") factor = 1e-6;
    else if (nu.unit == "nm") factor = 1e-9;
    else if (nu.unit == "A" || nu.unit == "\xc3\x85") factor = 1e-10;
    else if (nu.unit.empty()) throw std::invalid_argument("missing length unit (m, mm, um, nm, A)");
    else throw std::invalid_argument("unknown length unit '" + nu.unit + "'");
    return nu.number * factor;
}

double parse_mass(const std::string& token) {
    const NumberUnit nu = split_number_unit(token);
    if (nu.unit.empty()) throw std::invalid_argument("missing mass unit (kg)");
    if (nu.unit != "kg") throw std::invalid_argument("unknown mass unit '" + nu.unit + "'");
    return nu.number;
}

void validate(const GridSpec& grid) {
    if (!(grid.x_min < grid.x_max)) {
        throw std::invalid_argument("grid needs x_min < x_max");
    }
    if (grid.n < 16) throw std::invalid_argument("grid needs at least 16 points");
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    ExperimentGeometry& g = cfg.geometry;

    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail_line(line_no, "expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail_line(line_no, "empty key");
        if (value.empty()) fail_line(line_no, "empty value for key '" + key + "'");

        try {
            if (key == "a1") g.a1 = parse_length(value);
            else if (key == "a2") g.a2 = parse_length(value);
            else if (key == "d") g.d = parse_length(value);
            else if (key == "w") g.w = parse_length(value);
            else if (key == "w0") g.w0 = parse_length(value);
            else if (key == "z") g.z = parse_length(value);
            else if (key == "v") g.v = parse_length(value);
            else if (key == "lambda") g.lambda = parse_length(value);
            else if (key == "dlambda") g.dlambda = parse_length(value);
            else if (key == "mass") g.mass = parse_mass(value);
            else if (key == "envelope_b") {
                g.envelope_b = value == "auto" ? 0.0 : parse_length(value);
            } else if (key == "slit_centers") {
                if (value == "symmetric") g.slit_centers = SlitCenterConvention::Symmetric;
                else if (value == "offset") g.slit_centers = SlitCenterConvention::Offset;
                else throw std::invalid_argument("expected 'symmetric' or 'offset'");
            } else {
                throw std::invalid_argument("unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument& e) {
            fail_line(line_no, e.what());
        }

        // catch sign errors immediately so the message can carry the line
        if (key != "slit_centers" && key != "envelope_b") {
            double just_set = 0.0;
            if (key == "a1") just_set = g.a1;
            else if (key == "a2") just_set = g.a2;
            else if (key == "d") just_set = g.d;
            else if (key == "w") just_set = g.w;
            else if (key == "w0") just_set = g.w0;
            else if (key == "z") just_set = g.z;
            else if (key == "v") just_set = g.v;
            else if (key == "lambda") just_set = g.lambda;
            else if (key == "dlambda") just_set = g.dlambda;
            else just_set = g.mass;
            if (!(just_set > 0.0)) {
                fail_line(line_no, "value for '" + key + "' must be strictly positive");
            }
        }
    }

    validate(cfg.geometry); // cross-field checks (dlambda < lambda, ...)
    return cfg;
}

} // namespace fringelab
