// Config-file parsing (unit suffixes, line-numbered errors) and CSV
// ingest/emit round-trips.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fringelab/config.hpp"
#include "fringelab/csv.hpp"
#include "fringelab/optics.hpp"
#include "fringelab/profile.hpp"

#include <cmath>
#include <string>

using namespace fringelab;

namespace {

// runs fn, which must throw std::invalid_argument, and hands back the message
template <typename Fn>
std::string error_message(Fn&& fn) {
    try {
        fn();
    } catch (const std::invalid_argument& e) {
        return e.what();
    }
    return "<no exception>";
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("length and mass unit suffixes") {
    CHECK(parse_length("2m") == doctest::Approx(2.0));
    CHECK(parse_length("3.5mm") == doctest::Approx(3.5e-3));
    CHECK(parse_length("21.9um") == doctest::Approx(21.9e-6));
    CHECK(parse_length("21.9\xc2\xb5m") == doctest::Approx(21.9e-6)); // micro sign
    CHECK(parse_length("0.5nm") == doctest::Approx(0.5e-9));
    CHECK(parse_length("18.45A") == doctest::Approx(18.45e-10));
    CHECK(parse_length("18.45\xc3\x85") == doctest::Approx(18.45e-10)); // Angstrom sign
    CHECK(parse_length("  7 um ") == doctest::Approx(7e-6)); // embedded spaces

    CHECK_THROWS_AS(parse_length("5"), std::invalid_argument);     // no unit
    CHECK_THROWS_AS(parse_length("5ft"), std::invalid_argument);   // unknown unit
    CHECK_THROWS_AS(parse_length("tiny"), std::invalid_argument);  // no number

    CHECK(parse_mass("1.675e-27kg") == doctest::Approx(1.675e-27));
    CHECK_THROWS_AS(parse_mass("1.0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_mass("1.0g"), std::invalid_argument);
}

TEST_CASE("config parsing") {
    SUBCASE("empty text keeps the default geometry") {
        const RunConfig cfg = parse_config("");
        CHECK(cfg.geometry.a1 == doctest::Approx(21.9e-6));
        CHECK(cfg.geometry.d == doctest::Approx(104.1e-6));
        CHECK(cfg.geometry.lambda == doctest::Approx(18.45e-10));
        CHECK(cfg.grid.n == 4001);
    }

    SUBCASE("explicit keys override, comments and blanks are skipped") {
        const RunConfig cfg = parse_config(
            "# detector bench, wide slits\n"
            "\n"
            "a1 = 25um\n"
            "a2 = 25um   # matched pair\n"
            "lambda = 18.45A\n"
            "z = 4.8m\n"
            "mass = 1.675e-27kg\n");
        CHECK(cfg.geometry.a1 == doctest::Approx(25e-6));
        CHECK(cfg.geometry.a2 == doctest::Approx(25e-6));
        CHECK(cfg.geometry.lambda == doctest::Approx(1.845e-9));
        CHECK(cfg.geometry.z == doctest::Approx(4.8));
        CHECK(cfg.geometry.mass == doctest::Approx(1.675e-27));
        // untouched keys keep their defaults
        CHECK(cfg.geometry.w == doctest::Approx(20e-6));
    }

    SUBCASE("envelope_b and slit_centers options") {
        const RunConfig a = parse_config("envelope_b = auto\n");
        CHECK(a.geometry.envelope_b == 0.0);
        const RunConfig b = parse_config("envelope_b = 5m\n");
        CHECK(b.geometry.envelope_b == doctest::Approx(5.0));
        const RunConfig c = parse_config("slit_centers = offset\n");
        CHECK(c.geometry.slit_centers == SlitCenterConvention::Offset);
        CHECK_THROWS_AS(parse_config("slit_centers = diagonal\n"), std::invalid_argument);
    }

    SUBCASE("errors carry the offending line number") {
        CHECK(contains(error_message([] { parse_config("a1 = -3um\n"); }),
                       "config line 1"));
        CHECK(contains(error_message([] { parse_config("a1 = -3um\n"); }),
                       "strictly positive"));
        CHECK(contains(error_message([] {
                           parse_config("a1 = 20um\nw = 20um\nbogus = 3um\n");
                       }),
                       "config line 3"));
        CHECK(contains(error_message([] {
                           parse_config("a1 = 20um\nw = 20um\nbogus = 3um\n");
                       }),
                       "unknown key"));
        CHECK(contains(error_message([] { parse_config("a1 = 20\n"); }),
                       "missing length unit"));
        CHECK(contains(error_message([] { parse_config("a1\n"); }),
                       "expected key = value"));
    }

    SUBCASE("cross-field validation still applies") {
        CHECK_THROWS_AS(parse_config("dlambda = 20A\nlambda = 19A\n"),
                        std::invalid_argument);
    }
}

TEST_CASE("scan CSV ingest") {
    SUBCASE("two-point dataset") {
        const ScanDataset d = read_scan_csv("x_um,counts\n0,100\n10,90\n");
        REQUIRE(d.x.size() == 2);
        CHECK(d.x[0] == doctest::Approx(0.0));
        CHECK(d.x[1] == doctest::Approx(10e-6));
        CHECK(d.counts[0] == doctest::Approx(100.0));
        CHECK(d.counts[1] == doctest::Approx(90.0));
        CHECK(d.err.empty());
    }
    SUBCASE("optional error column") {
        const ScanDataset d = read_scan_csv("x_um,counts,err\n-5,40,6.3\n5,52,7.2\n");
        REQUIRE(d.err.size() == 2);
        CHECK(d.err[1] == doctest::Approx(7.2));
    }
    SUBCASE("comment lines are skipped") {
        const ScanDataset d =
            read_scan_csv("# bench scan 12\nx_um,counts\n0,1\n1,2\n");
        CHECK(d.x.size() == 2);
    }
    SUBCASE("unsorted rows name the offending line") {
        const std::string msg = error_message(
            [] { read_scan_csv("x_um,counts\n0,1\n10,2\n5,3\n"); });
        CHECK(contains(msg, "line 4"));
        CHECK(contains(msg, "increasing"));
    }
    SUBCASE("ragged rows are rejected") {
        CHECK(contains(error_message([] { read_scan_csv("x_um,counts\n0,1,9\n"); }),
                       "ragged"));
    }
    SUBCASE("negative counts are rejected") {
        CHECK_THROWS_AS(read_scan_csv("x_um,counts\n0,1\n1,-2\n"),
                        std::invalid_argument);
    }
    SUBCASE("malformed numbers are rejected") {
        CHECK(contains(error_message([] { read_scan_csv("x_um,counts\n0,fast\n"); }),
                       "malformed"));
    }
    SUBCASE("missing header is rejected") {
        CHECK_THROWS_AS(read_scan_csv(""), std::invalid_argument);
        CHECK_THROWS_AS(read_scan_csv("position,counts\n0,1\n"), std::invalid_argument);
    }
}

TEST_CASE("profile CSV round-trips byte for byte") {
    const ExperimentGeometry geom;
    IntensityProfile p = sample_profile(
        linspace(-500e-6, 500e-6, 4001),
        [&](double x) { return intensity_finite_slits_band_averaged(x, geom); },
        "optical finite-avg bench");

    const std::string once = write_profile_csv(p);
    const IntensityProfile back = read_profile_csv(once);
    const std::string twice = write_profile_csv(back);
    CHECK(once == twice); // bitwise identical, including the tag header

    REQUIRE(back.x.size() == p.x.size());
    CHECK(back.tag == p.tag);
    double worst = 0.0;
    for (std::size_t i = 0; i < p.x.size(); ++i) {
        worst = std::max(worst, std::abs(back.value[i] - p.value[i]) /
                                    std::max(1.0, p.value[i]));
    }
    // 12 significant digits in the file
    CHECK(worst < 1e-11);
}

TEST_CASE("profile CSV accepts plain scan headers too") {
    // simulated profiles fed back in as data use the counts spelling
    const IntensityProfile p = read_profile_csv(
        "x_um,counts\n" + [] {
            std::string rows;
            for (int i = 0; i < 20; ++i) {
                rows += std::to_string(i) + "," + std::to_string(100 - i) + "\n";
            }
            return rows;
        }());
    CHECK(p.x.size() == 20);
    CHECK(p.tag.empty());
}
