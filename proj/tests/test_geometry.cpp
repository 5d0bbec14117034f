// Geometry defaults, derived beam quantities, and validation.
//
// Reference numbers are hand-derived from the setup constants:
//   k      = 2*pi / 18.45 Angstrom           = 3.40552e9 1/m
//   d_bar  = 104.1 + (21.9 + 22.5)/2 um      = 126.3 um
//   speed  = h / (m_n * lambda)              = 214.419 m/s  (=> t_flight 23.3 ms)
//   px1    = -hbar / a1                      = -4.8154e-30 kg m/s
//   fringe spacing = v * lambda / d_bar      = 73.04 um

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fringelab/constants.hpp"
#include "fringelab/geometry.hpp"

#include <cmath>

using namespace fringelab;

TEST_CASE("default geometry matches the experimental setup") {
    const ExperimentGeometry geom;
    CHECK(geom.a1 == doctest::Approx(21.9e-6).epsilon(1e-12));
    CHECK(geom.d == doctest::Approx(104.1e-6).epsilon(1e-12));
    CHECK(geom.a2 == doctest::Approx(22.5e-6).epsilon(1e-12));
    CHECK(geom.w == doctest::Approx(20e-6).epsilon(1e-12));
    CHECK(geom.w0 == doctest::Approx(20e-6).epsilon(1e-12));
    CHECK(geom.z == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(geom.v == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(geom.lambda == doctest::Approx(18.45e-10).epsilon(1e-12));
    CHECK(geom.dlambda == doctest::Approx(2.80e-10).epsilon(1e-12));
    CHECK(geom.mass == doctest::Approx(1.67492749804e-27).epsilon(1e-12));
    CHECK_NOTHROW(validate(geom));
}

TEST_CASE("derived parameters: wavenumber, separations, flight time") {
    const DerivedParams der = derive_parameters(ExperimentGeometry{});

    CHECK(der.k == doctest::Approx(3405520491.696253).epsilon(1e-12));
    CHECK(der.d_bar == doctest::Approx(126.3e-6).epsilon(1e-12));
    CHECK(der.a_bar == doctest::Approx(22.2e-6).epsilon(1e-12));
    CHECK(der.p_beam == doctest::Approx(3.5913659349593494e-25).epsilon(1e-12));
    CHECK(der.speed == doctest::Approx(214.4191876461498).epsilon(1e-12));
    CHECK(der.t_flight == doctest::Approx(0.023318808614513385).epsilon(1e-12));
    CHECK(der.fringe_spacing == doctest::Approx(73.0404e-6).epsilon(1e-5));
}

TEST_CASE("per-slit momentum kicks and longitudinal components") {
    const DerivedParams der = derive_parameters(ExperimentGeometry{});

    // kicks point away from each other: left slit negative, right positive
    CHECK(der.px1 == doctest::Approx(-4.815396424657534e-30).epsilon(1e-12));
    CHECK(der.px2 == doctest::Approx(4.686985853333333e-30).epsilon(1e-12));

    // momentum decomposition is exact and the kick is a tiny fraction
    CHECK(der.px1 * der.px1 + der.pz1 * der.pz1 ==
          doctest::Approx(der.p_beam * der.p_beam).epsilon(1e-14));
    CHECK(der.px2 * der.px2 + der.pz2 * der.pz2 ==
          doctest::Approx(der.p_beam * der.p_beam).epsilon(1e-14));
    CHECK(der.pz1 < der.p_beam);
    CHECK(der.pz2 < der.p_beam);
    CHECK(std::abs(der.pz1 - der.p_beam) / der.p_beam < 1e-9);
    CHECK(std::abs(der.pz2 - der.p_beam) / der.p_beam < 1e-9);

    // flight time is distance over group speed
    CHECK(der.t_flight ==
          doctest::Approx(5.0 / (der.p_beam / 1.67492749804e-27)).epsilon(1e-14));
}

TEST_CASE("slit center conventions") {
    ExperimentGeometry geom;

    SUBCASE("symmetric (default): separation equals d_bar") {
        const DerivedParams der = derive_parameters(geom);
        CHECK(der.center2 - der.center1 == doctest::Approx(der.d_bar).epsilon(1e-14));
        CHECK(der.center1 == doctest::Approx(-(104.1e-6 + 21.9e-6) / 2).epsilon(1e-12));
        CHECK(der.center2 == doctest::Approx((104.1e-6 + 22.5e-6) / 2).epsilon(1e-12));
    }

    SUBCASE("offset variant") {
        geom.slit_centers = SlitCenterConvention::Offset;
        const DerivedParams der = derive_parameters(geom);
        CHECK(der.center1 == doctest::Approx((21.9e-6 - 104.1e-6) / 2).epsilon(1e-12));
        CHECK(der.center2 == doctest::Approx((22.5e-6 + 104.1e-6) / 2).epsilon(1e-12));
        // this convention's separation is smaller than d_bar
        CHECK(der.center2 - der.center1 < der.d_bar);
    }
}

TEST_CASE("envelope reference distance") {
    ExperimentGeometry geom;

    SUBCASE("auto resolves to the reduced distance z v / (z + v)") {
        const DerivedParams der = derive_parameters(geom);
        CHECK(der.envelope_b == doctest::Approx(2.5).epsilon(1e-14));
    }
    SUBCASE("explicit override wins") {
        geom.envelope_b = 5.0;
        const DerivedParams der = derive_parameters(geom);
        CHECK(der.envelope_b == doctest::Approx(5.0).epsilon(1e-14));
    }
}

TEST_CASE("validation rejects unphysical inputs") {
    ExperimentGeometry geom;

    SUBCASE("non-positive length") {
        geom.a1 = 0.0;
        CHECK_THROWS_AS(validate(geom), std::invalid_argument);
        CHECK_THROWS_AS(derive_parameters(geom), std::invalid_argument);
    }
    SUBCASE("negative distance") {
        geom.z = -1.0;
        CHECK_THROWS_AS(validate(geom), std::invalid_argument);
    }
    SUBCASE("non-positive mass") {
        geom.mass = 0.0;
        CHECK_THROWS_AS(validate(geom), std::invalid_argument);
    }
    SUBCASE("bandwidth not below the center wavelength") {
        geom.dlambda = geom.lambda;
        CHECK_THROWS_AS(validate(geom), std::invalid_argument);
    }
    SUBCASE("kick exceeding the beam momentum") {
        // absurdly narrow slit: hbar/a1 > p_beam, no real pz
        geom.a1 = 1e-12;
        CHECK_THROWS(derive_parameters(geom));
    }
}

TEST_CASE("Fresnel rescaling preserves sinc arguments") {
    // the diffraction arguments go as (aperture * aperture) / (lambda *
    // distance), so scaling every transverse length by s and the wavelengths
    // by s^2 at fixed z, v leaves them all unchanged
    const ExperimentGeometry base;
    const DerivedParams d0 = derive_parameters(base);

    for (double s : {0.5, 2.0, 10.0}) {
        ExperimentGeometry scaled = base;
        scaled.lambda *= s * s;
        scaled.dlambda *= s * s;
        scaled.a1 *= s;
        scaled.a2 *= s;
        scaled.d *= s;
        scaled.w *= s;
        scaled.w0 *= s;
        const DerivedParams ds = derive_parameters(scaled);

        const double arg0 = d0.k * d0.d_bar * base.w / (2.0 * base.z);
        const double args = ds.k * ds.d_bar * scaled.w / (2.0 * scaled.z);
        CHECK(args == doctest::Approx(arg0).epsilon(1e-12));

        const double env0 = d0.k * d0.a_bar * d0.d_bar / (2.0 * base.v);
        const double envs = ds.k * ds.a_bar * ds.d_bar / (2.0 * scaled.v);
        CHECK(envs == doctest::Approx(env0).epsilon(1e-12));

        // fringe spacing lambda*v/d_bar picks up one factor of s, and so
        // does the coherence zero z*lambda/w
        CHECK(ds.fringe_spacing == doctest::Approx(s * d0.fringe_spacing).epsilon(1e-12));
        CHECK(ds.coherence_zero == doctest::Approx(s * d0.coherence_zero).epsilon(1e-12));
    }
}
