#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "spinrad/electron_state.hpp"

using namespace spinrad;

TEST_CASE("constants are internally consistent") {
    const PhysicalConstants pc;
    CHECK(pc.bohr_magneton() == pc.e0 * pc.hbar / (2.0 * pc.m0 * pc.c));
    // known magnitudes in Gaussian units
    CHECK(pc.bohr_magneton() == doctest::Approx(9.274e-21).epsilon(1e-4));
    CHECK(pc.schwinger_field() == doctest::Approx(4.414e13).epsilon(1e-3));
}

TEST_CASE("derived orbit quantities follow their definitions") {
    const PhysicalConstants pc;
    SUBCASE("orbit radius at gamma = 2 in the critical field") {
        const auto s = make_electron_state(2.0, pc.schwinger_field(), 2.0, +1, 0.0);
        const double expect = 2.0 * pc.m0 * pc.c * pc.c / (pc.e0 * pc.schwinger_field());
        CHECK(s.rho == doctest::Approx(expect).epsilon(1e-14));
    }
    SUBCASE("rotation frequency at gamma = 1e4, H = 1e4 G") {
        const auto s = make_electron_state(1.0e4, 1.0e4, 2.0, +1, 0.0);
        CHECK(s.omega0 == doctest::Approx(pc.e0 * 1.0e4 / (pc.m0 * pc.c * 1.0e4)).epsilon(1e-14));
    }
    SUBCASE("rho omega0 = c exactly; orbit radius times omega0 = beta c") {
        const auto s = make_electron_state(7.5, 3.2e4, 2.0, -1, 0.4);
        CHECK(s.rho * s.omega0 == doctest::Approx(pc.c).epsilon(1e-14));
        CHECK(s.orbit_radius() * s.omega0 == doctest::Approx(s.beta * pc.c).epsilon(1e-14));
    }
}

TEST_CASE("invalid states are rejected with the offending value in the message") {
    CHECK_THROWS_AS((void)make_electron_state(1.0, 1e4, 2.0, +1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)make_electron_state(0.5, 1e4, 2.0, +1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)make_electron_state(10.0, 0.0, 2.0, +1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)make_electron_state(10.0, -5.0, 2.0, +1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)make_electron_state(10.0, 1e4, 2.0, 0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)make_electron_state(10.0, 1e4, 2.0, 2, 0.0), std::invalid_argument);
    try {
        (void)make_electron_state(0.5, 1e4, 2.0, +1, 0.0);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("0.5") != std::string::npos);
    }
}

TEST_CASE("xi representation 3 by direct substitution") {
    const PhysicalConstants pc;
    const auto s = make_electron_state(10.0, pc.schwinger_field() / 100.0, 2.0, +1, 0.0);
    CHECK(xi(s).value == doctest::Approx(0.15).epsilon(1e-13));
}

TEST_CASE("xi vanishes with the field") {
    const auto s = make_electron_state(100.0, 1e-12, 2.0, +1, 0.0);
    CHECK(xi(s).value < 1e-20);
    CHECK(xi(s).value > 0.0);
}

TEST_CASE("all five xi representations agree pairwise") {
    std::mt19937 rng(987u);
    std::uniform_real_distribution<double> lg(std::log(2.0), std::log(1.0e5));
    std::uniform_real_distribution<double> lh(std::log(1.0e-8), std::log(1.0e-1));
    const PhysicalConstants pc;
    for (int i = 0; i < 100; ++i) {
        const double gamma = std::exp(lg(rng));
        const double field = std::exp(lh(rng)) * pc.schwinger_field();
        const auto v = xi(make_electron_state(gamma, field, 2.0, +1, 0.0));
        for (int a = 0; a < 5; ++a) {
            for (int b = a + 1; b < 5; ++b) {
                CHECK(std::abs(v.representation[a] / v.representation[b] - 1.0) <= 1e-12);
            }
        }
    }
}

TEST_CASE("xi is invariant under gamma -> k gamma, H -> H/k") {
    const PhysicalConstants pc;
    const double h0 = 1e-4 * pc.schwinger_field();
    const auto a = xi(make_electron_state(50.0, h0, 2.0, +1, 0.0));
    const auto b = xi(make_electron_state(150.0, h0 / 3.0, 2.0, +1, 0.0));
    CHECK(a.value == doctest::Approx(b.value).epsilon(1e-13));
}

TEST_CASE("synchrotron power scaling laws") {
    const PhysicalConstants pc;
    const auto s1 = make_electron_state(10.0, 1e4, 2.0, +1, 0.0);
    // doubling gamma at fixed rho: H must double to keep rho = m0 c^2 gamma/(e0 H) fixed
    const auto s2 = make_electron_state(20.0, 2e4, 2.0, +1, 0.0);
    CHECK(s2.rho == doctest::Approx(s1.rho).epsilon(1e-14));
    CHECK(w_sr(s2) / w_sr(s1) == doctest::Approx(16.0).epsilon(1e-12));
    // doubling rho at fixed gamma: halve the field
    const auto s3 = make_electron_state(10.0, 0.5e4, 2.0, +1, 0.0);
    CHECK(s3.rho == doctest::Approx(2.0 * s1.rho).epsilon(1e-14));
    CHECK(w_sr(s3) / w_sr(s1) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("the two printed power forms coincide under this convention") {
    for (double gamma : {2.0, 5.0, 1e3, 1e5}) {
        const auto s = make_electron_state(gamma, 3e3, 2.0, +1, 0.0);
        CHECK(std::abs(w_sr(s) / w_sr_omega_form(s) - 1.0) <= 1e-12);
    }
}

TEST_CASE("w_sr is positive") {
    const auto s = make_electron_state(3.0, 7e2, 2.0, -1, 1.2);
    CHECK(w_sr(s) > 0.0);
}
