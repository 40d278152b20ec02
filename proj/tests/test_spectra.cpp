#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "spinrad/bessel.hpp"
#include "spinrad/spectra.hpp"

using namespace spinrad;
using spectra::Channel;
using spectra::Domain;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("pi spectral density vanishes identically at g = 2") {
    for (double y : {0.01, 0.3, 1.0, 4.0, 15.0}) {
        CHECK(spectra::spectral_density(y, 2.0, Channel::pi) == 0.0);
        CHECK(spectra::sample_spectral(y, 2.0).pi_density == 0.0);
    }
}

TEST_CASE("grid samples carry both channels consistently") {
    const auto s = spectra::sample_spectral(0.7, 3.0);
    CHECK(s.abscissa == 0.7);
    CHECK(s.sigma_density == spectra::spectral_density(0.7, 3.0, Channel::sigma));
    CHECK(s.pi_density == spectra::spectral_density(0.7, 3.0, Channel::pi));
    const auto a = spectra::sample_angular(-1.2, 3.0);
    CHECK(a.sigma_density == spectra::angular_density(-1.2, 3.0, Channel::sigma));
    CHECK(a.pi_density == spectra::angular_density(-1.2, 3.0, Channel::pi));
}

TEST_CASE("sigma spectral density at g = 2 collapses to the -y^2 K_{1/3} form") {
    const double c = 9.0 * std::sqrt(3.0) / (8.0 * kPi);
    for (double y : {0.05, 0.7, 2.5, 9.0}) {
        const double expect = -c * y * y * bessel_k(1.0 / 3.0, y);
        CHECK(spectra::spectral_density(y, 2.0, Channel::sigma) ==
              doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("spectral densities reject non-positive y") {
    CHECK_THROWS_AS((void)spectra::spectral_density(0.0, 2.0, Channel::sigma), std::domain_error);
    CHECK_THROWS_AS((void)spectra::spectral_density(-1.0, 2.0, Channel::pi), std::domain_error);
}

TEST_CASE("angular densities at chi = 0") {
    for (double g : {1.0, 2.0, 3.7}) {
        CHECK(spectra::angular_density(0.0, g, Channel::pi) == 0.0);
        CHECK(spectra::angular_density(0.0, g, Channel::sigma) ==
              doctest::Approx(-35.0 / 32.0).epsilon(1e-14));
    }
}

TEST_CASE("angular densities are even in chi") {
    std::mt19937 rng(5u);
    std::uniform_real_distribution<double> uni(0.0, 10.0);
    for (int i = 0; i < 50; ++i) {
        const double chi = uni(rng);
        for (auto ch : {Channel::sigma, Channel::pi}) {
            CHECK(spectra::angular_density(chi, 2.7, ch) ==
                  doctest::Approx(spectra::angular_density(-chi, 2.7, ch)).epsilon(1e-14));
        }
    }
}

TEST_CASE("densities and integrals are affine in g") {
    // three-point collinearity: f(2.5) = (f(1) + f(4))/2 for g-linear quantities
    for (double y : {0.2, 1.0, 6.0}) {
        for (auto ch : {Channel::sigma, Channel::pi}) {
            const double f1 = spectra::spectral_density(y, 1.0, ch);
            const double f4 = spectra::spectral_density(y, 4.0, ch);
            const double fm = spectra::spectral_density(y, 2.5, ch);
            CHECK(fm == doctest::Approx(0.5 * (f1 + f4)).epsilon(1e-12));
        }
    }
    for (double chi : {0.0, 0.8, 3.0}) {
        for (auto ch : {Channel::sigma, Channel::pi}) {
            const double f1 = spectra::angular_density(chi, 1.0, ch);
            const double f4 = spectra::angular_density(chi, 4.0, ch);
            const double fm = spectra::angular_density(chi, 2.5, ch);
            CHECK(fm == doctest::Approx(0.5 * (f1 + f4)).epsilon(1e-12));
        }
    }
}

TEST_CASE("spectral closure reproduces the total-power coefficients") {
    for (double g : {1.0, 2.0, 2.00232, 4.0}) {
        const auto s = spectra::integrated_correction(g, Channel::sigma, Domain::spectral);
        CHECK(s.matches_closure);
        const auto p = spectra::integrated_correction(g, Channel::pi, Domain::spectral);
        CHECK(p.matches_closure);
    }
    // headline values at g = 2
    const auto s2 = spectra::integrated_correction(2.0, Channel::sigma, Domain::spectral);
    CHECK(s2.value == doctest::Approx(-1.0).epsilon(1e-6));
    const auto p2 = spectra::integrated_correction(2.0, Channel::pi, Domain::spectral);
    CHECK(std::abs(p2.value) <= 1e-9);
}

TEST_CASE("angular pi closure matches both the coefficient and the Beta value") {
    for (double g : {1.0, 2.0, 2.00232, 4.0}) {
        const auto p = spectra::integrated_correction(g, Channel::pi, Domain::angular);
        CHECK(p.matches_closure);
        const double beta_oracle = (35.0 / 32.0) * (0.5 * g - 1.0) * (16.0 / 105.0);
        CHECK(p.value == doctest::Approx(beta_oracle).epsilon(1e-6));
    }
}

TEST_CASE("angular sigma integral reproduces the Beta value, not the coefficient") {
    const auto s = spectra::integrated_correction(2.0, Channel::sigma, Domain::angular);
    CHECK(s.value == doctest::Approx(-35.0 / 24.0).epsilon(1e-6));
    CHECK(s.value == doctest::Approx(spectra::angular_sigma_beta_value(2.0)).epsilon(1e-6));
    CHECK(!s.matches_closure);
    CHECK(s.closure_target == doctest::Approx(-1.0));
}

TEST_CASE("total power breakdown identities") {
    SUBCASE("g = 2, nu = 0 gives 1 - zeta xi with the 7/8 : 1/8 main split") {
        for (int zeta : {+1, -1}) {
            const auto b = spectra::total_power(2.0, zeta, 0.01, 0.0);
            CHECK(b.main_sigma == 7.0 / 8.0);
            CHECK(b.main_pi == 1.0 / 8.0);
            CHECK(b.total == doctest::Approx(1.0 - zeta * 0.01).epsilon(1e-15));
        }
    }
    SUBCASE("correction disappears in the orbit plane") {
        const auto b = spectra::total_power(2.0, +1, 0.05, kPi / 2.0);
        CHECK(std::abs(b.total - 1.0) <= 1e-12);
    }
    SUBCASE("Larmor/Thomas split at g = 2") {
        const auto b = spectra::total_power(2.0, +1, 0.03, 0.0);
        CHECK(b.em_l == doctest::Approx(0.01).epsilon(1e-13));
        CHECK(b.em_th == doctest::Approx(-0.04).epsilon(1e-13));
        CHECK(b.em_l + b.em_th == doctest::Approx(-0.03).epsilon(1e-13));
    }
    SUBCASE("algebraic consistency of the assembled total") {
        std::mt19937 rng(11u);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        for (int i = 0; i < 100; ++i) {
            const double g = 1.0 + 3.0 * uni(rng);
            const int zeta = uni(rng) < 0.5 ? +1 : -1;
            const double xiv = 0.1 * uni(rng);
            const double nu = kPi * uni(rng);
            const auto b = spectra::total_power(g, zeta, xiv, nu);
            CHECK(b.total ==
                  doctest::Approx(b.main_sigma + b.main_pi +
                                  b.spin_factor * (b.corr_sigma + b.corr_pi)).epsilon(1e-15));
            CHECK(b.em_l + b.em_th ==
                  doctest::Approx(b.spin_factor * (b.corr_sigma + b.corr_pi)).epsilon(1e-12));
        }
    }
    SUBCASE("perturbative flag") {
        CHECK(spectra::total_power(2.0, +1, 0.01, 0.0).perturbative);
        CHECK(!spectra::total_power(2.0, +1, 0.5, 0.0).perturbative);
        CHECK(spectra::total_power(2.0, +1, 0.5, kPi / 2.0).perturbative);
    }
}

TEST_CASE("total power from a physical state uses its xi") {
    const PhysicalConstants pc;
    const double H = 0.02 / 1.5 / 1.0e3 * pc.schwinger_field();  // xi = 0.02 at gamma = 1e3
    const auto s = make_electron_state(1.0e3, H, 2.0, +1, 0.0);
    const auto b = spectra::total_power(s);
    CHECK(b.total == doctest::Approx(0.98).epsilon(1e-12));
}
