#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "spinrad/classical_radiation.hpp"
#include "spinrad/spin_dynamics.hpp"

using namespace spinrad;

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 random_unit(std::mt19937& rng) {
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    Vec3 v{uni(rng), uni(rng), uni(rng)};
    while (v.norm() < 1e-3) v = Vec3{uni(rng), uni(rng), uni(rng)};
    return v.normalized();
}

} // namespace

TEST_CASE("spin tensor in the rest frame") {
    const auto t = spin::spin_tensor_from_rest(Vec3{0, 0, 1}, Vec3{}, 1.0);
    CHECK(t.polar_part().norm() == 0.0);
    CHECK((t.axial_part() - Vec3{0, 0, 1}).norm() == 0.0);
}

TEST_CASE("spin tensor for spin orthogonal to the velocity") {
    const double beta = 0.6, gamma = 1.25;
    const auto t = spin::spin_tensor_from_rest(Vec3{0, 0, 1}, Vec3{beta, 0, 0}, gamma);
    CHECK((t.axial_part() - Vec3{0, 0, gamma}).norm() <= 1e-15);
    CHECK((t.polar_part() - gamma * beta * Vec3{0, -1, 0}).norm() <= 1e-15);
}

TEST_CASE("spin tensor satisfies the orthogonality constraint") {
    std::mt19937 rng(31u);
    std::uniform_real_distribution<double> mag(0.01, 0.97);
    const double c = kConstants.c;
    for (int i = 0; i < 200; ++i) {
        const Vec3 beta = mag(rng) * random_unit(rng);
        const double gamma = 1.0 / std::sqrt(1.0 - dot(beta, beta));
        const auto t = spin::spin_tensor_from_rest(random_unit(rng), beta, gamma);
        const FourVector v = four_vector(gamma * c, gamma * c * beta);
        const FourVector pv = t.contract(v);
        const double scale = gamma * c * std::max(1.0, t.max_abs());
        for (int mu = 0; mu < 4; ++mu) CHECK(std::abs(pv[mu]) <= 1e-12 * scale);
    }
}

TEST_CASE("rest spin round-trips through the tensor") {
    std::mt19937 rng(32u);
    std::uniform_real_distribution<double> mag(0.01, 0.97);
    for (int i = 0; i < 100; ++i) {
        const Vec3 beta = mag(rng) * random_unit(rng);
        const double gamma = 1.0 / std::sqrt(1.0 - dot(beta, beta));
        const Vec3 zeta = random_unit(rng);
        const auto t = spin::spin_tensor_from_rest(zeta, beta, gamma);
        const Vec3 back = spin::rest_spin_from_tensor(t, beta, gamma);
        CHECK((back - zeta).norm() <= 1e-13);
    }
}

TEST_CASE("spin tensor rejects bad inputs") {
    CHECK_THROWS_AS((void)spin::spin_tensor_from_rest(Vec3{0, 0, 2}, Vec3{}, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)spin::spin_tensor_from_rest(Vec3{0, 0, 1}, Vec3{0.5, 0, 0}, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)spin::spin_tensor_from_rest(Vec3{0, 0, 1}, Vec3{1.2, 0, 0}, 2.0),
                    std::invalid_argument);
}

TEST_CASE("Larmor frequency limits") {
    const PhysicalConstants pc;
    const Vec3 H{0, 0, 250.0};
    SUBCASE("nonrelativistic limit") {
        const Vec3 w = spin::omega_larmor(2.0, Vec3{}, Vec3{}, H);
        const Vec3 expect = (pc.e0 * 2.0 / (2.0 * pc.m0 * pc.c)) * H;  // electron: -q = +e0
        CHECK((w - expect).norm() <= 1e-12 * expect.norm());
    }
    SUBCASE("transverse velocity leaves the field term alone") {
        const Vec3 w0 = spin::omega_larmor(2.0, Vec3{}, Vec3{}, H);
        const Vec3 w1 = spin::omega_larmor(2.0, Vec3{0.9, 0, 0}, Vec3{}, H);
        CHECK((w1 - w0).norm() <= 1e-12 * w0.norm());
    }
    SUBCASE("magnitude equals (g/2)(e0/m0 c gamma)|H0| for generic geometry") {
        std::mt19937 rng(77u);
        std::uniform_real_distribution<double> mag(0.05, 0.95);
        for (int i = 0; i < 50; ++i) {
            const Vec3 beta = mag(rng) * random_unit(rng);
            const double gamma = 1.0 / std::sqrt(1.0 - dot(beta, beta));
            const Vec3 E = 30.0 * random_unit(rng);
            const Vec3 B = 120.0 * random_unit(rng);
            const Vec3 w = spin::omega_larmor(2.0, beta, E, B);
            const auto rest = spin::rest_frame_fields(E, B, beta, gamma);
            const double expect = (0.5 * 2.0) * pc.e0 / (pc.m0 * pc.c * gamma) * rest.H0.norm();
            CHECK(w.norm() == doctest::Approx(expect).epsilon(1e-12));
        }
    }
}

TEST_CASE("Thomas frequency properties") {
    const PhysicalConstants pc;
    SUBCASE("acceleration parallel to the velocity gives no rotation") {
        const Vec3 beta{0.5, 0, 0};
        const Vec3 a{3e10, 0, 0};
        CHECK(spin::omega_thomas(beta, a, 1.0 / std::sqrt(0.75)).norm() == 0.0);
    }
    SUBCASE("low-velocity limit carries the 1/2 factor") {
        const Vec3 beta{1e-5, 0, 0};
        const Vec3 a{0, 1e10, 0};
        const double gamma = 1.0 / std::sqrt(1.0 - dot(beta, beta));
        const Vec3 full = spin::omega_thomas(beta, a, gamma);
        const Vec3 limit = (-0.5 / pc.c) * cross(beta, a);
        CHECK((full - limit).norm() <= 1e-9 * limit.norm());
    }
    SUBCASE("circular orbit: both printed forms coincide") {
        const double beta_mag = 0.8, gamma = 1.0 / 0.6;
        const Vec3 beta{beta_mag, 0, 0};
        const Vec3 H{0, 0, 400.0};
        const double q = -pc.e0;  // electron
        const Vec3 a = (q / (gamma * pc.m0)) * cross(beta, H);
        const Vec3 direct = spin::omega_thomas(beta, a, gamma);
        const auto rest = spin::rest_frame_fields(Vec3{}, H, beta, gamma);
        const Vec3 via_field = (-q / (pc.m0 * pc.c)) * (1.0 / (gamma + 1.0)) * cross(beta, rest.E0);
        CHECK((direct - via_field).norm() <= 1e-12 * direct.norm());
    }
}

TEST_CASE("precession of a spin aligned with the axis is a fixed point") {
    const Vec3 omega{0, 0, 2e7};
    const auto zf = spin::precess({Vec3{0, 0, 1}}, [&](double) { return omega; }, 1e-5, 1e-8);
    CHECK((zf.v - Vec3{0, 0, 1}).norm() <= 1e-14);
}

TEST_CASE("one full turn returns the spin to its start") {
    const Vec3 omega{0, 0, 3.0e8};
    const double T = 2.0 * kPi / omega.z;
    const auto zf = spin::precess({Vec3{1, 0, 0}}, [&](double) { return omega; }, T, T / 1000.0);
    CHECK((zf.v - Vec3{1, 0, 0}).norm() <= 1e-8);
}

TEST_CASE("norm drift and conserved axial component over 100 periods") {
    const Vec3 omega{0, 0, 3.0e8};
    const double T = 2.0 * kPi / omega.z;
    const Vec3 z0 = Vec3{std::sin(0.7), 0.0, std::cos(0.7)};
    const auto zf = spin::precess({z0}, [&](double) { return omega; }, 100.0 * T, T / 1000.0);
    CHECK(std::abs(1.0 - zf.norm()) < 1e-9);
    CHECK(std::abs(zf.v.z - z0.z) <= 1e-9);  // component along Omega is conserved
}

TEST_CASE("precess rejects bad step sizes and absurd step counts") {
    CHECK_THROWS_AS(
        (void)spin::precess({Vec3{1, 0, 0}}, [](double) { return Vec3{}; }, 1.0, 0.0),
        std::invalid_argument);
    CHECK_THROWS_AS(
        (void)spin::precess({Vec3{1, 0, 0}}, [](double) { return Vec3{}; }, 1.0e12, 1e-10),
        std::overflow_error);
}

TEST_CASE("Thomas interaction energy vanishes on the constraint surface") {
    std::mt19937 rng(64u);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::uniform_real_distribution<double> mag(0.05, 0.95);
    const double c = kConstants.c;
    for (int i = 0; i < 100; ++i) {
        const Vec3 beta = mag(rng) * random_unit(rng);
        const double gamma = 1.0 / std::sqrt(1.0 - dot(beta, beta));
        const auto Pi = spin::spin_tensor_from_rest(random_unit(rng), beta, gamma);
        const FourVector v = four_vector(gamma * c, gamma * c * beta);
        const FourVector w = four_vector(uni(rng), Vec3{uni(rng), uni(rng), uni(rng)}) * (c * c);
        const auto eff = spin::effective_field(2.0, spin::field_tensor(Vec3{}, Vec3{0, 0, 1}), v,
                                               w, -kConstants.e0);
        const double u =
            spin::interaction_energy(kConstants.bohr_magneton(), eff.thomas, Pi, gamma);
        const double scale = kConstants.bohr_magneton() *
                             std::max(1.0, eff.thomas.max_abs() * Pi.max_abs()) / (2.0 * gamma);
        CHECK(std::abs(u) <= 1e-12 * scale);
    }
}

TEST_CASE("Larmor interaction energy reduces to the rest-frame coupling") {
    const PhysicalConstants pc;
    const double g = 2.0;
    const double gamma = 8.0;
    const double beta_mag = std::sqrt(1.0 - 1.0 / (gamma * gamma));
    const Vec3 beta{beta_mag, 0, 0};
    const Vec3 Hf{0, 0, 5.0e3};
    const Vec3 zeta{0, 0, 1};

    const auto F = spin::field_tensor(Vec3{}, Hf);
    const FourVector v = four_vector(gamma * pc.c, gamma * pc.c * beta);
    const double q = -pc.e0;
    const FourVector w = (q / (pc.m0 * pc.c)) * F.contract(v);  // Lorentz force
    const auto eff = spin::effective_field(g, F, v, w, q);
    const auto Pi = spin::spin_tensor_from_rest(zeta, beta, gamma);
    const double mu = -(0.5 * g) * pc.bohr_magneton();  // electron total moment

    const double tensor_route = spin::interaction_energy(mu, eff.larmor, Pi, gamma);

    // -mu (zeta . {H - [beta,E] - (gamma/(gamma+1)) beta (beta.H)})
    const Vec3 bracket = Hf - (gamma / (gamma + 1.0)) * dot(beta, Hf) * beta;
    const double middle_form = -mu * dot(zeta, bracket);

    // -(mu/gamma)(zeta . H0)
    const auto rest = spin::rest_frame_fields(Vec3{}, Hf, beta, gamma);
    const double rest_form = -mu / gamma * dot(zeta, rest.H0);

    CHECK(tensor_route == doctest::Approx(middle_form).epsilon(1e-12));
    CHECK(tensor_route == doctest::Approx(rest_form).epsilon(1e-12));
    CHECK(tensor_route == doctest::Approx(-mu * Hf.z).epsilon(1e-12));  // = -mu H here

    // zero moment decouples
    CHECK(spin::interaction_energy(0.0, eff.larmor, Pi, gamma) == 0.0);

    // the Larmor energy scales with g/2
    const auto eff3 = spin::effective_field(3.0, F, v, w, q);
    CHECK(spin::interaction_energy(mu, eff3.larmor, Pi, gamma) ==
          doctest::Approx(1.5 * tensor_route).epsilon(1e-12));
}

TEST_CASE("renormalized mass ratio") {
    const PhysicalConstants pc;
    SUBCASE("closed-form example: zeta = +1, xi = 0.03 gives 1.01") {
        const double gamma = 1.0e3;
        const double H = 0.03 / 1.5 / gamma * pc.schwinger_field();
        const auto m = spin::renormalized_mass_ratio(make_electron_state(gamma, H, 2.0, +1, 0.0));
        CHECK(m.closed_form == doctest::Approx(1.01).epsilon(1e-12));
        CHECK(m.tensor_route == doctest::Approx(1.01).epsilon(1e-12));
    }
    SUBCASE("vanishing field leaves the mass untouched") {
        const auto m = spin::renormalized_mass_ratio(make_electron_state(10.0, 1e-10, 2.0, +1, 0.0));
        CHECK(m.closed_form == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("both routes agree for random states") {
        std::mt19937 rng(13u);
        std::uniform_real_distribution<double> lg(std::log(2.0), std::log(1e4));
        std::uniform_real_distribution<double> lh(std::log(1e-7), std::log(1e-2));
        for (int i = 0; i < 50; ++i) {
            const double gamma = std::exp(lg(rng));
            const double H = std::exp(lh(rng)) * pc.schwinger_field();
            const int zeta = (i % 2 == 0) ? +1 : -1;
            const auto m = spin::renormalized_mass_ratio(
                make_electron_state(gamma, H, 2.0, zeta, 0.0));
            CHECK(std::abs(m.tensor_route - m.closed_form) <= 1e-12);
        }
    }
}

TEST_CASE("mass renormalization reconciles the classical and corrected totals") {
    const PhysicalConstants pc;
    for (int zeta : {+1, -1}) {
        const double gamma = 1.0e4;
        const double H = 0.01 / 1.5 / gamma * pc.schwinger_field();
        const auto s = make_electron_state(gamma, H, 2.0, zeta, 0.0);
        const auto r = spin::reconcile_classical_quantum(s);
        CHECK(r.consistent);
        CHECK(r.w_prime_ratio == doctest::Approx(1.0 - zeta * 4.0 / 300.0).epsilon(1e-14));
        CHECK(r.sum_ratio == doctest::Approx(1.0 - zeta * 0.01).epsilon(1e-14));
        // first-order form vs the exact mass-ratio fourth power: O(xi^2)
        const double exact = std::pow(r.mass_ratio_closed, -4.0);
        CHECK(std::abs(exact - r.w_prime_ratio) <= 2.0 * 0.01 * 0.01);
    }
}

TEST_CASE("tensor and vector spin evolution agree for the Dirac electron") {
    const auto s = make_electron_state(5.0, 1.0e4, 2.0, +1, 0.8);
    const auto os0 = radiation::orbit(s, 0.0);
    const double T_lab = 2.0 * kPi / std::abs(os0.omega_rot);
    const double tau_final = T_lab / s.gamma;
    const auto F = spin::field_tensor(Vec3{}, Vec3{0, 0, s.H});
    auto v_of = [&](double tau) { return radiation::orbit(s, tau).v; };
    auto w_of = [&](double tau) { return radiation::orbit(s, tau).w; };
    const Vec3 z0{std::sin(s.nu), 0.0, std::cos(s.nu)};
    const Vec3 beta0 = os0.v.spatial() * (1.0 / os0.v.t);
    const auto pi0 = spin::spin_tensor_from_rest(z0, beta0, s.gamma);
    const auto pif = spin::evolve_spin_tensor(pi0, s.g, F, v_of, w_of, os0.charge, tau_final,
                                              tau_final / 2000.0);
    const auto os1 = radiation::orbit(s, tau_final);
    const Vec3 beta1 = os1.v.spatial() * (1.0 / os1.v.t);
    const Vec3 z_tensor = spin::rest_spin_from_tensor(pif, beta1, s.gamma);

    const Vec3 omega{0.0, 0.0, os0.omega_spin};
    const auto z_vec =
        spin::precess({z0}, [&](double) { return omega; }, T_lab, T_lab / 2000.0);
    CHECK((z_tensor - z_vec.v).norm() <= 1e-8);
}
