#include "spinrad/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "spinrad/bessel.hpp"
#include "spinrad/classical_radiation.hpp"
#include "spinrad/electron_state.hpp"
#include "spinrad/quadrature.hpp"
#include "spinrad/spectra.hpp"
#include "spinrad/spin_dynamics.hpp"

namespace spinrad::verify {

namespace {

constexpr double kPi = std::numbers::pi;

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

std::string fmt(const char* pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), pattern, args...);
    return std::string(buf);
}

std::vector<double> closure_g_values(double extra_g) {
    std::vector<double> gs = {1.0, 2.0, 2.00232, 4.0};
    bool found = false;
    for (double g : gs) {
        if (std::abs(g - extra_g) < 1e-15) found = true;
    }
    if (!found) gs.push_back(extra_g);
    return gs;
}

// --- criterion 1: spectral closure -----------------------------------------

void check_spectral_closure(std::vector<CheckResult>& out, double extra_g) {
    k13_tail(1.0);  // warm the tail cache so per-case timing is steady state
    for (double g : closure_g_values(extra_g)) {
        for (auto ch : {spectra::Channel::sigma, spectra::Channel::pi}) {
            const double t0 = now_seconds();
            const auto r = spectra::integrated_correction(g, ch, spectra::Domain::spectral);
            const double dt = now_seconds() - t0;
            const double tol =
                std::abs(r.closure_target) > 1e-9 ? 1e-6 * std::abs(r.closure_target) : 1e-9;
            const bool ok = std::abs(r.value - r.closure_target) <= tol && dt < 1.0;
            CheckResult c;
            c.id = fmt("1 spectral closure %s g=%.5g", ch == spectra::Channel::sigma ? "sigma" : "pi", g);
            c.detail = fmt("integral=%.9f target=%.9f |diff|=%.2e runtime=%.3fs", r.value,
                           r.closure_target, std::abs(r.value - r.closure_target), dt);
            c.passed = ok;
            c.seconds = dt;
            out.push_back(c);
        }
    }
}

// --- criterion 2: angular pi closure ----------------------------------------

void check_angular_pi(std::vector<CheckResult>& out, double extra_g) {
    for (double g : closure_g_values(extra_g)) {
        const double t0 = now_seconds();
        const auto r = spectra::integrated_correction(g, spectra::Channel::pi,
                                                      spectra::Domain::angular);
        const double beta_oracle = (35.0 / 32.0) * (0.5 * g - 1.0) * (16.0 / 105.0);
        const double tol =
            std::abs(r.closure_target) > 1e-9 ? 1e-6 * std::abs(r.closure_target) : 1e-9;
        CheckResult c;
        c.id = fmt("2 angular closure pi g=%.5g", g);
        c.detail = fmt("integral=%.9f target=%.9f beta-oracle=%.9f", r.value, r.closure_target,
                       beta_oracle);
        c.passed = std::abs(r.value - r.closure_target) <= tol &&
                   std::abs(r.value - beta_oracle) <= tol;
        c.seconds = now_seconds() - t0;
        out.push_back(c);
    }
}

// --- criterion 3: documented angular sigma discrepancy ----------------------

void check_angular_sigma_finding(std::vector<CheckResult>& out, double extra_g) {
    for (double g : closure_g_values(extra_g)) {
        const double t0 = now_seconds();
        const auto r = spectra::integrated_correction(g, spectra::Channel::sigma,
                                                      spectra::Domain::angular);
        const double beta_oracle = spectra::angular_sigma_beta_value(g);
        const bool matches_oracle = std::abs(r.value - beta_oracle) <= 1e-6;
        // the mismatch against the total-power coefficient is the expected finding
        const bool mismatch_present = std::abs(r.value - r.closure_target) > 1e-3;
        CheckResult c;
        c.id = fmt("3 angular sigma expected mismatch g=%.5g", g);
        c.detail = fmt("integral=%.9f beta-oracle=%.9f power-coefficient=%.9f (known inconsistency)",
                       r.value, beta_oracle, r.closure_target);
        c.passed = matches_oracle && mismatch_present && !r.matches_closure;
        c.seconds = now_seconds() - t0;
        out.push_back(c);
    }
}

// --- criteria 4, 5: total power identities ----------------------------------

void check_total_power(std::vector<CheckResult>& out) {
    const double t0 = now_seconds();
    bool ok = true;
    std::string detail;
    for (int zeta : {+1, -1}) {
        const auto b = spectra::total_power(2.0, zeta, 0.01, 0.0);
        const double expect = 1.0 - zeta * 0.01;
        ok = ok && std::abs(b.total - expect) <= 1e-12;
        ok = ok && b.main_sigma == 7.0 / 8.0 && b.main_pi == 1.0 / 8.0;
        if (zeta == 1) detail = fmt("total=%.15f expected=%.15f sigma/pi=%g/%g", b.total, expect,
                                    b.main_sigma, b.main_pi);
    }
    CheckResult c4;
    c4.id = "4 total power identity g=2 nu=0";
    c4.detail = detail;
    c4.passed = ok;
    c4.seconds = now_seconds() - t0;
    out.push_back(c4);

    const auto b = spectra::total_power(2.0, +1, 0.05, kPi / 2.0);
    CheckResult c5;
    c5.id = "5 correction vanishes at nu=pi/2";
    c5.detail = fmt("correction=%.3e total=%.15f", b.spin_factor * (b.corr_sigma + b.corr_pi),
                    b.total);
    c5.passed = std::abs(b.total - 1.0) <= 1e-12 &&
                std::abs(b.spin_factor * (b.corr_sigma + b.corr_pi)) <= 1e-12;
    c5.seconds = 0.0;
    out.push_back(c5);
}

// --- criterion 6: closed-form mixed power -----------------------------------

void check_closed_form(std::vector<CheckResult>& out) {
    const double t0 = now_seconds();
    bool ok = true;
    std::string detail;
    for (double g : {2.0, 2.00232}) {
        for (int zeta : {+1, -1}) {
            const ElectronState s = make_electron_state(1.0e7, 1.0e3, g, zeta, 0.0);
            const double generic = radiation::mixed_power_ratio_closed_form(
                s, radiation::ChargeConvention::generic_positive);
            const double electron = radiation::mixed_power_ratio_closed_form(
                s, radiation::ChargeConvention::electron);
            const double target = -(zeta / 3.0) * (0.5 * g);
            ok = ok && std::abs(generic - target) <= 1e-12;
            ok = ok && std::abs(electron + target) <= 1e-12;
            if (g == 2.0 && zeta == 1) {
                detail = fmt("generic=%.15f target=%.15f electron=%.15f", generic, target, electron);
            }
        }
    }
    CheckResult c;
    c.id = "6 closed-form mixed power -(zeta/3)(g/2)";
    c.detail = detail;
    c.passed = ok;
    c.seconds = now_seconds() - t0;
    out.push_back(c);
}

// --- criterion 7: solid-angle cross-check -----------------------------------

void check_angular_integration(std::vector<CheckResult>& out) {
    const double t0 = now_seconds();
    bool ok = true;
    std::string detail;
    for (double gamma : {5.0, 20.0}) {
        const ElectronState s = make_electron_state(gamma, 1.0e3, 2.0, +1, 0.0);
        const radiation::OrbitState os = radiation::orbit(s, 0.0);
        const auto anchor = radiation::charge_power_angular(os);
        const double lienard = radiation::charge_power_lienard(os);
        const double anchor_err = std::abs(anchor.power / lienard - 1.0);
        const auto mixed = radiation::mixed_power_angular(os);
        const double closed = radiation::mixed_power_closed_form(os);
        const double mixed_err = std::abs(mixed.power / closed - 1.0);
        ok = ok && anchor.converged && mixed.converged && anchor_err <= 1e-6 && mixed_err <= 1e-4;
        detail += fmt("[gamma=%g anchor_err=%.2e mixed_err=%.2e order=%d] ", gamma, anchor_err,
                      mixed_err, mixed.theta_order);
    }
    const double dt = now_seconds() - t0;
    ok = ok && dt < 30.0;
    CheckResult c;
    c.id = "7 solid-angle quadrature vs closed form";
    c.detail = detail + fmt("runtime=%.1fs", dt);
    c.passed = ok;
    c.seconds = dt;
    out.push_back(c);
}

// --- criterion 8: Thomas interaction energy vanishes ------------------------

void check_thomas_energy(std::vector<CheckResult>& out) {
    const double t0 = now_seconds();
    std::mt19937 rng(20240817u);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::uniform_real_distribution<double> mag(0.05, 0.95);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        Vec3 dir{uni(rng), uni(rng), uni(rng)};
        while (dir.norm() < 1e-3) dir = Vec3{uni(rng), uni(rng), uni(rng)};
        const Vec3 beta = mag(rng) * dir.normalized();
        const double gamma = 1.0 / std::sqrt(1.0 - dot(beta, beta));
        Vec3 zdir{uni(rng), uni(rng), uni(rng)};
        while (zdir.norm() < 1e-3) zdir = Vec3{uni(rng), uni(rng), uni(rng)};
        const AntisymTensor4 Pi = spin::spin_tensor_from_rest(zdir.normalized(), beta, gamma);
        const double c = kConstants.c;
        const FourVector v = four_vector(gamma * c, gamma * c * beta);
        // arbitrary four-acceleration; orthogonality to v is not required
        const FourVector w = four_vector(uni(rng), Vec3{uni(rng), uni(rng), uni(rng)}) * (c * c);
        const auto eff = spin::effective_field(2.0, spin::field_tensor(Vec3{}, Vec3{0, 0, 1.0}),
                                               v, w, -kConstants.e0);
        const double u = spin::interaction_energy(kConstants.bohr_magneton(), eff.thomas, Pi, gamma);
        const double scale = kConstants.bohr_magneton() / (2.0 * gamma) *
                             std::max(1.0, eff.thomas.max_abs() * Pi.max_abs());
        worst = std::max(worst, std::abs(u) / scale);
    }
    CheckResult c;
    c.id = "8 Thomas interaction energy vanishes";
    c.detail = fmt("1000 random states, worst |U|/scale = %.2e", worst);
    c.passed = worst <= 1e-12;
    c.seconds = now_seconds() - t0;
    out.push_back(c);
}

// --- criterion 9: precession suite ------------------------------------------

void check_precession(std::vector<CheckResult>& out) {
    const double t0 = now_seconds();
    bool ok = true;
    std::string detail;

    // (a) rotation angle over 10 periods of the orbit's Omega_L + Omega_Th,
    //     spin starting perpendicular to the total rotation axis
    {
        const ElectronState s = make_electron_state(10.0, 1.0e4, 2.0, +1, 0.0);
        const auto os = radiation::orbit(s, 0.0);
        const Vec3 omega{0.0, 0.0, os.omega_spin};
        const double T = 2.0 * kPi / std::abs(os.omega_spin);
        const spin::SpinVectorRest z0{Vec3{1.0, 0.0, 0.0}};
        const auto zf = spin::precess(z0, [&](double) { return omega; }, 10.0 * T, T / 1000.0);
        // accumulated rotation angle: 10 periods + residual in-plane angle
        const double sense = (os.omega_spin > 0.0) ? 1.0 : -1.0;
        const double residual = sense * std::atan2(zf.v.y, zf.v.x);
        const double angle = 10.0 * 2.0 * kPi + residual;
        const double expect = std::abs(os.omega_spin) * 10.0 * T;
        const double rel = std::abs(angle - expect) / expect;
        ok = ok && rel <= 1e-6;
        detail += fmt("[angle rel err=%.2e] ", rel);
    }
    // (b) norm drift over 100 periods
    {
        const Vec3 omega{0.0, 0.0, 3.0e8};
        const double T = 2.0 * kPi / omega.z;
        const spin::SpinVectorRest z0{Vec3{1.0, 0.0, 0.0}};
        const auto zf = spin::precess(z0, [&](double) { return omega; }, 100.0 * T, T / 1000.0);
        const double drift = std::abs(1.0 - zf.norm());
        ok = ok && drift < 1e-9;
        detail += fmt("[norm drift=%.2e] ", drift);
    }
    // (c) Thomas frequency nonrelativistic limit
    {
        const Vec3 beta{1.0e-5, 0.0, 0.0};
        const Vec3 accel{0.0, 1.0e10, 0.0};
        const double gamma = 1.0 / std::sqrt(1.0 - dot(beta, beta));
        const Vec3 full = spin::omega_thomas(beta, accel, gamma);
        const Vec3 limit = (-0.5 / kConstants.c) * cross(beta, accel);
        const double rel = (full - limit).norm() / limit.norm();
        ok = ok && rel <= 1e-9;
        detail += fmt("[thomas limit rel err=%.2e] ", rel);
    }
    // (d) tensor form vs vector form over one orbit period, g = 2
    {
        const ElectronState s = make_electron_state(10.0, 1.0e4, 2.0, +1, 1.0);
        const auto os0 = radiation::orbit(s, 0.0);
        const double T_lab = 2.0 * kPi / std::abs(os0.omega_rot);
        const double tau_final = T_lab / s.gamma;
        const AntisymTensor4 F = spin::field_tensor(Vec3{}, Vec3{0, 0, s.H});
        auto v_of = [&](double tau) { return radiation::orbit(s, tau).v; };
        auto w_of = [&](double tau) { return radiation::orbit(s, tau).w; };
        const Vec3 z0 = Vec3{std::sin(s.nu), 0.0, std::cos(s.nu)};
        const Vec3 beta0 = os0.v.spatial() * (1.0 / os0.v.t);
        const AntisymTensor4 pi0 = spin::spin_tensor_from_rest(z0, beta0, s.gamma);
        const AntisymTensor4 pif = spin::evolve_spin_tensor(
            pi0, s.g, F, v_of, w_of, os0.charge, tau_final, tau_final / 4000.0);
        const auto os1 = radiation::orbit(s, tau_final);
        const Vec3 beta1 = os1.v.spatial() * (1.0 / os1.v.t);
        const Vec3 z_tensor = spin::rest_spin_from_tensor(pif, beta1, s.gamma);

        const Vec3 omega_total{0.0, 0.0, os0.omega_spin};
        const auto z_vec = spin::precess({z0}, [&](double) { return omega_total; }, T_lab,
                                         T_lab / 4000.0);
        const double diff = (z_tensor - z_vec.v).norm();
        ok = ok && diff <= 1e-8;
        detail += fmt("[tensor-vs-vector diff=%.2e] ", diff);
    }

    CheckResult c;
    c.id = "9 precession suite";
    c.detail = detail;
    c.passed = ok;
    c.seconds = now_seconds() - t0;
    out.push_back(c);
}

// --- criterion 10: mass renormalization reconciliation ----------------------

void check_reconciliation(std::vector<CheckResult>& out) {
    const double t0 = now_seconds();
    bool ok = true;
    std::string detail;
    for (int zeta : {+1, -1}) {
        // pick H so that xi = 0.01 at gamma = 1e4
        const double gamma = 1.0e4;
        const double H = 0.01 / 1.5 / gamma * kConstants.schwinger_field();
        const ElectronState s = make_electron_state(gamma, H, 2.0, zeta, 0.0);
        const auto r = spin::reconcile_classical_quantum(s);
        ok = ok && std::abs(r.sum_ratio - r.total_ratio) <= 1e-12;
        ok = ok && std::abs(r.mass_ratio_tensor - r.mass_ratio_closed) <= 1e-12;
        if (zeta == 1) {
            detail = fmt("W'/W=%.12f emL/W=%.12f sum=%.12f total=%.12f M/m0=%.12f", r.w_prime_ratio,
                         r.w_eml_ratio, r.sum_ratio, r.total_ratio, r.mass_ratio_tensor);
        }
    }
    CheckResult c;
    c.id = "10 renormalization reconciliation g=2";
    c.detail = detail;
    c.passed = ok;
    c.seconds = now_seconds() - t0;
    out.push_back(c);
}

// --- criterion 11: xi representations ----------------------------------------

void check_xi_representations(std::vector<CheckResult>& out) {
    const double t0 = now_seconds();
    std::mt19937 rng(7u);
    std::uniform_real_distribution<double> lg(std::log(2.0), std::log(1.0e5));
    std::uniform_real_distribution<double> lh(std::log(1.0e-8), std::log(1.0e-1));
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double gamma = std::exp(lg(rng));
        const double H = std::exp(lh(rng)) * kConstants.schwinger_field();
        const auto v = xi(make_electron_state(gamma, H, 2.0, +1, 0.0));
        for (int a = 0; a < 5; ++a) {
            for (int b = a + 1; b < 5; ++b) {
                worst = std::max(worst, std::abs(v.representation[a] / v.representation[b] - 1.0));
            }
        }
    }
    CheckResult c;
    c.id = "11 xi representation agreement";
    c.detail = fmt("100 random states, worst pairwise rel diff = %.2e", worst);
    c.passed = worst <= 1e-12;
    c.seconds = now_seconds() - t0;
    out.push_back(c);
}

} // namespace

std::vector<CheckResult> run_all(const Options& opts) {
    std::vector<CheckResult> out;
    check_spectral_closure(out, opts.extra_g);
    check_angular_pi(out, opts.extra_g);
    check_angular_sigma_finding(out, opts.extra_g);
    check_total_power(out);
    check_closed_form(out);
    if (opts.run_angular_cross_check) check_angular_integration(out);
    check_thomas_energy(out);
    check_precession(out);
    check_reconciliation(out);
    check_xi_representations(out);
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        if (!r.passed) return false;
    }
    return true;
}

} // namespace spinrad::verify
