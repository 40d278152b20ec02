#include "spinrad/spin_dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinrad::spin {

AntisymTensor4 spin_tensor_from_rest(const Vec3& zeta, const Vec3& beta, double gamma) {
    const double zn = zeta.norm();
    if (std::abs(zn - 1.0) > 1e-9) {
        throw std::invalid_argument("spin_tensor_from_rest: |zeta| = " + std::to_string(zn) +
                                    " is not unit length");
    }
    const double b2 = dot(beta, beta);
    if (b2 >= 1.0) {
        throw std::invalid_argument("spin_tensor_from_rest: |beta| >= 1");
    }
    // beta^2 vs 1 - 1/gamma^2 stays well conditioned at large gamma, where a
    // direct gamma comparison would drown in the 1 - beta^2 cancellation.
    const double b2_from_gamma = 1.0 - 1.0 / (gamma * gamma);
    if (std::abs(b2 - b2_from_gamma) > 1e-9) {
        throw std::invalid_argument("spin_tensor_from_rest: gamma " + std::to_string(gamma) +
                                    " inconsistent with |beta|^2 = " + std::to_string(b2));
    }
    const Vec3 phi = gamma * cross(beta, zeta);
    const Vec3 pi = gamma * zeta - (gamma * gamma / (gamma + 1.0)) * dot(beta, zeta) * beta;
    return AntisymTensor4::from_polar_axial(phi, pi);
}

Vec3 rest_spin_from_tensor(const AntisymTensor4& Pi, const Vec3& beta, double gamma) {
    const Vec3 pi = Pi.axial_part();
    return (1.0 / gamma) * pi + (gamma / (gamma + 1.0)) * dot(beta, pi) * beta;
}

AntisymTensor4 field_tensor(const Vec3& E, const Vec3& H) {
    return AntisymTensor4::from_polar_axial(-1.0 * E, H);
}

EffectiveField effective_field(double g, const AntisymTensor4& F, const FourVector& v,
                               const FourVector& w, double charge, const PhysicalConstants& pc) {
    const double c2 = pc.c * pc.c;
    // (v_lambda F^{lambda rho}) = -F^{rho lambda} v_lambda
    const FourVector fv = F.contract(v);  // F^{mu nu} v_nu
    EffectiveField eff;
    AntisymTensor4 inner{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            // v^{[mu} (v_lambda F^{lambda rho]}) with v_lambda F^{lambda rho} = -fv^rho
            inner.m[i][j] = (v[i] * (-fv[j]) - v[j] * (-fv[i])) / c2;
        }
    }
    eff.larmor = (0.5 * g) * (F + inner);
    AntisymTensor4 thomas{};
    const double pref = pc.m0 / (charge * pc.c);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            thomas.m[i][j] = pref * (v[i] * w[j] - v[j] * w[i]);
        }
    }
    eff.thomas = thomas;
    return eff;
}

AntisymTensor4 spin_tensor_rate(const AntisymTensor4& heff, const AntisymTensor4& Pi,
                                double charge, const PhysicalConstants& pc) {
    const Mat4 hp = contract_adjacent(heff, Pi);  // Heff^{mu nu} Pi_nu^rho
    const double kappa = charge / (pc.m0 * pc.c);
    AntisymTensor4 rate{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            rate.m[i][j] = kappa * (hp.m[i][j] - hp.m[j][i]);
        }
    }
    return rate;
}

Vec3 omega_larmor(double g, const Vec3& beta, const Vec3& E, const Vec3& H,
                  const PhysicalConstants& pc) {
    const double q = -pc.e0;  // electron
    const double b2 = dot(beta, beta);
    if (b2 >= 1.0) {
        throw std::invalid_argument("omega_larmor: |beta| >= 1");
    }
    const double gamma = 1.0 / std::sqrt(1.0 - b2);
    const Vec3 bracket = H - cross(beta, E) - (gamma / (gamma + 1.0)) * dot(beta, H) * beta;
    return (-q * g / (2.0 * pc.m0 * pc.c)) * bracket;
}

Vec3 omega_thomas(const Vec3& beta, const Vec3& accel, double gamma, const PhysicalConstants& pc) {
    return (-1.0 / pc.c) * (gamma * gamma / (gamma + 1.0)) * cross(beta, accel);
}

RestFrameFields rest_frame_fields(const Vec3& E, const Vec3& H, const Vec3& beta, double gamma) {
    const double k = gamma * gamma / (gamma + 1.0);
    RestFrameFields f;
    f.H0 = gamma * (H - cross(beta, E)) - k * dot(beta, H) * beta;
    f.E0 = gamma * (E + cross(beta, H)) - k * dot(beta, E) * beta;
    return f;
}

SpinVectorRest precess(const SpinVectorRest& spin0, const std::function<Vec3(double)>& omega,
                       double t_final, double dt) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("precess: dt must be positive, got " + std::to_string(dt));
    }
    const double steps_exact = t_final / dt;
    if (steps_exact > 2147483647.0) {
        throw std::overflow_error("precess: step count overflow (" + std::to_string(steps_exact) +
                                  " steps)");
    }
    const long n = static_cast<long>(std::llround(steps_exact));
    auto deriv = [&omega](double t, const Vec3& z) { return cross(omega(t), z); };
    Vec3 z = spin0.v;
    double t = 0.0;
    for (long i = 0; i < n; ++i) {
        const Vec3 k1 = deriv(t, z);
        const Vec3 k2 = deriv(t + 0.5 * dt, z + 0.5 * dt * k1);
        const Vec3 k3 = deriv(t + 0.5 * dt, z + 0.5 * dt * k2);
        const Vec3 k4 = deriv(t + dt, z + dt * k3);
        z += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += dt;
    }
    return {z};
}

AntisymTensor4 evolve_spin_tensor(const AntisymTensor4& pi0, double g, const AntisymTensor4& F,
                                  const std::function<FourVector(double)>& v_of_tau,
                                  const std::function<FourVector(double)>& w_of_tau,
                                  double charge, double tau_final, double dtau,
                                  const PhysicalConstants& pc) {
    if (!(dtau > 0.0)) {
        throw std::invalid_argument("evolve_spin_tensor: dtau must be positive");
    }
    auto rate = [&](double tau, const AntisymTensor4& pi) {
        const EffectiveField eff = effective_field(g, F, v_of_tau(tau), w_of_tau(tau), charge, pc);
        return spin_tensor_rate(eff.total(), pi, charge, pc);
    };
    const long n = static_cast<long>(std::llround(tau_final / dtau));
    AntisymTensor4 pi = pi0;
    double tau = 0.0;
    for (long i = 0; i < n; ++i) {
        const AntisymTensor4 k1 = rate(tau, pi);
        const AntisymTensor4 k2 = rate(tau + 0.5 * dtau, pi + 0.5 * dtau * k1);
        const AntisymTensor4 k3 = rate(tau + 0.5 * dtau, pi + 0.5 * dtau * k2);
        const AntisymTensor4 k4 = rate(tau + dtau, pi + dtau * k3);
        pi = pi + (dtau / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        tau += dtau;
    }
    return pi;
}

double interaction_energy(double mu, const AntisymTensor4& field, const AntisymTensor4& Pi,
                          double gamma) {
    return -(mu / (2.0 * gamma)) * double_contract(field, Pi);
}

MassRatio renormalized_mass_ratio(const ElectronState& state) {
    const PhysicalConstants& pc = state.constants;
    const double gamma = state.gamma;
    // field-aligned spin solution: zeta along z, beta in the orbit plane
    const Vec3 zvec{0.0, 0.0, static_cast<double>(state.zeta)};
    const Vec3 beta{state.beta, 0.0, 0.0};
    const AntisymTensor4 Pi = spin_tensor_from_rest(zvec, beta, gamma);
    const AntisymTensor4 F = field_tensor(Vec3{}, Vec3{0.0, 0.0, state.H});
    const double mu = -pc.bohr_magneton();
    const double contraction = double_contract(F, Pi);
    MassRatio r;
    r.tensor_route = 1.0 - mu / (2.0 * pc.m0 * pc.c * pc.c) * contraction;
    r.closed_form = 1.0 + state.zeta * xi(state).value / 3.0;
    return r;
}

ReconcileReport reconcile_classical_quantum(const ElectronState& state) {
    const double xiv = xi(state).value;
    const double zx = state.zeta * xiv;
    ReconcileReport r;
    r.w_prime_ratio = 1.0 - (4.0 / 3.0) * zx;
    r.w_eml_ratio = (0.5 * state.g) * zx / 3.0;
    r.sum_ratio = r.w_prime_ratio + r.w_eml_ratio;
    r.total_ratio = 1.0 - zx;
    const MassRatio m = renormalized_mass_ratio(state);
    r.mass_ratio_tensor = m.tensor_route;
    r.mass_ratio_closed = m.closed_form;
    r.consistent = std::abs(r.sum_ratio - r.total_ratio) <= 1e-12;
    return r;
}

} // namespace spinrad::spin
