#include "spinrad/electron_state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinrad {

ElectronState make_electron_state(double gamma, double H, double g, int zeta, double nu,
                                  const PhysicalConstants& pc) {
    if (!(gamma > 1.0)) {
        throw std::invalid_argument("make_electron_state: gamma must exceed 1, got " +
                                    std::to_string(gamma));
    }
    if (!(H > 0.0)) {
        throw std::invalid_argument("make_electron_state: field must be positive, got " +
                                    std::to_string(H));
    }
    if (zeta != 1 && zeta != -1) {
        throw std::invalid_argument("make_electron_state: zeta must be +1 or -1, got " +
                                    std::to_string(zeta));
    }
    if (!std::isfinite(nu)) {
        throw std::invalid_argument("make_electron_state: nu must be finite");
    }
    ElectronState s;
    s.gamma = gamma;
    s.H = H;
    s.g = g;
    s.zeta = zeta;
    s.nu = nu;
    s.constants = pc;
    s.beta = std::sqrt(1.0 - 1.0 / (gamma * gamma));
    s.rho = pc.m0 * pc.c * pc.c * gamma / (pc.e0 * H);
    s.omega0 = pc.e0 * H / (pc.m0 * pc.c * gamma);
    return s;
}

XiValue xi(const ElectronState& state) {
    const PhysicalConstants& pc = state.constants;
    const double gamma2 = state.gamma * state.gamma;
    XiValue v;
    v.representation[0] = 1.5 * pc.hbar * gamma2 / (pc.m0 * pc.c * state.rho);
    v.representation[1] = 1.5 * (pc.hbar * state.omega0 / (pc.m0 * pc.c * pc.c)) * gamma2;
    v.representation[2] = 1.5 * (state.H / pc.schwinger_field()) * state.gamma;
    v.representation[3] = 3.0 * (pc.bohr_magneton() / (pc.e0 * state.rho)) * gamma2;
    // proper acceleration of the rho*omega0 = c orbit: |w| = gamma^2 omega0^2 rho
    const double w_mag = gamma2 * state.omega0 * state.omega0 * state.rho;
    v.representation[4] = 1.5 * (pc.hbar / (pc.m0 * pc.c * pc.c * pc.c)) * w_mag;
    v.value = v.representation[2];
    return v;
}

double w_sr(const ElectronState& state) {
    const PhysicalConstants& pc = state.constants;
    const double g4 = state.gamma * state.gamma * state.gamma * state.gamma;
    return (2.0 / 3.0) * pc.e0 * pc.e0 * pc.c * g4 / (state.rho * state.rho);
}

double w_sr_omega_form(const ElectronState& state) {
    const PhysicalConstants& pc = state.constants;
    const double g4 = state.gamma * state.gamma * state.gamma * state.gamma;
    return (2.0 / 3.0) * pc.e0 * pc.e0 * state.omega0 * state.omega0 * g4 / pc.c;
}

} // namespace spinrad
