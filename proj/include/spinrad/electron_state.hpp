#ifndef SPINRAD_ELECTRON_STATE_HPP
#define SPINRAD_ELECTRON_STATE_HPP

#include <array>

#include "spinrad/constants.hpp"

namespace spinrad {

// Kinematic and spin configuration of an electron on a circular orbit in a
// uniform magnetic field.
//
// Convention: rho and omega0 follow the ultrarelativistic definitions
//   rho = m0 c^2 gamma / (e0 H),   omega0 = e0 H / (m0 c gamma),
// so rho * omega0 = c exactly.  omega0 is the exact relativistic cyclotron
// frequency; the exact orbit radius is beta * rho (see orbit_radius()), and
// orbit_radius * omega0 = beta c holds identically.
struct ElectronState {
    double gamma = 0.0;   // Lorentz factor, > 1
    double H = 0.0;       // magnetic field strength [G], > 0
    double g = 2.0;       // gyromagnetic factor
    int zeta = +1;        // spin orientation sign, +1 or -1
    double nu = 0.0;      // angle between spin and field [rad]

    // derived
    double beta = 0.0;    // |v|/c
    double rho = 0.0;     // m0 c^2 gamma/(e0 H) [cm]
    double omega0 = 0.0;  // e0 H/(m0 c gamma) [rad/s]

    PhysicalConstants constants{};

    double orbit_radius() const { return beta * rho; }
};

// Validates inputs and fills the derived quantities.
// Throws std::invalid_argument on gamma <= 1, H <= 0 or zeta not in {+1,-1}.
ElectronState make_electron_state(double gamma, double H, double g, int zeta, double nu,
                                  const PhysicalConstants& pc = kConstants);

// The invariant quantum parameter xi in its five equivalent representations:
//   [0] (3/2) hbar gamma^2 / (m0 c rho)
//   [1] (3/2) (hbar omega0 / m0 c^2) gamma^2
//   [2] (3/2) (H / H*) gamma
//   [3] 3 (mu0 / e0 rho) gamma^2
//   [4] (3/2) (hbar / m0 c^3) sqrt(w_mu w^mu), with w from the circular orbit
//       in the rho*omega0 = c convention (|w| = gamma^2 omega0^2 rho)
// All five agree pairwise to machine accuracy.
struct XiValue {
    double value = 0.0;  // canonical: representation [2]
    std::array<double, 5> representation{};
};

XiValue xi(const ElectronState& state);

// Synchrotron power of the charge, W_SR = (2/3)(e0^2 c / rho^2) gamma^4 [erg/s].
// This rho-based form is the canonical normalization used by every ratio in
// the library.
double w_sr(const ElectronState& state);

// The equivalent frequency form (2/3)(e0^2 omega0^2 / c) gamma^4, kept
// separate so the equality of the two printed forms can be asserted.
double w_sr_omega_form(const ElectronState& state);

} // namespace spinrad

#endif
