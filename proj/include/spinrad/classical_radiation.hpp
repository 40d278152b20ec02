#ifndef SPINRAD_CLASSICAL_RADIATION_HPP
#define SPINRAD_CLASSICAL_RADIATION_HPP

#include "spinrad/electron_state.hpp"
#include "spinrad/minkowski.hpp"

namespace spinrad::radiation {

// Charge/moment sign bundle.  "electron" is q = -e0, mu = -(g/2) mu0 and a
// counterclockwise orbit in H = (0,0,H); "generic_positive" is the opposite
// charge with q = +e0, mu = +(g/2) mu0 (clockwise orbit).  Both follow from
// the same force balance; only the signs differ.
enum class ChargeConvention { electron, generic_positive };

// Circular-orbit solution in a uniform field H = (0,0,H) at proper time tau,
// with the precessing rest-spin solution at tilt angle nu folded into the
// spin tensor and its proper-time derivatives.
struct OrbitState {
    double tau = 0.0;
    double gamma = 1.0;
    double charge = 0.0;        // signed charge [esu]
    double moment = 0.0;        // signed scalar moment [erg/G]
    double omega_rot = 0.0;     // signed orbital angular velocity [rad/s]
    double omega_spin = 0.0;    // signed spin precession rate about z [rad/s]
    double radius = 0.0;        // beta * rho [cm]
    FourVector r, v, w, w_dot;  // position, velocity, acceleration, jerk
    AntisymTensor4 Pi, Pi_dot, Pi_ddot;
    ElectronState state;
};

OrbitState orbit(const ElectronState& state, double tau,
                 ChargeConvention convention = ChargeConvention::electron,
                 double spin_phase = 0.0);

// Light-like observation geometry: r~ = R (1, n), plus the unit spacelike
// projection vector e used by the solid-angle momentum integral.  In the
// (+,-,-,-) signature used here, e = -c r~/(r~ . v) + v/c satisfies
// e.e = -1 and e.v = 0.
struct ObservationRay {
    Vec3 n;
    double R = 0.0;
    FourVector r_tilde;
    FourVector e;
};

ObservationRay make_ray(const OrbitState& os, const Vec3& n, double R);

// Radiation (far-zone) field tensor of the charge,
//   H_e = q { -r~^{[mu} w^{nu]} / (r~v)^2 + (r~w) r~^{[mu} v^{nu]} / (r~v)^3 }.
// Throws std::domain_error when (r~ . v) is degenerate.
AntisymTensor4 field_tensor_charge(const OrbitState& os, const ObservationRay& ray);

// Radiation field tensor of the moment.  With D_k = (d^k Pi/dtau^k)^{mu lambda} r~_lambda,
//   H_m = mu c { D2^{[mu} r~^{nu]} / (r~v)^3
//              - [ 3 (r~w) D1^{[mu} r~^{nu]} + (r~ w_dot) D0^{[mu} r~^{nu]} ] / (r~v)^4
//              + 3 (r~w)^2 D0^{[mu} r~^{nu]} / (r~v)^5 }.
// The (r~v) powers are one higher than a widespread variant of this formula;
// dimensional analysis and the 1/R far-zone scaling force this reading, and
// the solid-angle cross-check against the closed form confirms it.
AntisymTensor4 field_tensor_moment(const OrbitState& os, const ObservationRay& ray);

// Cross (interference) energy-momentum density of two field tensors,
//   P^{mu rho} = -(1/4 pi) ( A^{mu nu} B_nu^rho + B^{mu nu} A_nu^rho
//                            + (1/2) g^{mu rho} A_{alpha beta} B^{alpha beta} ),
// written so that one half of the A = B case is the standard stress tensor.
Mat4 mixed_energy_momentum(const AntisymTensor4& a, const AntisymTensor4& b);

// Closed-form radiated four-momentum rate of the charge-moment cross term:
//   dP^mu/dtau = (2/3)(q mu / c^4) ( (Pi_ddot w)^mu
//                                    - (2/c^2) v^mu (w Pi_ddot w)
//                                    - (1/c^2) (Pi w)^mu (w.w) ).
FourVector mixed_rate_closed_form(const OrbitState& os);

// Scalar mixed power W_em = (c/gamma) dP^0/dtau [erg/s].
double mixed_power_closed_form(const OrbitState& os);

// W_em normalized by xi * W_SR.  In the ultrarelativistic regime this tends
// to -(zeta/3)(g/2) cos(nu) for the generic_positive convention and to
// +(zeta/3)(g/2) cos(nu) for the electron; at finite gamma the exact orbit
// carries an extra factor beta^2 (gamma^2 beta^2 - 1)/gamma^2.
double mixed_power_ratio_closed_form(const ElectronState& state, ChargeConvention convention);

// Orbit-phase and spin-phase averaged ratio (identical to the instantaneous
// value for nu = 0 or pi).
double mixed_power_ratio_averaged(const ElectronState& state, ChargeConvention convention);

// Solid-angle integration dP^mu/dtau = closed integral of R^2 P^{mu nu} e_nu dOmega
// by product quadrature: Gauss-Legendre in cos(theta), trapezoid in phi,
// order doubling until the power component settles.
struct AngularIntegration {
    FourVector rate;
    double power = 0.0;        // (c/gamma) rate.t
    int theta_order = 0;
    long evaluations = 0;
    double convergence = 0.0;  // last relative change of the power
    bool converged = false;
};

AngularIntegration mixed_power_angular(const OrbitState& os, double rel_tol = 1e-5,
                                       int max_theta_order = 4096);

// Same machinery applied to the charge-charge stress tensor; anchors the
// integrator against the Lienard power.
AngularIntegration charge_power_angular(const OrbitState& os, double rel_tol = 1e-7,
                                        int max_theta_order = 4096);

// Lienard power of the charge from the orbit: the energy component of
// dP^mu/dtau = -(2 q^2 / 3 c^5)(w.w) v^mu, which for circular motion is
// (2 q^2 / 3 c^3) gamma^4 a^2.
double charge_power_lienard(const OrbitState& os);

} // namespace spinrad::radiation

#endif
