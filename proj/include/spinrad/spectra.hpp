#ifndef SPINRAD_SPECTRA_HPP
#define SPINRAD_SPECTRA_HPP

#include "spinrad/electron_state.hpp"

namespace spinrad::spectra {

enum class Channel { sigma, pi };
enum class Domain { spectral, angular };

// First-order spin correction to the spectral distribution, per polarization
// channel, as a function of the dimensionless frequency y = (2/3) rho w~/(c gamma^3).
// Returned in units of W_SR * zeta * xi * cos(nu).
//   sigma: (9 sqrt3 / 16 pi) { (g/2)(2/3) y T(y) - 2 y [ (1/3) T(y) + y K_{1/3}(y) ] }
//   pi:    (3 sqrt3 /  8 pi) (g/2 - 1) y T(y)
// with T(y) = int_y^inf K_{1/3}(x) dx.  Throws std::domain_error for y <= 0.
double spectral_density(double y, double g, Channel ch);

// Angular counterpart over chi = gamma * psi (even in chi), same units:
//   sigma: (35/32) { (g/2) chi^2 - (1 + chi^2) } (1 + chi^2)^{-5/2}
//   pi:    (35/32) (g/2 - 1) chi^2 (1 + chi^2)^{-9/2}
double angular_density(double chi, double g, Channel ch);

// One grid point of a correction distribution, both polarization channels.
struct DensitySample {
    double abscissa = 0.0;       // y for spectral samples, chi for angular ones
    double sigma_density = 0.0;  // units of W_SR zeta xi cos(nu)
    double pi_density = 0.0;
};

DensitySample sample_spectral(double y, double g);
DensitySample sample_angular(double chi, double g);

// Closed Beta-function value of the angular sigma integral,
// (35/32) ((g/2)(2/3) - 2).  It does NOT coincide with the sigma closure
// coefficient (g/2 - 7)/6 of the total power; integrated_correction exposes
// both numbers so the inconsistency stays visible.
double angular_sigma_beta_value(double g);

struct IntegralCheck {
    double value = 0.0;            // quadrature of the density
    double closure_target = 0.0;   // coefficient expected from the total power
    bool matches_closure = false;  // |value - target| within tolerance
    double tolerance = 0.0;
    double quadrature_error = 0.0;
    long evaluations = 0;
};

// Integrates the requested correction density over its full domain and
// compares with the total-power coefficient ((g/2-7)/6 for sigma,
// (g/2-1)/6 for pi).  The spectral domain closes for both channels; the
// angular sigma channel does not (see angular_sigma_beta_value).
IntegralCheck integrated_correction(double g, Channel ch, Domain domain, double tol = 1e-9);

// Total radiated power relative to W_SR, split by polarization and by the
// Larmor/Thomas attribution of the first-order correction.
struct PowerBreakdown {
    double main_sigma = 0.0;       // 7/8
    double main_pi = 0.0;          // 1/8
    double corr_sigma = 0.0;       // (g/2 - 7)/6, multiplies spin_factor
    double corr_pi = 0.0;          // (g/2 - 1)/6, multiplies spin_factor
    double spin_factor = 0.0;      // zeta * xi * cos(nu)
    double em_l = 0.0;             // spin_factor * (g/2)/3
    double em_th = 0.0;            // spin_factor * (-4/3)
    double total = 0.0;            // 1 + spin_factor * (g/2 - 4)/3
    bool perturbative = true;      // xi |cos nu| small enough for first order
};

PowerBreakdown total_power(double g, int zeta, double xi_value, double nu);
PowerBreakdown total_power(const ElectronState& state);

} // namespace spinrad::spectra

#endif
