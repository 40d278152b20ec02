#include "spinrad/spectra.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "spinrad/bessel.hpp"
#include "spinrad/quadrature.hpp"

namespace spinrad::spectra {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

} // namespace

double spectral_density(double y, double g, Channel ch) {
    if (!(y > 0.0)) {
        throw std::domain_error("spectral_density: y must be positive, got " + std::to_string(y));
    }
    const double tail = k13_tail(y);
    if (ch == Channel::pi) {
        return (3.0 * kSqrt3 / (8.0 * kPi)) * (0.5 * g - 1.0) * y * tail;
    }
    const double k = bessel_k(1.0 / 3.0, y);
    return (9.0 * kSqrt3 / (16.0 * kPi)) *
           ((0.5 * g) * (2.0 / 3.0) * y * tail - 2.0 * y * (tail / 3.0 + y * k));
}

double angular_density(double chi, double g, Channel ch) {
    const double c2 = chi * chi;
    const double base = 1.0 + c2;
    if (ch == Channel::pi) {
        return (35.0 / 32.0) * (0.5 * g - 1.0) * c2 * std::pow(base, -4.5);
    }
    return (35.0 / 32.0) * ((0.5 * g) * c2 - base) * std::pow(base, -2.5);
}

DensitySample sample_spectral(double y, double g) {
    return {y, spectral_density(y, g, Channel::sigma), spectral_density(y, g, Channel::pi)};
}

DensitySample sample_angular(double chi, double g) {
    return {chi, angular_density(chi, g, Channel::sigma), angular_density(chi, g, Channel::pi)};
}

double angular_sigma_beta_value(double g) {
    return (35.0 / 32.0) * ((0.5 * g) * (2.0 / 3.0) - 2.0);
}

IntegralCheck integrated_correction(double g, Channel ch, Domain domain, double tol) {
    const double inf = std::numeric_limits<double>::infinity();
    QuadratureResult q;
    if (domain == Domain::spectral) {
        q = integrate([g, ch](double y) { return spectral_density(y, g, ch); }, 0.0, inf, tol);
    } else {
        q = integrate([g, ch](double chi) { return angular_density(chi, g, ch); }, -inf, inf, tol);
    }
    if (!q.converged) {
        throw QuadratureError("integrated_correction: quadrature did not converge, partial " +
                                  std::to_string(q.value),
                              q);
    }
    IntegralCheck out;
    out.value = q.value;
    out.closure_target = (ch == Channel::sigma) ? (0.5 * g - 7.0) / 6.0 : (0.5 * g - 1.0) / 6.0;
    out.tolerance = 1e-6 * std::max(1.0, std::abs(out.closure_target));
    out.matches_closure = std::abs(out.value - out.closure_target) <= out.tolerance;
    out.quadrature_error = q.error_estimate;
    out.evaluations = q.evaluations;
    return out;
}

PowerBreakdown total_power(double g, int zeta, double xi_value, double nu) {
    PowerBreakdown b;
    b.main_sigma = 7.0 / 8.0;
    b.main_pi = 1.0 / 8.0;
    b.corr_sigma = (0.5 * g - 7.0) / 6.0;
    b.corr_pi = (0.5 * g - 1.0) / 6.0;
    b.spin_factor = zeta * xi_value * std::cos(nu);
    b.em_l = b.spin_factor * (0.5 * g) / 3.0;
    b.em_th = b.spin_factor * (-4.0 / 3.0);
    b.total = b.main_sigma + b.main_pi + b.spin_factor * (b.corr_sigma + b.corr_pi);
    b.perturbative = std::abs(xi_value * std::cos(nu)) < 0.1;
    return b;
}

PowerBreakdown total_power(const ElectronState& state) {
    return total_power(state.g, state.zeta, xi(state).value, state.nu);
}

} // namespace spinrad::spectra
