#ifndef SPINRAD_BESSEL_HPP
#define SPINRAD_BESSEL_HPP

namespace spinrad {

// Modified Bessel functions of the second kind for the fractional orders
// 1/3 and 2/3 that drive synchrotron spectra, plus the tail integral
// of K_{1/3} used by the spectral distributions.
//
// Two independent evaluation routes are kept on purpose:
//   * the integral representation K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt,
//     evaluated by adaptive quadrature (production route for mid-range x,
//     with a small-argument series below 1e-2 and the large-argument
//     asymptotic expansion above 30);
//   * Temme's series plus a Steed continued fraction (reference route).
// The test suite cross-validates the two against each other.

struct BesselEval {
    double value = 0.0;
    bool underflowed = false;  // set when exp(-x) is below double range
};

// K_nu(x) for nu in {1/3, 2/3}; relative accuracy ~1e-10.
// Throws std::domain_error for x <= 0 or unsupported order.
double bessel_k(double order, double x);
BesselEval bessel_k_eval(double order, double x);

// int_y^inf K_{1/3}(x) dx to relative ~1e-9.  Backed by a spline cache built
// on first use (thereafter read-only, safe for concurrent readers).
// Throws std::domain_error for y <= 0.
double k13_tail(double y);

namespace detail {

// Integral-representation route (any 0 < nu < 1, x > 0).
double bessel_k_integral(double nu, double x);
// Temme series (x <= 2) + Steed CF2 (x > 2) route (|mu| < 1/2 internally).
double bessel_k_series(double nu, double x);
// Large-argument expansion sqrt(pi/2x) e^{-x} sum a_k(nu)/x^k.
double bessel_k_asymptotic(double nu, double x);
// Ascending power series via I_{+/-nu}, for small x.
double bessel_k_small_series(double nu, double x);

// Tail integral evaluated by direct quadrature, bypassing the cache.
double k13_tail_direct(double y, double rel_tol = 1e-10);

} // namespace detail

} // namespace spinrad

#endif
