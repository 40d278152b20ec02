#include "spinrad/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinrad/quadrature.hpp"

namespace spinrad {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnderflowX = 700.0;

bool supported_order(double nu) {
    return std::abs(nu - 1.0 / 3.0) < 1e-12 || std::abs(nu - 2.0 / 3.0) < 1e-12;
}

} // namespace

namespace detail {

double bessel_k_integral(double nu, double x) {
    // Truncate where exp(-x(cosh T - 1)) cosh(nu T) is below 1e-20 relative.
    double T = std::acosh(1.0 + 46.0 / x);
    while (x * (std::cosh(T) - 1.0) - nu * T < 46.0) T += 0.5;
    const double scale = std::exp(-x);
    auto f = [nu, x, scale](double t) {
        // exp(-x cosh t) = scale * exp(-x (cosh t - 1)) keeps the integrand
        // representable for x up to the underflow threshold.
        return scale * std::exp(-x * (std::cosh(t) - 1.0)) * std::cosh(nu * t);
    };
    QuadratureOptions opts;
    opts.max_evaluations = 200'000;
    return integrate_or_throw(f, 0.0, T, 1e-13 * scale, opts);
}

double bessel_k_small_series(double nu, double x) {
    // K_nu = (pi/2)(I_{-nu} - I_nu)/sin(nu pi); ascending series for I.
    auto bessel_i = [x](double order) {
        const double q = 0.25 * x * x;
        double term = std::pow(0.5 * x, order) / std::tgamma(order + 1.0);
        double sum = term;
        for (int k = 1; k < 40; ++k) {
            term *= q / (k * (order + k));
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return sum;
    };
    return 0.5 * kPi * (bessel_i(-nu) - bessel_i(nu)) / std::sin(nu * kPi);
}

double bessel_k_asymptotic(double nu, double x) {
    const double mu4 = 4.0 * nu * nu;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 40; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double factor = (mu4 - odd * odd) / (8.0 * k * x);
        if (std::abs(factor) >= 1.0) break;  // divergence onset
        term *= factor;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return std::sqrt(0.5 * kPi / x) * std::exp(-x) * sum;
}

namespace {

// Temme's series for K_mu(x), K_{mu+1}(x), x <= 2, |mu| <= 1/2.
void temme_pair(double mu, double x, double& kmu, double& kmup1) {
    const double eps = 1e-16;
    const double x2 = 0.5 * x;
    const double pimu = kPi * mu;
    const double fact = (std::abs(pimu) < eps) ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    const double fact2 = (std::abs(e) < eps) ? 1.0 : std::sinh(e) / e;
    const double gampl = 1.0 / std::tgamma(1.0 + mu);
    const double gammi = 1.0 / std::tgamma(1.0 - mu);
    const double gam1 = (std::abs(mu) < eps)
                            ? 0.5772156649015328606  // Euler's constant limit
                            : (gammi - gampl) / (2.0 * mu);
    const double gam2 = 0.5 * (gammi + gampl);
    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / gampl;
    double q = 0.5 / (e * gammi);
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    for (int i = 1; i <= 500; ++i) {
        ff = (i * ff + p + q) / (i * i - mu * mu);
        c *= d / i;
        p /= (i - mu);
        q /= (i + mu);
        const double del = c * ff;
        sum += del;
        const double del1 = c * (p - i * ff);
        sum1 += del1;
        if (std::abs(del) < std::abs(sum) * eps) break;
    }
    kmu = sum;
    kmup1 = sum1 * 2.0 / x;
}

// Steed's continued fraction CF2 for K_mu(x), K_{mu+1}(x), x > 2.
void cf2_pair(double mu, double x, double& kmu, double& kmup1) {
    const double eps = 1e-16;
    const double a1 = 0.25 - mu * mu;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    double a = -a1;
    double q = a1, cc = a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= 10000; ++i) {
        a -= 2.0 * (i - 1);
        cc = -a * cc / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += cc * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < eps) break;
    }
    h = a1 * h;
    kmu = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
    kmup1 = kmu * (mu + x + 0.5 - h) / x;
}

} // namespace

double bessel_k_series(double nu, double x) {
    // Reduce to |mu| <= 1/2: K_{2/3} is obtained as the mu+1 member of the
    // (K_{-1/3}, K_{2/3}) pair; K_{-1/3} = K_{1/3}.
    const double mu = (nu > 0.5) ? nu - 1.0 : nu;
    const bool want_up = nu > 0.5;
    double kmu, kmup1;
    if (x <= 2.0) {
        temme_pair(mu, x, kmu, kmup1);
    } else {
        cf2_pair(mu, x, kmu, kmup1);
    }
    return want_up ? kmup1 : kmu;
}

} // namespace detail

BesselEval bessel_k_eval(double order, double x) {
    if (!supported_order(order)) {
        throw std::domain_error("bessel_k: unsupported order " + std::to_string(order));
    }
    if (!(x > 0.0)) {
        throw std::domain_error("bessel_k: x must be positive, got " + std::to_string(x));
    }
    if (x > kUnderflowX) return {0.0, true};
    if (x < 1e-2) return {detail::bessel_k_small_series(order, x), false};
    if (x > 30.0) return {detail::bessel_k_asymptotic(order, x), false};
    return {detail::bessel_k_integral(order, x), false};
}

double bessel_k(double order, double x) { return bessel_k_eval(order, x).value; }

// ---------------------------------------------------------------------------
// Tail integral cache
// ---------------------------------------------------------------------------

namespace {

double k13(double x) { return bessel_k(1.0 / 3.0, x); }

// Cubic spline on a uniform grid, clamped with the exact end slopes (the
// natural S'' = 0 end condition would cost two digits in the end intervals).
class UniformSpline {
public:
    void build(double lo, double hi, std::vector<double> values, double slope_lo,
               double slope_hi) {
        lo_ = lo;
        hi_ = hi;
        y_ = std::move(values);
        const int n = static_cast<int>(y_.size());
        h_ = (hi_ - lo_) / (n - 1);
        y2_.assign(n, 0.0);
        std::vector<double> u(n, 0.0);
        y2_[0] = -0.5;
        u[0] = (3.0 / h_) * ((y_[1] - y_[0]) / h_ - slope_lo);
        for (int i = 1; i < n - 1; ++i) {
            const double p = 0.5 * y2_[i - 1] + 2.0;
            y2_[i] = -0.5 / p;
            u[i] = (y_[i + 1] - 2.0 * y_[i] + y_[i - 1]) * 3.0 / (h_ * h_);
            u[i] = (u[i] - 0.5 * u[i - 1]) / p;
        }
        const double un = (3.0 / h_) * (slope_hi - (y_[n - 1] - y_[n - 2]) / h_);
        y2_[n - 1] = (un - 0.5 * u[n - 2]) / (0.5 * y2_[n - 2] + 1.0);
        for (int i = n - 2; i >= 0; --i) y2_[i] = y2_[i] * y2_[i + 1] + u[i];
    }

    double operator()(double x) const {
        const int n = static_cast<int>(y_.size());
        int i = static_cast<int>((x - lo_) / h_);
        i = std::clamp(i, 0, n - 2);
        const double xa = lo_ + i * h_;
        const double A = (xa + h_ - x) / h_;
        const double B = 1.0 - A;
        return A * y_[i] + B * y_[i + 1] +
               ((A * A * A - A) * y2_[i] + (B * B * B - B) * y2_[i + 1]) * h_ * h_ / 6.0;
    }

private:
    double lo_ = 0.0, hi_ = 0.0, h_ = 1.0;
    std::vector<double> y_;
    std::vector<double> y2_;
};

double tail_far(double y) {
    // y >= ~90: integrate K_{1/3}(y + s) ds with the asymptotic kernel.
    if (y > kUnderflowX) return 0.0;
    auto f = [y](double s) {
        const double x = y + s;
        return (x > kUnderflowX) ? 0.0 : detail::bessel_k_asymptotic(1.0 / 3.0, x);
    };
    return integrate_or_throw(f, 0.0, std::numeric_limits<double>::infinity(),
                              1e-12 * std::exp(-y));
}

class K13TailCache {
public:
    static const K13TailCache& instance() {
        static K13TailCache cache;
        return cache;
    }

    double eval(double y) const {
        if (y < kYminA) {
            // Rare path: peel off the [y, ymin] head with the x = s^3
            // substitution that removes the x^{-1/3} behaviour at 0.
            auto f = [](double s) { return 3.0 * s * s * k13(s * s * s); };
            const double head = integrate_or_throw(f, std::cbrt(y), std::cbrt(kYminA), 1e-12);
            return head + head_value_;
        }
        if (y <= kYsplit) return std::exp(log_spline_a_(std::log(y)));
        if (y <= kYmaxB) return std::exp(spline_b_(y));
        return tail_far(y);
    }

private:
    static constexpr double kYminA = 1e-8;
    static constexpr double kYsplit = 2.0;
    static constexpr double kYmaxB = 90.0;
    static constexpr int kNa = 4096;
    static constexpr int kNb = 4096;

    K13TailCache() {
        // Node grids: log-spaced below y = 2, linear above.
        std::vector<double> ya(kNa + 1), yb(kNb + 1);
        const double ua0 = std::log(kYminA), ua1 = std::log(kYsplit);
        for (int i = 0; i <= kNa; ++i) ya[i] = std::exp(ua0 + (ua1 - ua0) * i / kNa);
        for (int i = 0; i <= kNb; ++i) yb[i] = kYsplit + (kYmaxB - kYsplit) * i / kNb;

        // Accumulate the tail from the far end downwards; each panel is a
        // single 15-point Kronrod evaluation (panels are narrow and smooth).
        std::vector<double> tb(kNb + 1), ta(kNa + 1);
        tb[kNb] = tail_far(kYmaxB);
        for (int i = kNb - 1; i >= 0; --i) {
            tb[i] = tb[i + 1] + gauss_kronrod_panel(k13, yb[i], yb[i + 1]);
        }
        ta[kNa] = tb[0];
        for (int i = kNa - 1; i >= 0; --i) {
            ta[i] = ta[i + 1] + gauss_kronrod_panel(k13, ya[i], ya[i + 1]);
        }
        head_value_ = ta[0];

        std::vector<double> la(kNa + 1), lb(kNb + 1);
        for (int i = 0; i <= kNa; ++i) la[i] = std::log(ta[i]);
        for (int i = 0; i <= kNb; ++i) lb[i] = std::log(tb[i]);
        // exact end slopes: d(log T)/d(log y) = -y K(y)/T(y), d(log T)/dy = -K/T
        log_spline_a_.build(ua0, ua1, std::move(la), -kYminA * k13(kYminA) / ta[0],
                            -kYsplit * k13(kYsplit) / ta[kNa]);
        spline_b_.build(kYsplit, kYmaxB, std::move(lb), -k13(kYsplit) / tb[0],
                        -k13(kYmaxB) / tb[kNb]);
    }

    UniformSpline log_spline_a_;  // log tail vs log y on [1e-8, 2]
    UniformSpline spline_b_;      // log tail vs y on [2, 90]
    double head_value_ = 0.0;     // tail at y = 1e-8
};

} // namespace

double k13_tail(double y) {
    if (!(y > 0.0)) {
        throw std::domain_error("k13_tail: y must be positive, got " + std::to_string(y));
    }
    return K13TailCache::instance().eval(y);
}

namespace detail {

double k13_tail_direct(double y, double rel_tol) {
    // Substitution x = y cosh u regularises the exponential tail.
    auto f = [y](double u) {
        const double x = y * std::cosh(u);
        if (x > kUnderflowX) return 0.0;
        return k13(x) * y * std::sinh(u);
    };
    const double scale = (y > 1.0) ? std::exp(-y) : 1.0;
    return integrate_or_throw(f, 0.0, std::numeric_limits<double>::infinity(),
                              rel_tol * scale);
}

} // namespace detail

} // namespace spinrad
