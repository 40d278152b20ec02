#include "spinrad/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

namespace spinrad {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK constants).
constexpr double kXgk[8] = {
    0.99145537112081263920685469752633,
    0.94910791234275852452618968404785,
    0.86486442335976907278971278864093,
    0.74153118559939443986386477328079,
    0.58608723546769113029414483825873,
    0.40584515137739716690660641207696,
    0.20778495500789846760068940377324,
    0.0,
};
constexpr double kWgk[8] = {
    0.02293532201052922496373200805897,
    0.06309209262997855329070066318854,
    0.10479001032225018383987632254152,
    0.14065325971552591874518959051024,
    0.16900472663926790282658342659855,
    0.19035057806478540991325640242101,
    0.20443294007529889241416199923465,
    0.20948214108472782801299917489171,
};
constexpr double kWg[4] = {
    0.12948496616886969327061143267908,
    0.27970539148927666790146777142378,
    0.38183005050511894495036977548898,
    0.41795918367346938775510204081633,
};

struct PanelResult {
    double kronrod = 0.0;
    double error = 0.0;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);

    const double fc = f(mid);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;

    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double f1 = f(mid - dx);
        const double f2 = f(mid + dx);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    PanelResult r;
    r.kronrod = resk * h;
    r.error = std::abs((resk - resg) * h);
    return r;
}

struct Segment {
    double a, b;
    double value;
    double error;
};

struct SegmentOrder {
    bool operator()(const Segment& x, const Segment& y) const { return x.error < y.error; }
};

// Map (a, inf), (-inf, b) or (-inf, inf) onto a finite parameter interval.
struct Transformed {
    std::function<double(double)> f;
    double lo, hi;
};

Transformed transform(const std::function<double(double)>& f, double a, double b) {
    const double inf = std::numeric_limits<double>::infinity();
    if (a == -inf && b == inf) {
        // x = t/(1-t^2), t in (-1, 1)
        auto g = [f](double t) {
            const double d = 1.0 - t * t;
            const double x = t / d;
            const double jac = (1.0 + t * t) / (d * d);
            return f(x) * jac;
        };
        return {g, -1.0, 1.0};
    }
    if (b == inf) {
        // x = a + t/(1-t), t in [0, 1)
        auto g = [f, a](double t) {
            const double d = 1.0 - t;
            const double x = a + t / d;
            return f(x) / (d * d);
        };
        return {g, 0.0, 1.0};
    }
    if (a == -inf) {
        // x = b - t/(1-t), t in [0, 1)
        auto g = [f, b](double t) {
            const double d = 1.0 - t;
            const double x = b - t / d;
            return f(x) / (d * d);
        };
        return {g, 0.0, 1.0};
    }
    return {f, a, b};
}

} // namespace

double gauss_kronrod_panel(const std::function<double(double)>& f, double a, double b) {
    return gk15(f, a, b).kronrod;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol, const QuadratureOptions& opts) {
    QuadratureResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }

    const Transformed tr = transform(f, a, b);

    std::priority_queue<Segment, std::vector<Segment>, SegmentOrder> queue;
    const PanelResult first = gk15(tr.f, tr.lo, tr.hi);
    long evals = 15;
    double total_value = first.kronrod;
    double total_error = first.error;
    queue.push({tr.lo, tr.hi, first.kronrod, first.error});

    auto threshold = [&](double value) { return tol * std::max(1.0, std::abs(value)); };

    while (total_error > threshold(total_value) && evals + 30 <= opts.max_evaluations) {
        Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid == worst.a || mid == worst.b) {
            // Interval exhausted at machine precision; accept its estimate.
            worst.error = 0.0;
            queue.push(worst);
            if (queue.top().error == 0.0) break;
            continue;
        }
        const PanelResult left = gk15(tr.f, worst.a, mid);
        const PanelResult right = gk15(tr.f, mid, worst.b);
        evals += 30;
        total_value += left.kronrod + right.kronrod - worst.value;
        total_error += left.error + right.error - worst.error;
        queue.push({worst.a, mid, left.kronrod, left.error});
        queue.push({mid, worst.b, right.kronrod, right.error});
    }

    // Deterministic final sum: accumulate segments ordered by left endpoint.
    std::vector<Segment> segs;
    segs.reserve(queue.size());
    while (!queue.empty()) {
        segs.push_back(queue.top());
        queue.pop();
    }
    std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
    double value = 0.0, comp = 0.0, err = 0.0;
    for (const Segment& s : segs) {
        const double t = s.value - comp;
        const double next = value + t;
        comp = (next - value) - t;
        value = next;
        err += s.error;
    }

    out.value = sign * value;
    out.error_estimate = err;
    out.evaluations = evals;
    out.converged = err <= threshold(value);
    return out;
}

double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          double tol, const QuadratureOptions& opts) {
    const QuadratureResult r = integrate(f, a, b, tol, opts);
    if (!r.converged) {
        throw QuadratureError(
            "quadrature did not converge: partial value " + std::to_string(r.value) +
                ", error estimate " + std::to_string(r.error_estimate) + " after " +
                std::to_string(r.evaluations) + " evaluations",
            r);
    }
    return r.value;
}

GaussLegendreRule gauss_legendre(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double pi = std::numbers::pi;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence for P_n(x) and P'_n(x)
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

} // namespace spinrad
