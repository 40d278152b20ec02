#ifndef SPINRAD_QUADRATURE_HPP
#define SPINRAD_QUADRATURE_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinrad {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

struct QuadratureOptions {
    long max_evaluations = 1'000'000;
};

// Thrown by integrate_or_throw when the evaluation budget runs out; carries
// the partial estimate so callers can report the offending quantity.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, const QuadratureResult& partial)
        : std::runtime_error(what), partial_(partial) {}
    const QuadratureResult& partial() const { return partial_; }

private:
    QuadratureResult partial_;
};

// Globally adaptive Gauss-Kronrod (7/15) quadrature of f over (a, b).
// Either bound may be +/-infinity; those ranges are mapped onto finite
// intervals by rational transforms.  Integrable endpoint singularities are
// handled by subdivision (Kronrod nodes are interior).  The run stops once
// the accumulated error estimate drops below tol * max(1, |value|).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol, const QuadratureOptions& opts = {});

// As integrate(), but throws QuadratureError if the budget is exhausted.
double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          double tol, const QuadratureOptions& opts = {});

// Non-adaptive 15-point Gauss-Kronrod rule on a finite panel [a, b].
double gauss_kronrod_panel(const std::function<double(double)>& f, double a, double b);

// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int n);

} // namespace spinrad

#endif
