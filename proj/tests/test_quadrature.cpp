#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "spinrad/quadrature.hpp"

using namespace spinrad;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("linear integrand on a finite interval") {
    const auto r = integrate([](double x) { return x; }, 0.0, 1.0, 1e-12);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(r.error_estimate <= 1e-12);
}

TEST_CASE("decaying exponential on a semi-infinite interval") {
    const auto r = integrate([](double x) { return std::exp(-x); }, 0.0, kInf, 1e-12);
    CHECK(r.converged);
    CHECK(std::abs(r.value - 1.0) <= 1e-12);
}

TEST_CASE("doubly infinite interval with algebraic decay") {
    // int (1+x^2)^{-5/2} dx = B(1/2, 2) = 4/3
    const auto r = integrate([](double x) { return std::pow(1.0 + x * x, -2.5); }, -kInf, kInf,
                             1e-11);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(4.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("integrable endpoint singularity") {
    const auto r = integrate([](double x) { return std::pow(x, -1.0 / 3.0); }, 0.0, 1.0, 1e-10);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.5).epsilon(1e-9));
}

TEST_CASE("reversed limits flip the sign") {
    const auto r = integrate([](double x) { return x * x; }, 1.0, 0.0, 1e-12);
    CHECK(r.value == doctest::Approx(-1.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("budget exhaustion reports a partial estimate instead of lying") {
    QuadratureOptions opts;
    opts.max_evaluations = 200;
    // oscillations far too fast for 200 evaluations at this tolerance
    auto wiggle = [](double x) { return std::sin(1000.0 * x) / (1.0 + x); };
    const auto r = integrate(wiggle, 0.0, 1.0, 1e-14, opts);
    CHECK(!r.converged);
    CHECK(r.evaluations <= 200);
    CHECK_THROWS_AS((void)integrate_or_throw(wiggle, 0.0, 1.0, 1e-14, opts), QuadratureError);
    try {
        (void)integrate_or_throw(wiggle, 0.0, 1.0, 1e-14, opts);
    } catch (const QuadratureError& e) {
        CHECK(e.partial().evaluations > 0);
    }
}

TEST_CASE("degenerate interval") {
    const auto r = integrate([](double x) { return x; }, 2.0, 2.0, 1e-12);
    CHECK(r.converged);
    CHECK(r.value == 0.0);
}

TEST_CASE("error estimate respects the tolerance contract on success") {
    const auto r = integrate([](double x) { return std::sin(3.0 * x); }, 0.0, 2.0, 1e-10);
    CHECK(r.converged);
    CHECK(r.error_estimate <= 1e-10 * std::max(1.0, std::abs(r.value)));
}

TEST_CASE("gauss-legendre nodes integrate polynomials exactly") {
    const auto rule = gauss_legendre(12);
    double sum_w = 0.0, sum_x10 = 0.0;
    for (int i = 0; i < 12; ++i) {
        sum_w += rule.weights[i];
        sum_x10 += rule.weights[i] * std::pow(rule.nodes[i], 10);
    }
    CHECK(sum_w == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(sum_x10 == doctest::Approx(2.0 / 11.0).epsilon(1e-13));  // int x^10 = 2/11
}

TEST_CASE("gauss-legendre handles large orders") {
    const auto rule = gauss_legendre(512);
    double sum = 0.0;
    for (int i = 0; i < 512; ++i) sum += rule.weights[i] * std::cos(rule.nodes[i]);
    CHECK(sum == doctest::Approx(2.0 * std::sin(1.0)).epsilon(1e-13));
}
