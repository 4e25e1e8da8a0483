#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "helpers.hpp"
#include "ohlab/errors.hpp"
#include "ohlab/inviscid.hpp"

using namespace ohlab;

namespace {

// min / max of u^2/2 over the closed interval by dense sampling plus endpoints and 0.
double brute_flux(double a, double b) {
    const double lo = std::min(a, b), hi = std::max(a, b);
    double mn = std::min(0.5 * lo * lo, 0.5 * hi * hi), mx = std::max(0.5 * lo * lo, 0.5 * hi * hi);
    if (lo <= 0.0 && 0.0 <= hi) mn = 0.0;
    return a <= b ? mn : mx;
}

ProblemSpec bump_spec(int cells, double gamma) {
    const Grid1D g(20.0, cells);
    return ProblemSpec{gamma, 0.0, g,
                       ScalarField::sample(g, [](double x) { return std::exp(-(x - 3) * (x - 3) / 0.25); }),
                       BoundarySignal::zero(1.0), 1.0, 1.0, gamma == 0.0};
}

}  // namespace

TEST_CASE("Godunov flux: Riemann cases") {
    for (double c : {-2.0, -0.5, 0.0, 0.5, 3.0}) CHECK(godunov_flux({c, c}) == 0.5 * c * c);
    CHECK(godunov_flux({1.0, -1.0}) == 0.5);
    CHECK(godunov_flux({-1.0, 1.0}) == 0.0);
    std::mt19937_64 rng(1);
    for (int k = 0; k < 2000; ++k) {
        const auto v = testing::random_values(rng, 2, -3.0, 3.0);
        CHECK(godunov_flux({v[0], v[1]}) == brute_flux(v[0], v[1]));
        const double w = godunov_state({v[0], v[1]});
        CHECK((w == v[0] || w == v[1] || w == 0.0));
    }
}

TEST_CASE("inviscid step: rest state and CFL") {
    const Grid1D g(10.0, 50);
    const ScalarField z = ScalarField::zeros(g);
    CHECK(step_inviscid(z, 0.0, 0.5, 0.1) == z);
    CHECK_THROWS_AS(step_inviscid(ScalarField::constant(g, 2.0), 0.0, 0.0, 0.11), std::invalid_argument);
    CHECK_THROWS_AS(step_inviscid(z, 5.0, 0.0, 0.05), std::invalid_argument);
    CHECK_NOTHROW(step_inviscid(ScalarField::constant(g, 2.0), 0.0, 0.0, 0.1));
}

TEST_CASE("inviscid step: conservative telescoping with gamma = 0") {
    std::mt19937_64 rng(2);
    const Grid1D g(10.0, 100);
    for (int trial = 0; trial < 20; ++trial) {
        const ScalarField u(g, testing::random_values(rng, 100, -1.0, 1.0));
        const double gl = u[0];  // boundary equal to the zero-gradient value
        const double dt = 0.4 * g.dx();
        const ScalarField v = step_inviscid(u, gl, 0.0, dt);
        double before = 0.0, after = 0.0;
        for (std::size_t i = 0; i < 100; ++i) {
            before += u[i];
            after += v[i];
        }
        const double boundary = godunov_flux({gl, u[0]}) - 0.5 * u[99] * u[99];
        CHECK(std::abs((after - before) * g.dx() - dt * boundary) <= 1e-14);
    }
}

TEST_CASE("inviscid step is monotone with gamma = 0") {
    std::mt19937_64 rng(8);
    const Grid1D g(10.0, 80);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = testing::random_values(rng, 80, -1.0, 1.0);
        auto b = a;
        const auto bump = testing::random_values(rng, 80, 0.0, 0.5);
        for (std::size_t i = 0; i < 80; ++i) b[i] += bump[i];
        const double dt = 0.6 * g.dx() / 1.5;
        const ScalarField ua = step_inviscid(ScalarField(g, a), 0.3, 0.0, dt);
        const ScalarField ub = step_inviscid(ScalarField(g, b), 0.3, 0.0, dt);
        for (std::size_t i = 0; i < 80; ++i) CHECK(ua[i] <= ub[i] + 1e-15);
    }
}

TEST_CASE("inviscid step: sup growth bounded by the source") {
    std::mt19937_64 rng(6);
    const Grid1D g(10.0, 80);
    for (int trial = 0; trial < 20; ++trial) {
        const ScalarField u(g, testing::random_values(rng, 80, -1.0, 1.0));
        const double dt = 0.5 * g.dx();
        const ScalarField v = step_inviscid(u, 0.0, 0.5, dt);
        const double p_sup = norm_linf(integrate_primitive(v));
        CHECK(norm_linf(v) <= norm_linf(u) + dt * 0.5 * p_sup + 1e-12);
    }
}

TEST_CASE("Riemann shock travels at the Rankine-Hugoniot speed") {
    for (int n : {256, 1024}) {
        const Trajectory t = run_inviscid(testing::shock_spec(n), {0.0, 1.0});
        const ScalarField& u = t.u.back();
        double pos = 0.0;
        for (int i = 0; i + 1 < n; ++i) {
            if (u[static_cast<std::size_t>(i)] >= 0.5 && u[static_cast<std::size_t>(i + 1)] < 0.5) {
                pos = 0.5 * (u.grid().center(i) + u.grid().center(i + 1));
                break;
            }
        }
        CHECK(std::abs(pos - 5.5) <= 2.0 * u.grid().dx());
    }
}

TEST_CASE("inviscid run with gamma > 0 converges to a fine-grid run") {
    for (Splitting sp : {Splitting::lie, Splitting::strang}) {
        InviscidOptions o;
        o.splitting = sp;
        double prev = INFINITY;
        for (int n : {128, 256}) {
            const Trajectory coarse = run_inviscid(bump_spec(n, 0.5), {0.0, 1.0}, o);
            const Trajectory fine = run_inviscid(bump_spec(4 * n, 0.5), {0.0, 1.0}, o);
            const double d = norm_l1_window(coarse.u.back() - testing::restrict_average(fine.u.back(), coarse.grid), 10.0);
            CHECK(d < prev);
            prev = d;
        }
    }
}

TEST_CASE("inviscid run: rest state and preconditions") {
    const Grid1D g(20.0, 64);
    const ProblemSpec spec{0.5, 0.0, g, ScalarField::zeros(g), BoundarySignal::zero(1.0), 1.0, 1.0};
    const Trajectory t = run_inviscid(spec, uniform_stamps(1.0, 4));
    for (const ScalarField& u : t.u) CHECK(norm_linf(u) == 0.0);
    for (double tr : t.trace) CHECK(tr == 0.0);
    ProblemSpec viscous = spec;
    viscous.epsilon = 0.1;
    CHECK_THROWS_AS(run_inviscid(viscous, {0.0, 1.0}), std::invalid_argument);
    InviscidOptions o;
    o.trace_order = 3;
    CHECK_THROWS_AS(run_inviscid(spec, {0.0, 1.0}, o), std::invalid_argument);
}

TEST_CASE("trace extrapolation") {
    const Grid1D g(1.0, 8);
    CHECK(trace_value(ScalarField::constant(g, 0.7), 1) == doctest::Approx(0.7));
    CHECK(trace_value(ScalarField::constant(g, 0.7), 2) == doctest::Approx(0.7));
    const ScalarField lin = ScalarField::sample(g, [](double x) { return x; });
    CHECK(std::abs(trace_value(lin, 1)) < 1e-15);
    const ScalarField quad = ScalarField::sample(g, [](double x) { return 1.0 + x - 3.0 * x * x; });
    CHECK(trace_value(quad, 2) == doctest::Approx(1.0).epsilon(1e-14));
    Trajectory t = testing::frozen_trajectory(lin, 0.0, 0.0, {0.0, 1.0});
    t.trace_order = 2;
    const auto tr = trace_extract(t);
    REQUIRE(tr.size() == 2);
    CHECK(std::abs(tr[0]) < 1e-15);
}

TEST_CASE("boundary traces of Riemann problems at x = 0") {
    const Grid1D g(20.0, 512);
    // Interior 2 moving right with datum 1: inflow rarefaction from 1, the datum is attained.
    const Trajectory in = run_inviscid(testing::burgers_spec(g, [](double x) { return x < 8.0 ? 2.0 : 0.0; }, 1.0, 1.0),
                                       uniform_stamps(1.0, 5));
    CHECK(in.trace.back() == doctest::Approx(1.0).epsilon(1e-6));
    // Interior -2 leaving through x = 0: the trace keeps the interior value, not g.
    const Trajectory out = run_inviscid(testing::burgers_spec(g, [](double x) { return x < 8.0 ? -2.0 : 0.0; }, 1.0, 1.0),
                                        uniform_stamps(1.0, 5));
    CHECK(out.trace.back() == doctest::Approx(-2.0).epsilon(1e-6));
    CHECK(out.boundary.back() == 1.0);
}
