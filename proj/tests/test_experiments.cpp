#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "filmgrp/experiments.hpp"
#include "filmgrp/grp.hpp"

using namespace filmgrp;
using doctest::Approx;

namespace {

void check_vec(const Vec4& got, const Vec4& want, double eps = 1e-14) {
    for (std::size_t i = 0; i < 4; ++i) CHECK(got[i] == Approx(want[i]).epsilon(eps));
}

}  // namespace

TEST_CASE("travelling wave exact solution") {
    check_vec(experiments::travelling_wave_exact(0.0, 0.0), {2, -1, 2, 1});
    check_vec(experiments::travelling_wave_exact(std::numbers::pi / 2, 0.0), {3, -2.0 / 3.0, 2, 1});
    check_vec(experiments::travelling_wave_exact(0.3, 1.2), experiments::travelling_wave_exact(1.5, 0.0));
    const double h = 1e-6;
    const Vec4 fd = (experiments::travelling_wave_exact(0.7 + h, 0.0) -
                     experiments::travelling_wave_exact(0.7 - h, 0.0)) / (2 * h);
    check_vec(experiments::travelling_wave_dx(0.7, 0.0), fd, 1e-8);
}

TEST_CASE("error norms") {
    auto g = scheme::make_grid(0.0, 2.0 * std::numbers::pi, 64, scheme::Boundary::Periodic);
    for (int j = 0; j < g.N; ++j) g.averages[j] = experiments::travelling_wave_exact(g.x_center(j), 0.0);
    auto exact = [](double x) { return experiments::travelling_wave_exact(x, 0.0); };
    const auto zero = experiments::error_norms(g, exact);
    for (const auto& n : zero.vars) {
        CHECK(n.L1 == 0.0);
        CHECK(n.L2 == 0.0);
        CHECK(n.Linf == 0.0);
    }
    for (auto& U : g.averages) U.f += 0.5;
    const auto half = experiments::error_norms(g, exact);
    CHECK(half.vars[0].L1 == Approx(std::numbers::pi).epsilon(1e-14));
    CHECK(half.vars[0].L2 == Approx(0.5 * std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-14));
    CHECK(half.vars[0].Linf == Approx(0.5).epsilon(1e-14));
    CHECK(half.vars[1].L1 == 0.0);
}

TEST_CASE("observed order") {
    CHECK(experiments::observed_order(4e-2, 1e-2) == Approx(2.0));
    CHECK(experiments::observed_order(1.39e-1, 3.50e-2) == Approx(1.99).epsilon(5e-3));
    CHECK(experiments::observed_order(8.10e-2, 2.06e-2) == Approx(1.97).epsilon(5e-3));
}

TEST_CASE("fill_orders leaves the coarsest row undefined") {
    std::vector<experiments::ConvergenceRow> rows(3);
    const double e[] = {4e-2, 1e-2, 2.5e-3};
    for (int k = 0; k < 3; ++k) {
        rows[k].N = 20 << k;
        for (auto& n : rows[k].errors.vars) n = {e[k], e[k], e[k]};
    }
    experiments::fill_orders(rows);
    CHECK(std::isnan(rows[0].orders[0].L1));
    CHECK(rows[1].orders[2].L2 == Approx(2.0));
    CHECK(rows[2].orders[3].Linf == Approx(2.0));
}

TEST_CASE("builtin cases carry the reference data") {
    const auto cs = experiments::builtin_cases();
    CHECK(cs.size() == 6);
    const auto c2 = experiments::find_case("example5.2");
    CHECK(c2.init.left == ConservedState{2.0, -2.0, 16.0, 2.286});
    CHECK(c2.init.right == ConservedState{1.0, -1.0, 4.0, 0.57143});
    CHECK(c2.x_lo == -20.0);
    CHECK(c2.x_hi == 5.0);
    CHECK(c2.t_end == 2.5);
    CHECK(c2.N == 100);
    const auto c3 = experiments::find_case("example5.3");
    CHECK(c3.init.jump == 10.0);
    CHECK(c3.N == 200);
    const auto c6 = experiments::find_case("example5.6");
    CHECK(c6.snapshots.size() == 5);
    check_vec(experiments::initial_state(c6.init, 4.0), {1.0, -2.0, 2.0, 3.0});
    CHECK_THROWS_AS(experiments::find_case("example9"), ValidationError);
}

TEST_CASE("Riemann cell averages split the jump cell exactly") {
    auto tc = experiments::find_case("example5.4");
    tc.init.jump = 0.1;
    tc.N = 25;
    const auto g = experiments::initial_grid(tc, experiments::config_for(tc, scheme::SchemeKind::Godunov));
    const int j = static_cast<int>((0.1 - tc.x_lo) / g.dx);
    const double s = (0.1 - (tc.x_lo + j * g.dx)) / g.dx;
    check_vec(g.averages[j], s * tc.init.left + (1 - s) * tc.init.right, 1e-14);
    for (const auto& d : g.slopes) CHECK(d == Vec4{});
}

TEST_CASE("component comparison rule") {
    CHECK(experiments::components_agree({1.0, 2.0, 0.0, 1e-9}, {1.04, 2.0, 5e-7, 0.0}));
    CHECK_FALSE(experiments::components_agree({1.0, 2.0, 0.0, 0.0}, {1.06, 2.0, 0.0, 0.0}));
    CHECK_FALSE(experiments::components_agree({1.0, 2.0, 0.0, 0.0}, {1.0, 2.0, 2e-6, 0.0}));
    CHECK(experiments::max_relative_error({1.0, 2.0, 0.0, 0.0}, {1.1, 2.0, 0.0, 0.0}) ==
          Approx(0.1 / 1.1));
}

TEST_CASE("oracle: zero slopes give zero") {
    const ConservedState L{1.0, -1.5, 2.2, 1.3}, R{0.125, -1.5, 0.9, 0.9};
    CHECK(experiments::fd_derivative_oracle(L, {}, R, {}) == Vec4{});
}

TEST_CASE("oracle: smooth data reproduces the analytic rate") {
    const double x = 1.0;
    const auto U = experiments::travelling_wave_exact(x, 0.0);
    const Vec4 dU = experiments::travelling_wave_dx(x, 0.0);
    const Vec4 oracle = experiments::fd_derivative_oracle(U, dU, U, dU);
    CHECK(experiments::components_agree(oracle, dU, 0.02));
}

TEST_CASE("oracle: example 5.3 data with uniform slopes") {
    const ConservedState L{1.57, -1.15, 2.5, 1.90}, R{1.9, -0.58, 2.4, 2.30};
    const Vec4 s{0.01, 0.01, 0.01, 0.01};
    const auto fan = riemann::solve_star_states(L, R);
    const Vec4 grp = grp::assemble_and_solve(fan, L, s, R, s).dM;
    check_vec(grp, {-0.0070300000000000024, 0.0093379999999999991, -0.078310006597400325,
                    -0.06119502705274054}, 1e-12);
    CHECK(experiments::components_agree(grp, experiments::fd_derivative_oracle(L, s, R, s)));
}

TEST_CASE("grp-check suite coverage") {
    const auto suite = experiments::grp_check_suite();
    CHECK(suite.size() >= 6);
    bool r1s4 = false, s1r4 = false, acoustic = false;
    for (const auto& c : suite) {
        if (norm_inf(c.UL - c.UR) == 0.0) {
            acoustic = true;
            continue;
        }
        const auto s = riemann::solve_star_states(c.UL, c.UR).structure();
        r1s4 = r1s4 || s == "R1 + J2 + J3 + S4";
        s1r4 = s1r4 || s == "S1 + J2 + J3 + R4";
    }
    CHECK(r1s4);
    CHECK(s1r4);
    CHECK(acoustic);
}
