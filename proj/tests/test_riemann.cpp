#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "filmgrp/riemann.hpp"

using namespace filmgrp;
using doctest::Approx;
using riemann::WaveKind;

namespace {

const ConservedState L52{2.0, -2.0, 16.0, 2.286}, R52{1.0, -1.0, 4.0, 0.57143};
const ConservedState L53{1.57, -1.15, 2.5, 1.90}, R53{1.9, -0.58, 2.4, 2.30};
const ConservedState L54{1.0, -1.5, 2.2, 1.3}, R54{0.125, -1.5, 0.9, 0.9};
const ConservedState L55{1.57, -0.95, 3.1, 1.50}, R55{1.45, -1.18, 3.6, 1.10};

void check_vec(const Vec4& got, const Vec4& want, double eps = 1e-13) {
    for (std::size_t i = 0; i < 4; ++i) {
        if (eps == 0.0) CHECK(got[i] == want[i]);
        else CHECK(got[i] == Approx(want[i]).epsilon(eps));
    }
}

double scale(const ConservedState& a, const ConservedState& b) {
    return std::max({1.0, norm_inf(core::flux(a)), norm_inf(core::flux(b)), norm_inf(a), norm_inf(b)});
}

}  // namespace

TEST_CASE("constant data gives zero-strength waves") {
    const ConservedState U{1, -1, 2, 2};
    const auto fan = riemann::solve_star_states(U, U);
    CHECK(fan.config.wave1 == WaveKind::Rarefaction);
    CHECK(fan.config.wave4 == WaveKind::Rarefaction);
    CHECK(fan.w1_lo == fan.w1_hi);
    CHECK(fan.w4_lo == Approx(fan.w4_hi).epsilon(1e-14));
    check_vec(fan.UstarL, U, 1e-14);
    check_vec(fan.UstarM, U, 1e-14);
    check_vec(fan.UstarR, U, 1e-14);
    for (double s : {-10.0, -1.5, 0.0, 0.3, 5.0, 9.0}) check_vec(riemann::sample(fan, s), U, 1e-14);
}

TEST_CASE("example 5.4 data: R1 + J2 + J3 + S4") {
    const auto fan = riemann::solve_star_states(L54, R54);
    CHECK(fan.structure() == "R1 + J2 + J3 + S4");
    CHECK(fan.ustar == Approx(-0.1875).epsilon(1e-15));
    CHECK(fan.vstar == Approx(1.3053356299210443).epsilon(1e-13));
    CHECK(fan.vstar > R54.g * R54.q);
    CHECK(fan.w1_lo == Approx(-2.25));
    CHECK(fan.w1_hi == Approx(-0.28125));
    CHECK(fan.sigma2 == Approx(-0.09375));
    CHECK(fan.sigma3 == Approx(0.46516781496052217).epsilon(1e-13));
    CHECK(fan.sigma4() == Approx(1.3842986009080391).epsilon(1e-13));
    check_vec(fan.UstarL, {0.35355339059327379, -0.5303300858899106, 1.4862804336862845, 0.87825661990553172});
    check_vec(fan.UstarR, {0.125, -1.5, 1.1425128576611487, 1.1425128576611487});
    CHECK(fan.stars_in_state_space());
}

TEST_CASE("example 5.3 data: two rarefactions") {
    const auto fan = riemann::solve_star_states(L53, R53);
    CHECK(fan.structure() == "R1 + J2 + J3 + R4");
    check_vec(fan.UstarL, {1.2265682065084644, -0.8984416799265823, 2.2670252206100892, 1.7229391676636676});
    check_vec(fan.UstarR, {1.9, -0.58, 2.018853711780328, 1.9347348071228143});
}

TEST_CASE("example 5.5 data: two shocks") {
    const auto fan = riemann::solve_star_states(L55, R55);
    CHECK(fan.structure() == "S1 + J2 + J3 + S4");
    CHECK(fan.sigma1() == Approx(-2.3999922143595511).epsilon(1e-13));
    CHECK(fan.sigma4() == Approx(4.93115057111984).epsilon(1e-13));
    check_vec(riemann::rh_residual(fan.UL, fan.UstarL, fan.sigma1()), {0, 0, 0, 0});
}

TEST_CASE("example 5.2 data at x = 0") {
    const auto fan = riemann::solve_star_states(L52, R52);
    CHECK(fan.structure() == "R1 + J2 + J3 + S4");
    check_vec(riemann::sample(fan, 0.0), {1.0, -1.0, 15.121285748143798, 2.1604537012660452});
}

TEST_CASE("sampler outside the fan and at ties") {
    const auto fan = riemann::solve_star_states(L54, R54);
    check_vec(riemann::sample(fan, fan.w1_lo - 1e-9), L54, 0);
    check_vec(riemann::sample(fan, fan.w4_hi + 1e-9), R54, 0);
    check_vec(riemann::sample(fan, fan.sigma4()), R54, 0);
    check_vec(riemann::sample(fan, fan.sigma2), fan.UstarM, 0);
    const auto mid = riemann::sample(fan, 0.5 * (fan.w1_lo + fan.w1_hi));
    CHECK(mid.f * mid.b == Approx(2.0 / 3.0 * 0.5 * (fan.w1_lo + fan.w1_hi)));
}

TEST_CASE("rh_residual") {
    check_vec(riemann::rh_residual(L54, L54, 3.7), {0, 0, 0, 0}, 0);
    const auto fan = riemann::solve_star_states(L54, R54);
    const Vec4 r4 = riemann::rh_residual(fan.UstarR, R54, fan.sigma4());
    CHECK(norm_inf(r4) <= 1e-12 * scale(fan.UstarR, R54));
    const Vec4 r2 = riemann::rh_residual(fan.UstarL, fan.UstarM, fan.sigma2);
    CHECK(norm_inf(r2) <= 1e-13 * scale(fan.UstarL, fan.UstarM));
    const Vec4 r3 = riemann::rh_residual(fan.UstarM, fan.UstarR, fan.sigma3);
    CHECK(norm_inf(r3) <= 1e-13 * scale(fan.UstarM, fan.UstarR));
}

TEST_CASE("data outside the admissible region") {
    CHECK_THROWS_AS(riemann::solve_star_states({1, 1, 2, 2}, L54), DomainError);
    CHECK_THROWS_AS(riemann::solve_star_states(L54, {1, -1, -2, 2}), DomainError);
}

TEST_CASE("random data: jump conditions, Lax inequalities, invariants") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> f(0.2, 2.5), b(-2.5, -0.2), g(0.5, 3.5), q(0.5, 3.0);
    int solved = 0;
    for (int k = 0; k < 400; ++k) {
        const ConservedState UL{f(rng), b(rng), g(rng), q(rng)};
        const ConservedState UR{f(rng), b(rng), g(rng), q(rng)};
        if (!core::in_state_space(UL) || !core::in_state_space(UR)) continue;
        riemann::WaveFan fan;
        try {
            fan = riemann::solve_star_states(UL, UR);
        } catch (const DomainError&) {
            continue;
        }
        ++solved;
        const double sc = scale(UL, UR) + scale(fan.UstarL, fan.UstarR);
        const auto iL = core::to_invariants(UL), iR = core::to_invariants(UR);
        const auto isL = core::to_invariants(fan.UstarL), isR = core::to_invariants(fan.UstarR);
        CHECK(isL.xi == Approx(iL.xi).epsilon(1e-10));
        CHECK(isL.tau == Approx(iL.tau).epsilon(1e-10));
        CHECK(isR.tau == Approx(iR.tau).epsilon(1e-10));
        CHECK(isR.u == Approx(iR.u).epsilon(1e-10));
        CHECK(fan.UstarR.f == UR.f);
        CHECK(fan.UstarR.b == UR.b);
        if (fan.config.wave1 == WaveKind::Shock) {
            CHECK(norm_inf(riemann::rh_residual(UL, fan.UstarL, fan.sigma1())) <= 1e-10 * sc);
            CHECK(1.5 * isL.u < fan.sigma1());
            CHECK(fan.sigma1() < 1.5 * iL.u);
        } else {
            CHECK(isL.eta == Approx(iL.eta).epsilon(1e-10));
        }
        if (fan.config.wave4 == WaveKind::Shock) {
            CHECK(norm_inf(riemann::rh_residual(fan.UstarR, UR, fan.sigma4())) <= 1e-10 * sc);
            CHECK(iR.u + 1.5 * iR.v < fan.sigma4());
            CHECK(fan.sigma4() < isR.u + 1.5 * isR.v);
        }
        const double c_lo = std::min(fan.sigma2, fan.sigma3);
        const double c_hi = std::max(fan.sigma2, fan.sigma3);
        CHECK(norm_inf(riemann::rh_residual(fan.UstarL, fan.UstarM, c_lo)) <= 1e-10 * sc);
        CHECK(norm_inf(riemann::rh_residual(fan.UstarM, fan.UstarR, c_hi)) <= 1e-10 * sc);
        check_vec(riemann::sample(riemann::solve_star_states(UL, UL), 0.1), UL, 1e-12);
    }
    CHECK(solved > 100);
}
