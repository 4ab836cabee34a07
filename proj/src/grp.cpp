#include "filmgrp/grp.hpp"

#include <cmath>

namespace filmgrp::grp {

namespace {

using riemann::WaveFan;
using riemann::WaveKind;

struct Sol2 {
    double x, y;
};

// Solves [a11 a12; a21 a22] (x, y) = (r1, r2).
Sol2 solve2(double a11, double a12, double a21, double a22, double r1, double r2,
            const char* what) {
    const double det = a11 * a22 - a12 * a21;
    const double scale = std::abs(a11 * a22) + std::abs(a12 * a21);
    if (!(std::abs(det) > 1e-14 * scale)) throw SingularSystem(what);
    return {(r1 * a22 - a12 * r2) / det, (a11 * r2 - a21 * r1) / det};
}

double theta1(double u, double v) { return 2.0 / (2.0 * u + 3.0 * v); }
double theta2(double u, double v) { return 2.0 / ((2.0 * u + 3.0 * v) * (2.0 * u + v)); }
double theta3(double u, double v) {
    return 4.0 * (u + v) / ((2.0 * u + 3.0 * v) * (2.0 * u + v));
}

// tau_t on the far side of a 4-wave, expressed through the right data slope.
double tau_rate_behind_4wave(double u, double v, double vR, double tau_x_R) {
    return -0.5 * (2.0 * u + v) * std::sqrt(v / vR) * tau_x_R;
}

}  // namespace

InvariantSlopes invariant_slopes(const ConservedState& U, const Vec4& dU) {
    const auto [f, b, g, q] = U;
    const double u = f * b;
    const double v = g * q;
    InvariantSlopes s{};
    s.u = b * dU.f + f * dU.b;
    s.v = q * dU.g + g * dU.q;
    s.xi = dU.f / b - f * dU.b / (b * b);
    s.tau = dU.g / q - g * dU.q / (q * q);
    s.eta = (s.u + (3.0 * v - u) / (4.0 * v) * s.v) / std::sqrt(std::sqrt(v));
    return s;
}

InvariantRates invariant_time_derivs(const ConservedState& U, const Vec4& dU) {
    const double u = U.f * U.b;
    const double v = U.g * U.q;
    const auto s = invariant_slopes(U, dU);
    return {-0.5 * u * s.xi, -(u + 0.5 * v) * s.tau, -(u + 1.5 * v) * s.eta, -1.5 * u * s.u};
}

Vec4 lax_wendroff_rate(const ConservedState& U, const Vec4& dU) {
    return -(core::jacobian(U) * dU);
}

double upsilon_tau_left(double v, const ConservedState& UL) {
    const double vL = UL.g * UL.q;
    const double v34 = std::pow(v, 0.75);
    return v34 / std::sqrt(vL) * ((UL.f * UL.b + vL) / std::pow(vL, 0.25) - 2.0 * v34);
}

double fan_expansion_ratio(Side side, const WaveFan& fan, double coordinate) {
    if (side == Side::Left) {
        if (fan.config.wave1 != WaveKind::Rarefaction) {
            throw ConfigMismatch("fan_expansion_ratio: wave 1 is a shock");
        }
        const auto L = core::to_invariants(fan.UL);
        const double v = coordinate == fan.w1_hi ? fan.vstar
                         : coordinate == fan.w1_lo ? L.v
                                                   : core::v_from_eta(2.0 * coordinate / 3.0, L.eta);
        return std::pow(L.v / v, 0.75);
    }
    if (fan.config.wave4 != WaveKind::Rarefaction) {
        throw ConfigMismatch("fan_expansion_ratio: wave 4 is a shock");
    }
    const double uR = fan.UR.f * fan.UR.b;
    const double vR = fan.UR.g * fan.UR.q;
    const double v = coordinate == fan.w4_hi ? vR
                     : coordinate == fan.w4_lo ? fan.vstar
                                               : 2.0 * (coordinate - fan.ustar) / 3.0;
    return (uR - 3.0 * vR) / (uR - 3.0 * v);
}

WaveRelations rarefaction1_system(const WaveFan& fan, const ConservedState& UL,
                                  const Vec4& dUL, double beta) {
    if (fan.config.wave1 != WaveKind::Rarefaction) {
        throw ConfigMismatch("rarefaction1_system called for a 1-shock");
    }
    const double span = std::abs(fan.w1_hi - fan.w1_lo);
    const double slack = 1e-12 * std::fmax(1.0, std::abs(fan.w1_hi));
    if (beta < fan.w1_lo - slack || beta > fan.w1_hi + slack) {
        throw DomainError("beta outside the 1-rarefaction fan");
    }
    const auto L = core::to_invariants(UL);
    ConservedState U;
    if (beta == fan.w1_hi || span == 0.0) {
        U = fan.UstarL;
    } else if (beta == fan.w1_lo) {
        U = UL;
    } else {
        const double u = 2.0 * beta / 3.0;
        U = core::from_primitive_invariants(u, L.xi, L.tau, core::v_from_eta(u, L.eta));
    }
    const auto [f, b, g, q] = U;
    const double u = f * b;
    const double v = g * q;
    const auto sL = invariant_slopes(UL, dUL);

    WaveRelations r{};
    r.A[0] = {1.0 / b, -f / (b * b), 0.0, 0.0};
    r.A[1] = {0.0, 0.0, 1.0 / q, -g / (q * q)};
    r.A[2] = {b, f, (3.0 * v - u) / (4.0 * g), (3.0 * v - u) / (4.0 * q)};

    // xi_t, tau_t and (v^{1/4} eta_t) at the fan point, written with the
    // left slopes so that 2uL + vL = 0 or 2uL + 3vL = 0 stays regular.
    r.D[0] = std::pow(u / L.u, 1.5) * (-0.5 * L.u * sL.xi);
    r.D[1] = -0.5 * upsilon_tau_left(v, UL) * sL.tau * (2.0 * u + v) / (u - v);
    r.D[2] = -0.5 * (3.0 * L.v - L.u) / std::pow(L.v, 0.75) * sL.eta * (2.0 * u + 3.0 * v) * v /
             (3.0 * v - u);
    return r;
}

ShockCoefficients shock_coefficients(const WaveFan& fan) {
    if (fan.config.wave1 != WaveKind::Shock) {
        throw ConfigMismatch("shock_coefficients called for a 1-rarefaction");
    }
    const auto [fL, bL, gL, qL] = fan.UL;
    const auto [fs, bs, gs, qs] = fan.UstarL;
    const double uL = fL * bL;
    const double vL = gL * qL;
    const double us = fs * bs;
    const double vs = gs * qs;
    const double sig = fan.sigma1();

    ShockCoefficients c{};
    c.theta1_star = theta1(us, vs);
    c.theta2_star = theta2(us, vs);
    c.theta3_star = theta3(us, vs);
    c.theta1_L = theta1(uL, vL);
    c.theta2_L = theta2(uL, vL);
    c.theta3_L = theta3(uL, vL);

    auto& d = c.delta;
    d[0] = vL * gL + (uL - us) * (gL + 0.5 * gs) - fs * bL * (gL - 0.5 * gs);
    d[1] = bL * (gs + gL);
    d[2] = fL * (gs + gL) + fs * (gs - gL);
    d[3] = 2.0 * vL + uL - us - fs * bL;
    d[4] = bs * (gL + gs) + bL * (gL - gs);
    d[5] = fs * (gL + gs);

    const double ks = 1.0 - 4.0 * sig / (3.0 * us);
    const double ms = qs * gs * gs + 2.0 * d[0];
    c.A_star = ks * d[4] + 2.0 * sig / (3.0 * fs * fs) * d[5] +
               2.0 * sig * c.theta1_star / (3.0 * fs) * ms;
    c.B_star = ks * d[5] + 2.0 * sig / (3.0 * bs * bs) * d[4] +
               2.0 * sig * c.theta1_star / (3.0 * bs) * ms;
    c.C_star = sig * c.theta2_star * vs * vs + 2.0 * d[0] / gs * (1.0 - sig * c.theta3_star);
    c.D_star = gs * gs * (1.0 - sig * c.theta3_star) + 2.0 * gs * sig * d[0] * c.theta2_star;

    const double kL = 1.0 - 4.0 * sig / (3.0 * uL);
    const double mL = qL * gL * gL + d[3] * gL;
    c.A_L = d[1] * kL + 2.0 * sig / (3.0 * fL * fL) * d[2] + 2.0 * sig * c.theta1_L / (3.0 * fL) * mL;
    c.B_L = 2.0 * sig / (3.0 * bL * bL) * d[1] + d[2] * kL + 2.0 * sig * c.theta1_L / (3.0 * bL) * mL;
    c.C_L = vL * vL * sig * c.theta2_L + (1.0 - sig * c.theta3_L) * d[3];
    c.D_L = gL * gL * (1.0 - sig * c.theta3_L + sig * c.theta2_L * d[3]);
    return c;
}

WaveRelations shock1_system(const WaveFan& fan, const ConservedState& UL, const Vec4& dUL) {
    const auto c = shock_coefficients(fan);
    const auto [f, b, g, q] = fan.UstarL;
    const double u = f * b;
    const double v = g * q;
    const auto L = core::to_invariants(UL);
    const auto sL = invariant_slopes(UL, dUL);
    const double sig = fan.sigma1();

    WaveRelations r{};
    r.A[0] = {1.0 / b, -f / (b * b), 0.0, 0.0};
    r.A[1] = {0.0, 0.0, 1.0 / q, -g / (q * q)};
    r.A[2] = {c.A_star, c.B_star, c.C_star, c.D_star};

    r.D[0] = std::pow(u / L.u, 1.5) * (-0.5 * L.u * sL.xi);
    const double den = 2.0 * u + v - 2.0 * sig;
    if (den == 0.0) throw DegenerateState("2-contact coincides with the 1-shock");
    r.D[1] = -0.5 * (2.0 * u + v) * (2.0 * L.u + L.v - 2.0 * sig) / den * sL.tau;
    const Vec4 UtL = lax_wendroff_rate(UL, dUL);
    r.D[2] = c.A_L * UtL.f + c.B_L * UtL.b + c.C_L * UtL.g + c.D_L * UtL.q;
    return r;
}

WaveRelations shock4_relations(const WaveFan& fan, const ConservedState& UR, const Vec4& dUR) {
    if (fan.config.wave4 != WaveKind::Shock) {
        throw ConfigMismatch("shock4_relations called for a 4-rarefaction");
    }
    const auto rates = invariant_time_derivs(UR, dUR);
    const auto sR = invariant_slopes(UR, dUR);
    const auto [f, b, g, q] = fan.UstarR;
    WaveRelations r{};
    r.A[0] = {b, f, 0.0, 0.0};
    r.A[1] = {1.0 / b, -f / (b * b), 0.0, 0.0};
    r.A[2] = {0.0, 0.0, 1.0 / q, -g / (q * q)};
    r.D[0] = rates.u;
    r.D[1] = rates.xi;
    r.D[2] = tau_rate_behind_4wave(fan.ustar, fan.vstar, UR.g * UR.q, sR.tau);
    return r;
}

WaveRelations rarefaction4_relations(const WaveFan& fan, const ConservedState& UR,
                                     const Vec4& dUR, double alpha) {
    if (fan.config.wave4 != WaveKind::Rarefaction) {
        throw ConfigMismatch("rarefaction4_relations called for a 4-shock");
    }
    const double slack = 1e-12 * std::fmax(1.0, std::abs(fan.w4_hi));
    if (alpha < fan.w4_lo - slack || alpha > fan.w4_hi + slack) {
        throw DomainError("alpha outside the 4-rarefaction fan");
    }
    const double vR = UR.g * UR.q;
    const double tauR = UR.g / UR.q;
    double v;
    if (alpha == fan.w4_lo) v = fan.vstar;
    else if (alpha == fan.w4_hi) v = vR;
    else v = 2.0 * (alpha - fan.ustar) / 3.0;
    const double g = std::sqrt(v * tauR);
    const double q = g / tauR;
    const auto rates = invariant_time_derivs(UR, dUR);
    const auto sR = invariant_slopes(UR, dUR);
    const double f = UR.f;
    const double b = UR.b;
    WaveRelations r{};
    r.A[0] = {b, f, 0.0, 0.0};
    r.A[1] = {1.0 / b, -f / (b * b), 0.0, 0.0};
    r.A[2] = {0.0, 0.0, 1.0 / q, -g / (q * q)};
    r.D[0] = rates.u;
    r.D[1] = rates.xi;
    r.D[2] = tau_rate_behind_4wave(fan.ustar, v, vR, sR.tau);
    return r;
}

StarDerivatives assemble_and_solve(const WaveFan& fan, const ConservedState& UL,
                                   const Vec4& dUL, const ConservedState& UR, const Vec4& dUR) {
    const WaveRelations left = fan.config.wave1 == WaveKind::Rarefaction
                                   ? rarefaction1_system(fan, UL, dUL, fan.w1_hi)
                                   : shock1_system(fan, UL, dUL);
    const WaveRelations right = fan.config.wave4 == WaveKind::Shock
                                    ? shock4_relations(fan, UR, dUR)
                                    : rarefaction4_relations(fan, UR, dUR, fan.w4_lo);
    const double ut = right.D[0];

    // (f, b) on the left of J2: u_t is continuous across the contacts.
    const auto& sL = fan.UstarL;
    const auto fbL = solve2(sL.b, sL.f, left.A[0].f, left.A[0].b, ut, left.D[0],
                            "left (f, b) block");
    // (g, q) on the left of J3.
    const auto& row3 = left.A[2];
    const double r3 = left.D[2] - row3.f * fbL.x - row3.b * fbL.y;
    const auto gqL = solve2(row3.g, row3.q, left.A[1].g, left.A[1].q, r3, left.D[1],
                            "left (g, q) block");
    // (g, q) on the right of J3: v_t continuous, tau_t from wave 4.
    const auto& sR = fan.UstarR;
    const double vt = fan.UstarL.q * gqL.x + fan.UstarL.g * gqL.y;
    const auto gqR = solve2(sR.q, sR.g, right.A[2].g, right.A[2].q, vt, right.D[2],
                            "right (g, q) block");
    const auto fbR = solve2(right.A[0].f, right.A[0].b, right.A[1].f, right.A[1].b, right.D[0],
                            right.D[1], "right (f, b) block");

    StarDerivatives d;
    d.dL = {fbL.x, fbL.y, gqL.x, gqL.y};
    d.dR = {fbR.x, fbR.y, gqR.x, gqR.y};
    d.dM = fan.contacts_swapped() ? Vec4{fbL.x, fbL.y, gqR.x, gqR.y}
                                  : Vec4{fbR.x, fbR.y, gqL.x, gqL.y};
    return d;
}

StarDerivatives acoustic_solve(const ConservedState& U0, const Vec4& dUL, const Vec4& dUR) {
    const auto [f, b, g, q] = U0;
    const double u = f * b;
    const double v = g * q;
    const auto sL = invariant_slopes(U0, dUL);
    const auto sR = invariant_slopes(U0, dUR);

    const double ut = -1.5 * u * sR.u;
    const auto fbL = solve2(b, f, 1.0 / b, -f / (b * b), ut, -0.5 * u * sL.xi,
                            "acoustic left (f, b) block");
    const double d3 = 4.0 * v / (3.0 * v - u) *
                      (1.5 * u * sR.u -
                       (u + 1.5 * v) * (sL.u + sL.v * (0.75 - u / (4.0 * v))));
    const auto gqL = solve2(q, g, 1.0 / q, -g / (q * q), d3, -0.5 * (2.0 * u + v) * sL.tau,
                            "acoustic left (g, q) block");
    const double vt = q * gqL.x + g * gqL.y;
    const auto gqR = solve2(q, g, 1.0 / q, -g / (q * q), vt, -0.5 * (2.0 * u + v) * sR.tau,
                            "acoustic right (g, q) block");
    const auto fbR = solve2(b, f, 1.0 / b, -f / (b * b), ut, -0.5 * u * sR.xi,
                            "acoustic right (f, b) block");

    StarDerivatives d;
    d.dL = {fbL.x, fbL.y, gqL.x, gqL.y};
    d.dR = {fbR.x, fbR.y, gqR.x, gqR.y};
    const bool swapped = u + 0.5 * v < 0.5 * u;
    d.dM = swapped ? Vec4{fbL.x, fbL.y, gqR.x, gqR.y} : Vec4{fbR.x, fbR.y, gqL.x, gqL.y};
    return d;
}

InterfaceValue grp_interface(const ConservedState& UL, const Vec4& dUL,
                             const ConservedState& UR, const Vec4& dUR) {
    if (norm_inf(UL - UR) <= acoustic_tol * std::fmax(1.0, norm_inf(UL))) {
        if (!core::is_admissible(UL)) throw DomainError("interface state not admissible");
        const double u = UL.f * UL.b;
        const double v = UL.g * UL.q;
        if (u + 1.5 * v <= 0.0) {
            // 4-characteristic moves left: x = 0 sees the right data.
            return {UL, lax_wendroff_rate(UL, dUR)};
        }
        const auto d = acoustic_solve(UL, dUL, dUR);
        return {UL, u + 0.5 * v > 0.0 ? d.dM : d.dR};
    }
    const auto fan = riemann::solve_star_states(UL, UR);
    if (fan.w4_hi <= 0.0) return {UR, lax_wendroff_rate(UR, dUR)};
    if (fan.w4_lo < 0.0) throw ConfigMismatch("sonic 4-rarefaction at the interface");
    const auto d = assemble_and_solve(fan, UL, dUL, UR, dUR);
    const ConservedState U = riemann::sample(fan, 0.0);
    if (fan.contacts_swapped()) return {U, d.dR};
    return {U, fan.sigma3 > 0.0 ? d.dM : d.dR};
}

}  // namespace filmgrp::grp
