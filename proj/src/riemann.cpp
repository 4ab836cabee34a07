#include "filmgrp/riemann.hpp"

#include <cmath>

#include "filmgrp/roots.hpp"

namespace filmgrp::riemann {

namespace {

// Positive root g of the S1 relation
//   sigma1 (g - gL) = g^3/(2 tauL) + ustar g - gL^3/(2 tauL) - uL gL,
// which is the g-component of the jump conditions once q = g / tauL.
// The cubic is convex on g > 0 and negative at 0, so the root is unique.
double s1_star_g(double uL, double gL, double vL, double tauL, double ustar, double sigma1) {
    const double a = 0.5 / tauL;
    const double c1 = ustar - sigma1;
    const double c0 = gL * (0.5 * vL + uL - sigma1);
    auto fn = [&](double g) {
        const double g3 = a * g * g * g;
        return roots::Eval{g3 + c1 * g - c0, 3.0 * a * g * g + c1,
                           std::fmax(g3, std::fmax(std::abs(c1 * g), std::abs(c0)))};
    };
    double hi = std::fmax(gL, 1.0);
    for (int k = 0; fn(hi).h <= 0.0; ++k) {
        if (k > 200) throw NoRoot("S1 relation: no upper bracket");
        hi *= 2.0;
    }
    return roots::newton_bisect(fn, 0.0, hi, hi);
}

}  // namespace

bool WaveFan::stars_in_state_space() const {
    return core::in_state_space(UstarL) && core::in_state_space(UstarM) &&
           core::in_state_space(UstarR);
}

std::string WaveFan::structure() const {
    std::string s = config.wave1 == WaveKind::Shock ? "S1" : "R1";
    s += contacts_swapped() ? " + J3 + J2" : " + J2 + J3";
    s += config.wave4 == WaveKind::Shock ? " + S4" : " + R4";
    return s;
}

WaveFan solve_star_states(const ConservedState& UL, const ConservedState& UR) {
    if (!core::is_admissible(UL) || !core::is_admissible(UR)) {
        throw DomainError("Riemann data outside the admissible state region");
    }
    const auto L = core::to_invariants(UL);
    const auto R = core::to_invariants(UR);

    WaveFan fan{};
    fan.UL = UL;
    fan.UR = UR;
    if (UL == UR) {
        fan.config = {WaveKind::Rarefaction, WaveKind::Rarefaction};
        fan.UstarL = fan.UstarM = fan.UstarR = UL;
        fan.ustar = L.u;
        fan.vstar = L.v;
        fan.w1_lo = fan.w1_hi = 1.5 * L.u;
        fan.sigma2 = 0.5 * L.u;
        fan.sigma3 = L.u + 0.5 * L.v;
        fan.w4_lo = fan.w4_hi = L.u + 1.5 * L.v;
        return fan;
    }
    const double us = R.u;
    fan.ustar = us;

    const double fsL = std::sqrt(us * L.xi);
    const double bsL = us / fsL;

    const bool weak1 = std::abs(us - L.u) <= zero_strength_tol * std::fmax(1.0, std::abs(L.u));
    double gsL = 0.0;
    double vs = 0.0;
    if (us >= L.u || weak1) {
        fan.config.wave1 = WaveKind::Rarefaction;
        vs = core::v_from_eta(us, L.eta);
        gsL = std::sqrt(vs * L.tau);
        fan.w1_lo = 1.5 * L.u;
        fan.w1_hi = 1.5 * us;
    } else {
        fan.config.wave1 = WaveKind::Shock;
        const double sigma1 = UL.b * (UL.f * UL.f + UL.f * fsL + fsL * fsL) / (2.0 * UL.f);
        gsL = s1_star_g(L.u, UL.g, L.v, L.tau, us, sigma1);
        vs = gsL * gsL / L.tau;
        fan.w1_lo = fan.w1_hi = sigma1;
    }
    fan.vstar = vs;
    fan.UstarL = {fsL, bsL, gsL, gsL / L.tau};

    const double gsR = std::sqrt(vs * R.tau);
    fan.UstarR = {UR.f, UR.b, gsR, gsR / R.tau};

    fan.sigma2 = 0.5 * us;
    fan.sigma3 = us + 0.5 * vs;
    fan.UstarM = fan.contacts_swapped() ? ConservedState{fsL, bsL, gsR, gsR / R.tau}
                                        : ConservedState{UR.f, UR.b, gsL, gsL / L.tau};

    const bool weak4 = std::abs(vs - R.v) <= zero_strength_tol * std::fmax(1.0, R.v);
    if (vs > R.v && !weak4) {
        fan.config.wave4 = WaveKind::Shock;
        const double gR = UR.g;
        const double sigma4 =
            us + fan.UstarR.q * (gsR * gsR + gsR * gR + gR * gR) / (2.0 * gsR);
        fan.w4_lo = fan.w4_hi = sigma4;
    } else {
        fan.config.wave4 = WaveKind::Rarefaction;
        fan.w4_lo = us + 1.5 * vs;
        fan.w4_hi = us + 1.5 * R.v;
    }

    if (!core::is_admissible(fan.UstarL) || !core::is_admissible(fan.UstarM) ||
        !core::is_admissible(fan.UstarR)) {
        throw DomainError("Riemann star state outside the admissible state region");
    }
    return fan;
}

ConservedState sample(const WaveFan& fan, double s) {
    if (s < fan.w1_lo) return fan.UL;
    if (s < fan.w1_hi) {
        const auto L = core::to_invariants(fan.UL);
        const double u = 2.0 * s / 3.0;
        return core::from_primitive_invariants(u, L.xi, L.tau, core::v_from_eta(u, L.eta));
    }
    const double c_lo = std::fmin(fan.sigma2, fan.sigma3);
    const double c_hi = std::fmax(fan.sigma2, fan.sigma3);
    if (s < c_lo) return fan.UstarL;
    if (s < c_hi) return fan.UstarM;
    if (s < fan.w4_lo) return fan.UstarR;
    if (s < fan.w4_hi) {
        const double tauR = fan.UR.g / fan.UR.q;
        const double v = 2.0 * (s - fan.ustar) / 3.0;
        const double g = std::sqrt(v * tauR);
        return {fan.UR.f, fan.UR.b, g, g / tauR};
    }
    return fan.UR;
}

Vec4 rh_residual(const ConservedState& Ul, const ConservedState& Ur, double sigma) {
    return sigma * (Ur - Ul) - (core::flux(Ur) - core::flux(Ul));
}

}  // namespace filmgrp::riemann
