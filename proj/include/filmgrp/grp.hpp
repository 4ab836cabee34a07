#pragma once

#include <array>

#include "filmgrp/riemann.hpp"

namespace filmgrp::grp {

/// Instantaneous time derivatives in the three star regions.
struct StarDerivatives {
    Vec4 dL, dM, dR;
};

/// Lax-Wendroff time rates of the data-side invariants.
struct InvariantRates {
    double xi, tau, eta, u;
};

/// Spatial derivatives of u, xi, tau, eta, v from conservative slopes.
struct InvariantSlopes {
    double u, xi, tau, eta, v;
};

/// Three scalar relations A dU/dt = D across one nonlinear wave.
struct WaveRelations {
    std::array<Vec4, 3> A;
    std::array<double, 3> D;
};

/// Coefficients of the third jump relation across a 1-shock. Row entries
/// (A, B, C, D) multiply (f_t, b_t, g_t, q_t) on the post-shock side (star)
/// and on the pre-shock data side (L).
struct ShockCoefficients {
    double theta1_star, theta2_star, theta3_star;
    double theta1_L, theta2_L, theta3_L;
    std::array<double, 6> delta;
    double A_star, B_star, C_star, D_star;
    double A_L, B_L, C_L, D_L;
};

enum class Side { Left, Right };

InvariantSlopes invariant_slopes(const ConservedState& U, const Vec4& dU);
InvariantRates invariant_time_derivs(const ConservedState& U, const Vec4& dU);
inline InvariantRates invariant_time_derivs_left(const ConservedState& UL, const Vec4& dUL) {
    return invariant_time_derivs(UL, dUL);
}

/// -DF(U) dU.
Vec4 lax_wendroff_rate(const ConservedState& U, const Vec4& dU);

double upsilon_tau_left(double v, const ConservedState& UL);

/// Left: coordinate beta in [w1_lo, w1_hi]. Right: coordinate alpha in
/// [w4_lo, w4_hi].
double fan_expansion_ratio(Side side, const riemann::WaveFan& fan, double coordinate);

WaveRelations rarefaction1_system(const riemann::WaveFan& fan, const ConservedState& UL,
                                  const Vec4& dUL, double beta);
ShockCoefficients shock_coefficients(const riemann::WaveFan& fan);
WaveRelations shock1_system(const riemann::WaveFan& fan, const ConservedState& UL,
                            const Vec4& dUL);
WaveRelations shock4_relations(const riemann::WaveFan& fan, const ConservedState& UR,
                               const Vec4& dUR);
WaveRelations rarefaction4_relations(const riemann::WaveFan& fan, const ConservedState& UR,
                                     const Vec4& dUR, double alpha);

StarDerivatives assemble_and_solve(const riemann::WaveFan& fan, const ConservedState& UL,
                                   const Vec4& dUL, const ConservedState& UR, const Vec4& dUR);
StarDerivatives acoustic_solve(const ConservedState& U0, const Vec4& dUL, const Vec4& dUR);

struct InterfaceValue {
    ConservedState U;
    Vec4 dUdt;
};

/// Relative inf-norm jump below which the acoustic path is taken.
inline constexpr double acoustic_tol = 1e-12;

InterfaceValue grp_interface(const ConservedState& UL, const Vec4& dUL,
                             const ConservedState& UR, const Vec4& dUR);

}  // namespace filmgrp::grp
