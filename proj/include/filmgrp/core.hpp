#pragma once

#include <array>
#include <string_view>

#include "filmgrp/errors.hpp"
#include "filmgrp/vec4.hpp"

namespace filmgrp::core {

/// Riemann-invariant coordinates of a state.
struct InvariantState {
    double u;    ///< f b
    double xi;   ///< f / b
    double tau;  ///< g / q
    double eta;  ///< (u + v) / v^(1/4)
    double v;    ///< g q
};

struct EigenDecomposition {
    std::array<double, 4> lambdas;
    std::array<Vec4, 4> rvecs;  ///< unnormalized
};

enum class StateSpaceClass { U, U1, U2, U3, U4, U5, Invalid };

std::string_view to_string(StateSpaceClass c);

Vec4 flux(const ConservedState& U);
Mat4 jacobian(const ConservedState& U);

/// Eigenvalues are ordered lambda_1..lambda_4 as in state space U.
EigenDecomposition eigen(const ConservedState& U);
std::array<double, 4> eigenvalues(const ConservedState& U);
double max_abs_speed(const ConservedState& U);

InvariantState to_invariants(const ConservedState& U);
ConservedState from_primitive_invariants(double u, double xi, double tau, double v);

/// Unique v > 0 with u + v = eta v^(1/4), for u < 0.
/// v_hint is accepted for interface compatibility and ignored.
double v_from_eta(double u, double eta, double v_hint = 0.0);

StateSpaceClass classify(const ConservedState& U);

/// Closed state space U: f, g, q > 0, b < 0, fb + gq >= 0.
bool in_state_space(const ConservedState& U);

/// States the solver stack accepts: f, g, q > 0, b < 0 and fb + 3gq > 0.
/// This is U together with U1; wave 1 stays the slowest and wave 4 the
/// fastest family, only the two contacts may swap.
bool is_admissible(const ConservedState& U);

/// Solves U_x from U_t through the quasilinear form U_t + DF U_x = 0.
Vec4 space_from_time_derivative(const ConservedState& U, const Vec4& Ut);

}  // namespace filmgrp::core
