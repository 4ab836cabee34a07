#pragma once

#include <string>

#include "filmgrp/core.hpp"

namespace filmgrp::riemann {

enum class WaveKind { Rarefaction, Shock };

struct WaveConfig {
    WaveKind wave1;
    WaveKind wave4;
};

/// Self-similar solution of the Riemann problem with data (UL, UR).
///
/// Wave 1 occupies [w1_lo, w1_hi] and wave 4 occupies [w4_lo, w4_hi]; for a
/// shock both bounds equal the shock speed. UstarM is the state between the
/// two contacts. In U the 2-contact comes first; data from U1 may swap them,
/// in which case UstarM carries (f, b) from the left star state and (g, q)
/// from the right one.
struct WaveFan {
    ConservedState UL, UR;
    ConservedState UstarL, UstarM, UstarR;
    WaveConfig config;
    double ustar;
    double vstar;
    double w1_lo, w1_hi;
    double sigma2, sigma3;
    double w4_lo, w4_hi;

    double sigma1() const { return w1_lo; }
    double sigma4() const { return w4_lo; }
    bool contacts_swapped() const { return sigma3 < sigma2; }
    /// Star states lie in the closed state space U.
    bool stars_in_state_space() const;
    /// For example "R1 + J2 + J3 + S4".
    std::string structure() const;
};

/// Relative threshold below which a nonlinear wave counts as a zero-width
/// rarefaction.
inline constexpr double zero_strength_tol = 1e-14;

/// Throws DomainError unless both data states and all star states are
/// admissible (see core::is_admissible).
WaveFan solve_star_states(const ConservedState& UL, const ConservedState& UR);

/// State at similarity coordinate s = x/t. Ties at a discontinuity return
/// the state on its right.
ConservedState sample(const WaveFan& fan, double s);

/// sigma [[U]] - [[F(U)]] with [[w]] = w(Ur) - w(Ul).
Vec4 rh_residual(const ConservedState& Ul, const ConservedState& Ur, double sigma);

}  // namespace filmgrp::riemann
