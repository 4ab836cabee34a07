#include "filmgrp/core.hpp"

#include <cmath>

#include "filmgrp/roots.hpp"

namespace filmgrp::core {

std::string_view to_string(StateSpaceClass c) {
    switch (c) {
        case StateSpaceClass::U: return "U";
        case StateSpaceClass::U1: return "U1";
        case StateSpaceClass::U2: return "U2";
        case StateSpaceClass::U3: return "U3";
        case StateSpaceClass::U4: return "U4";
        case StateSpaceClass::U5: return "U5";
        case StateSpaceClass::Invalid: return "Invalid";
    }
    return "Invalid";
}

Vec4 flux(const ConservedState& U) {
    const auto [f, b, g, q] = U;
    const double u = f * b;
    return {0.5 * f * f * b, 0.5 * f * b * b, 0.5 * g * g * q + u * g, 0.5 * g * q * q + u * q};
}

Mat4 jacobian(const ConservedState& U) {
    const auto [f, b, g, q] = U;
    const double s = f * b + g * q;
    return {{{f * b, 0.5 * f * f, 0.0, 0.0},
             {0.5 * b * b, f * b, 0.0, 0.0},
             {g * b, f * g, s, 0.5 * g * g},
             {b * q, f * q, 0.5 * q * q, s}}};
}

std::array<double, 4> eigenvalues(const ConservedState& U) {
    const double u = U.f * U.b;
    const double v = U.g * U.q;
    return {1.5 * u, 0.5 * u, u + 0.5 * v, u + 1.5 * v};
}

double max_abs_speed(const ConservedState& U) {
    const auto l = eigenvalues(U);
    return std::max({std::abs(l[0]), std::abs(l[1]), std::abs(l[2]), std::abs(l[3])});
}

EigenDecomposition eigen(const ConservedState& U) {
    const auto [f, b, g, q] = U;
    if (f == 0.0 || b == 0.0 || g == 0.0 || q == 0.0) {
        throw DegenerateState("eigenvectors need f, b, g, q nonzero");
    }
    const double c = f * b - 3.0 * g * q;
    EigenDecomposition e;
    e.lambdas = eigenvalues(U);
    e.rvecs[0] = {c / (4.0 * q * b), c / (4.0 * q * f), g / q, 1.0};
    e.rvecs[1] = {-f / b, 1.0, 0.0, 0.0};
    e.rvecs[2] = {0.0, 0.0, -g / q, 1.0};
    e.rvecs[3] = {0.0, 0.0, g / q, 1.0};
    return e;
}

InvariantState to_invariants(const ConservedState& U) {
    const auto [f, b, g, q] = U;
    if (b == 0.0 || q == 0.0) throw DegenerateState("invariants need b and q nonzero");
    const double v = g * q;
    if (!(v > 0.0)) throw DegenerateState("invariants need gq > 0");
    const double u = f * b;
    return {u, f / b, g / q, (u + v) / std::sqrt(std::sqrt(v)), v};
}

ConservedState from_primitive_invariants(double u, double xi, double tau, double v) {
    if (!(u < 0.0) || !(u * xi > 0.0) || !(v > 0.0) || !(tau > 0.0)) {
        throw DomainError("from_primitive_invariants needs u < 0, u xi > 0, v > 0, tau > 0");
    }
    const double f = std::sqrt(u * xi);
    const double g = std::sqrt(v * tau);
    return {f, u / f, g, g / tau};
}

double v_from_eta(double u, double eta, double /*v_hint*/) {
    if (!(u < 0.0) || !std::isfinite(eta)) throw DomainError("v_from_eta needs u < 0");
    // In w = v^(1/4) the residual w^4 - eta w + u is convex and increasing
    // past its root, so Newton from an upper bound is monotone.
    const double hi = std::fmax(1.0, std::abs(eta) + std::abs(u));
    auto fn = [&](double w) {
        const double w3 = w * w * w;
        const double w4 = w3 * w;
        return roots::Eval{w4 - eta * w + u, 4.0 * w3 - eta,
                           std::fmax(std::abs(u), std::fmax(w4, std::abs(eta * w)))};
    };
    const double w = roots::newton_bisect(fn, 0.0, hi, hi);
    const double w2 = w * w;
    return w2 * w2;
}

StateSpaceClass classify(const ConservedState& U) {
    const auto [f, b, g, q] = U;
    if (!(f > 0.0 && g > 0.0 && q > 0.0)) return StateSpaceClass::Invalid;
    const double u = f * b;
    const double v = g * q;
    if (b < 0.0) {
        if (u + v >= 0.0) return StateSpaceClass::U;
        if (u + 3.0 * v > 0.0) return StateSpaceClass::U1;
        if (u + 3.0 * v < 0.0) return StateSpaceClass::U2;
        return StateSpaceClass::Invalid;
    }
    if (b > 0.0) {
        if (u < v) return StateSpaceClass::U3;
        if (u > v && u < 3.0 * v) return StateSpaceClass::U4;
        if (u > 3.0 * v) return StateSpaceClass::U5;
    }
    return StateSpaceClass::Invalid;
}

bool in_state_space(const ConservedState& U) {
    return classify(U) == StateSpaceClass::U;
}

bool is_admissible(const ConservedState& U) {
    const auto [f, b, g, q] = U;
    return f > 0.0 && g > 0.0 && q > 0.0 && b < 0.0 && f * b + 3.0 * g * q > 0.0;
}

Vec4 space_from_time_derivative(const ConservedState& U, const Vec4& Ut) {
    // Block lower-triangular: the (f, b) block first, then (g, q).
    const auto [f, b, g, q] = U;
    const double u = f * b;
    const double s = u + g * q;
    const double d1 = 0.75 * u * u;
    if (d1 == 0.0) throw DegenerateState("characteristic speed zero in (f, b) block");
    const double fx = -(u * Ut.f - 0.5 * f * f * Ut.b) / d1;
    const double bx = -(-0.5 * b * b * Ut.f + u * Ut.b) / d1;
    const double rg = -Ut.g - (g * b * fx + f * g * bx);
    const double rq = -Ut.q - (b * q * fx + f * q * bx);
    const double d2 = s * s - 0.25 * g * g * q * q;
    if (d2 == 0.0) throw DegenerateState("characteristic speed zero in (g, q) block");
    const double gx = (s * rg - 0.5 * g * g * rq) / d2;
    const double qx = (-0.5 * q * q * rg + s * rq) / d2;
    return {fx, bx, gx, qx};
}

}  // namespace filmgrp::core
