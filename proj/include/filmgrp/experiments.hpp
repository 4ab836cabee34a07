#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "filmgrp/riemann.hpp"
#include "filmgrp/scheme.hpp"

namespace filmgrp::experiments {

/// 2 pi periodic travelling wave moving left with unit speed.
ConservedState travelling_wave_exact(double x, double t);
/// d/dx of travelling_wave_exact.
Vec4 travelling_wave_dx(double x, double t);

struct Norms {
    double L1 = 0.0, L2 = 0.0, Linf = 0.0;
};

/// Norms per variable in (f, b, g, q) order.
struct ErrorReport {
    std::array<Norms, 4> vars{};
    double wall_seconds = 0.0;
};

/// Errors of the cell averages against exact values at cell midpoints.
ErrorReport error_norms(const scheme::GridState& grid,
                        const std::function<ConservedState(double)>& exact);

/// log2(e_N / e_2N).
double observed_order(double e_N, double e_2N);

enum class InitialKind { Riemann, TravellingWave, Gaussian };

struct InitialData {
    InitialKind kind = InitialKind::Riemann;
    ConservedState left{}, right{};
    double jump = 0.0;
};

struct TestCase {
    std::string name;
    double x_lo = 0.0, x_hi = 1.0;
    InitialData init;
    double t_end = 0.0;
    std::vector<double> snapshots;
    int N = 100;
    double cfl = 0.4;
    double theta = 1.0;
    scheme::LimiterMode limiter = scheme::LimiterMode::Minmod;
    scheme::Boundary bc = scheme::Boundary::Outflow;
};

/// Example cases "example5.1" .. "example5.6".
std::vector<TestCase> builtin_cases();
/// Throws ValidationError for an unknown name.
TestCase find_case(const std::string& name);

ConservedState initial_state(const InitialData& init, double x);

/// Cell averages by Gauss quadrature (exact split for Riemann data) and
/// slopes from scheme::initial_slopes. Godunov grids keep zero slopes.
scheme::GridState initial_grid(const TestCase& tc, const scheme::SchemeConfig& config);

scheme::SchemeConfig config_for(const TestCase& tc, scheme::SchemeKind kind);

struct ConvergenceRow {
    int N = 0;
    scheme::SchemeKind scheme = scheme::SchemeKind::GRP2;
    ErrorReport errors;
    /// NaN on the coarsest row.
    std::array<Norms, 4> orders{};
};

/// One travelling-wave run with the settings of convergence_study.
ErrorReport travelling_wave_errors(scheme::SchemeKind kind, int N, double muscl_theta = 1.5,
                                   double t_end = 3.0);

/// Orders between consecutive rows (rows sorted by N, same scheme).
void fill_orders(std::vector<ConvergenceRow>& rows);

/// Travelling wave on [0, 2 pi], periodic, t = 3, CFL 0.4. GRP uses the
/// unlimited central slope update; MUSCL uses minmod-theta slopes.
std::vector<ConvergenceRow> convergence_study(scheme::SchemeKind kind,
                                              const std::vector<int>& Ns,
                                              double muscl_theta = 1.5, double t_end = 3.0);

/// L1 distance per variable, dx sum |U_j - exact(x_j)|, to the exact
/// Riemann solution centred at x0.
std::array<double, 4> riemann_l1_distance(const scheme::GridState& grid,
                                          const riemann::WaveFan& fan, double x0, double t);

struct OracleOptions {
    /// 0 picks delta so that delta |U'| S is about 5e-3 max(1, |U|).
    double delta = 0.0;
    int N_ref = 4000;
    bool richardson = true;
};

/// Finite-difference estimate of dU/dt at x = 0 for piecewise-linear data,
/// from fine first-order Godunov runs. The piecewise-constant run on the
/// same grid is subtracted so that its smearing cancels.
Vec4 fd_derivative_oracle(const ConservedState& UL, const Vec4& dUL, const ConservedState& UR,
                          const Vec4& dUR, const OracleOptions& opt = {});

struct GrpCheckCase {
    std::string name;
    ConservedState UL, UR;
    Vec4 dUL, dUR;
};

/// Fixed data sets covering R1/S1 with R4/S4, the acoustic case and zero
/// slopes.
std::vector<GrpCheckCase> grp_check_suite();

struct GrpCheckRow {
    std::string name;
    std::string structure;
    Vec4 grp;
    Vec4 oracle;
    double max_rel_err = 0.0;
    bool pass = false;
};

GrpCheckRow run_grp_check(const GrpCheckCase& c, const OracleOptions& opt = {});

/// Per-component agreement: relative error <= rel_tol, except where either
/// value is below `small` in magnitude, which is compared absolutely.
bool components_agree(const Vec4& value, const Vec4& reference, double rel_tol = 0.05,
                      double small = 1e-8, double abs_tol = 1e-6);

/// Largest relative error over components where both values are >= small.
double max_relative_error(const Vec4& value, const Vec4& reference, double small = 1e-8);

}  // namespace filmgrp::experiments
