#pragma once

#include <vector>

#include "filmgrp/core.hpp"

namespace filmgrp::scheme {

enum class Boundary { Periodic, Outflow };
enum class LimiterMode { Minmod, UnlimitedCentral };
enum class SchemeKind { GRP2, Godunov, MusclRk2 };

/// Cell averages and slopes on a uniform grid. Cell j covers
/// [x_lo + j dx, x_lo + (j+1) dx].
struct GridState {
    double x_lo = 0.0;
    double x_hi = 1.0;
    int N = 0;
    double dx = 0.0;
    double t = 0.0;
    std::vector<ConservedState> averages;
    std::vector<Vec4> slopes;
    Boundary bc = Boundary::Outflow;

    double x_center(int j) const { return x_lo + (j + 0.5) * dx; }
};

GridState make_grid(double x_lo, double x_hi, int N, Boundary bc);

struct SchemeConfig {
    double cfl = 0.4;
    double theta = 1.0;
    LimiterMode limiter = LimiterMode::Minmod;
    SchemeKind scheme = SchemeKind::GRP2;
    /// Record cells that leave the admissible region instead of throwing.
    bool continue_on_violation = false;
};

/// Throws ValidationError naming the offending field.
void validate(const SchemeConfig& config);

double minmod3(double a, double b, double c);
Vec4 minmod3(const Vec4& a, const Vec4& b, const Vec4& c);

double cfl_dt(const GridState& grid, double cfl);

/// Averages and slopes of the two ghost cells.
struct Ghosts {
    ConservedState left_avg, right_avg;
    Vec4 left_slope, right_slope;
};
Ghosts apply_bc(const GridState& grid);

/// Slopes at t = 0 from cell averages: minmod-theta of one-sided
/// differences, or the central difference in UnlimitedCentral mode.
void initial_slopes(GridState& grid, const SchemeConfig& config);

/// Each step advances grid.t by dt and returns the number of cells whose
/// new average left the admissible region (always 0 unless
/// config.continue_on_violation is set).
int grp_step(GridState& grid, const SchemeConfig& config, double dt);
int godunov_step(GridState& grid, const SchemeConfig& config, double dt);
int muscl_rk2_step(GridState& grid, const SchemeConfig& config, double dt);
int step(GridState& grid, const SchemeConfig& config, double dt);

/// Godunov flux F(R(0; UL, UR)).
Vec4 godunov_flux(const ConservedState& UL, const ConservedState& UR);

Vec4 conserved_totals(const GridState& grid);

struct StepRecord {
    double t;
    double dt;
    Vec4 totals;
};

struct RunResult {
    GridState grid;
    std::vector<StepRecord> log;
    Vec4 totals_start;
    Vec4 totals_end;
    int steps = 0;
    int violations = 0;
    double wall_seconds = 0.0;
};

/// Marches from grid.t to t_end; the last step is clipped to land on t_end.
/// If max_steps > 0 the run also stops after that many steps.
RunResult run_simulation(GridState grid, const SchemeConfig& config, double t_end,
                         bool keep_log = false, int max_steps = 0);

}  // namespace filmgrp::scheme
