#include "filmgrp/scheme.hpp"

#include <chrono>
#include <cmath>

#include "filmgrp/grp.hpp"
#include "filmgrp/riemann.hpp"

namespace filmgrp::scheme {

namespace {

// Averages and slopes with one ghost cell on each side: index k holds
// cell k - 1.
struct Extended {
    std::vector<ConservedState> U;
    std::vector<Vec4> s;
};

Extended extend(const GridState& grid) {
    const auto gh = apply_bc(grid);
    Extended e;
    e.U.reserve(grid.N + 2);
    e.s.reserve(grid.N + 2);
    e.U.push_back(gh.left_avg);
    e.s.push_back(gh.left_slope);
    e.U.insert(e.U.end(), grid.averages.begin(), grid.averages.end());
    e.s.insert(e.s.end(), grid.slopes.begin(), grid.slopes.end());
    e.U.push_back(gh.right_avg);
    e.s.push_back(gh.right_slope);
    return e;
}

int conservative_update(GridState& grid, const std::vector<Vec4>& F, double dt,
                        const SchemeConfig& config) {
    const double r = dt / grid.dx;
    int bad = 0;
    for (int j = 0; j < grid.N; ++j) {
        grid.averages[j] -= r * (F[j + 1] - F[j]);
        if (!core::is_admissible(grid.averages[j])) {
            if (!config.continue_on_violation) {
                throw StateSpaceViolation(static_cast<std::size_t>(j),
                                          "updated average left the admissible region");
            }
            ++bad;
        }
    }
    return bad;
}

// Slopes limited against neighbouring averages; `mid[j]` is the middle
// candidate for cell j.
void limit_slopes(GridState& grid, const std::vector<Vec4>& mid, double theta) {
    grid.slopes.assign(grid.N, Vec4{});
    const auto e = extend(grid);
    for (int j = 0; j < grid.N; ++j) {
        const Vec4 back = theta * (e.U[j + 1] - e.U[j]) / grid.dx;
        const Vec4 fwd = theta * (e.U[j + 2] - e.U[j + 1]) / grid.dx;
        grid.slopes[j] = minmod3(back, mid[j], fwd);
    }
}

// Semi-discrete right-hand side of the MUSCL baseline.
std::vector<Vec4> muscl_rhs(const GridState& grid, const SchemeConfig& config) {
    const auto e = extend(grid);
    const int n = grid.N;
    std::vector<Vec4> slope(n + 2);
    for (int k = 1; k <= n; ++k) {
        const Vec4 central = (e.U[k + 1] - e.U[k - 1]) / (2.0 * grid.dx);
        if (config.limiter == LimiterMode::UnlimitedCentral) {
            slope[k] = central;
        } else {
            slope[k] = minmod3(config.theta * (e.U[k] - e.U[k - 1]) / grid.dx, central,
                               config.theta * (e.U[k + 1] - e.U[k]) / grid.dx);
        }
    }
    if (grid.bc == Boundary::Periodic) {
        slope[0] = slope[n];
        slope[n + 1] = slope[1];
    }
    std::vector<Vec4> F(n + 1);
    const double h = 0.5 * grid.dx;
    for (int k = 0; k <= n; ++k) {
        F[k] = godunov_flux(e.U[k] + h * slope[k], e.U[k + 1] - h * slope[k + 1]);
    }
    std::vector<Vec4> L(n);
    for (int j = 0; j < n; ++j) L[j] = -(F[j + 1] - F[j]) / grid.dx;
    return L;
}

}  // namespace

GridState make_grid(double x_lo, double x_hi, int N, Boundary bc) {
    if (!(x_hi > x_lo) || N <= 0) throw ValidationError("grid", "need x_hi > x_lo and N > 0");
    GridState g;
    g.x_lo = x_lo;
    g.x_hi = x_hi;
    g.N = N;
    g.dx = (x_hi - x_lo) / N;
    g.averages.assign(N, ConservedState{});
    g.slopes.assign(N, Vec4{});
    g.bc = bc;
    return g;
}

void validate(const SchemeConfig& config) {
    if (!(config.cfl > 0.0 && config.cfl <= 1.0)) throw ValidationError("cfl", "must lie in (0, 1]");
    if (!(config.theta >= 0.0 && config.theta < 2.0)) {
        throw ValidationError("theta", "must lie in [0, 2)");
    }
}

double minmod3(double a, double b, double c) {
    if (a > 0.0 && b > 0.0 && c > 0.0) return std::fmin(a, std::fmin(b, c));
    if (a < 0.0 && b < 0.0 && c < 0.0) return std::fmax(a, std::fmax(b, c));
    return 0.0;
}

Vec4 minmod3(const Vec4& a, const Vec4& b, const Vec4& c) {
    return {minmod3(a.f, b.f, c.f), minmod3(a.b, b.b, c.b), minmod3(a.g, b.g, c.g),
            minmod3(a.q, b.q, c.q)};
}

double cfl_dt(const GridState& grid, double cfl) {
    if (!(cfl > 0.0)) throw ValidationError("cfl", "must be positive");
    double smax = 0.0;
    for (const auto& U : grid.averages) smax = std::fmax(smax, core::max_abs_speed(U));
    if (!(smax > 0.0)) throw DegenerateState("maximum characteristic speed is zero");
    return cfl * grid.dx / smax;
}

Ghosts apply_bc(const GridState& grid) {
    if (grid.bc == Boundary::Periodic) {
        return {grid.averages.back(), grid.averages.front(), grid.slopes.back(),
                grid.slopes.front()};
    }
    return {grid.averages.front(), grid.averages.back(), Vec4{}, Vec4{}};
}

void initial_slopes(GridState& grid, const SchemeConfig& config) {
    const auto e = extend(grid);
    grid.slopes.assign(grid.N, Vec4{});
    for (int j = 0; j < grid.N; ++j) {
        const Vec4 central = (e.U[j + 2] - e.U[j]) / (2.0 * grid.dx);
        if (config.limiter == LimiterMode::UnlimitedCentral) {
            grid.slopes[j] = central;
        } else {
            grid.slopes[j] = minmod3(config.theta * (e.U[j + 1] - e.U[j]) / grid.dx, central,
                                     config.theta * (e.U[j + 2] - e.U[j + 1]) / grid.dx);
        }
    }
}

Vec4 godunov_flux(const ConservedState& UL, const ConservedState& UR) {
    if (UL == UR) return core::flux(UL);
    const auto fan = riemann::solve_star_states(UL, UR);
    return core::flux(riemann::sample(fan, 0.0));
}

int grp_step(GridState& grid, const SchemeConfig& config, double dt) {
    const auto e = extend(grid);
    const int n = grid.N;
    const double h = 0.5 * grid.dx;
    std::vector<Vec4> F(n + 1);
    std::vector<ConservedState> Uminus(n + 1);
    for (int k = 0; k <= n; ++k) {
        const ConservedState UL = e.U[k] + h * e.s[k];
        const ConservedState UR = e.U[k + 1] - h * e.s[k + 1];
        const auto iv = grp::grp_interface(UL, e.s[k], UR, e.s[k + 1]);
        F[k] = core::flux(iv.U + 0.5 * dt * iv.dUdt);
        Uminus[k] = iv.U + dt * iv.dUdt;
    }
    const int bad = conservative_update(grid, F, dt, config);

    std::vector<Vec4> mid(n);
    for (int j = 0; j < n; ++j) mid[j] = (Uminus[j + 1] - Uminus[j]) / grid.dx;
    if (config.limiter == LimiterMode::UnlimitedCentral) {
        grid.slopes = std::move(mid);
    } else {
        limit_slopes(grid, mid, config.theta);
    }
    grid.t += dt;
    return bad;
}

int godunov_step(GridState& grid, const SchemeConfig& config, double dt) {
    grid.slopes.assign(grid.N, Vec4{});
    const auto e = extend(grid);
    std::vector<Vec4> F(grid.N + 1);
    for (int k = 0; k <= grid.N; ++k) F[k] = godunov_flux(e.U[k], e.U[k + 1]);
    const int bad = conservative_update(grid, F, dt, config);
    grid.t += dt;
    return bad;
}

int muscl_rk2_step(GridState& grid, const SchemeConfig& config, double dt) {
    const auto U0 = grid.averages;
    const auto L0 = muscl_rhs(grid, config);
    for (int j = 0; j < grid.N; ++j) grid.averages[j] = U0[j] + dt * L0[j];
    const auto L1 = muscl_rhs(grid, config);
    int bad = 0;
    for (int j = 0; j < grid.N; ++j) {
        grid.averages[j] = 0.5 * U0[j] + 0.5 * (grid.averages[j] + dt * L1[j]);
        if (!core::is_admissible(grid.averages[j])) {
            if (!config.continue_on_violation) {
                throw StateSpaceViolation(static_cast<std::size_t>(j),
                                          "updated average left the admissible region");
            }
            ++bad;
        }
    }
    grid.slopes.assign(grid.N, Vec4{});
    grid.t += dt;
    return bad;
}

int step(GridState& grid, const SchemeConfig& config, double dt) {
    switch (config.scheme) {
        case SchemeKind::GRP2: return grp_step(grid, config, dt);
        case SchemeKind::Godunov: return godunov_step(grid, config, dt);
        case SchemeKind::MusclRk2: return muscl_rk2_step(grid, config, dt);
    }
    return 0;
}

Vec4 conserved_totals(const GridState& grid) {
    Vec4 s{};
    for (const auto& U : grid.averages) s += U;
    return s * grid.dx;
}

RunResult run_simulation(GridState grid, const SchemeConfig& config, double t_end,
                         bool keep_log, int max_steps) {
    validate(config);
    const auto t0 = std::chrono::steady_clock::now();
    RunResult r;
    r.totals_start = conserved_totals(grid);
    while (grid.t < t_end && (max_steps <= 0 || r.steps < max_steps)) {
        double dt = cfl_dt(grid, config.cfl);
        bool last = false;
        if (grid.t + dt >= t_end) {
            dt = t_end - grid.t;
            last = true;
        }
        r.violations += step(grid, config, dt);
        if (last) grid.t = t_end;
        ++r.steps;
        if (keep_log) r.log.push_back({grid.t, dt, conserved_totals(grid)});
    }
    r.totals_end = conserved_totals(grid);
    r.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.grid = std::move(grid);
    return r;
}

}  // namespace filmgrp::scheme
