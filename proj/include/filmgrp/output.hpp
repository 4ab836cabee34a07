#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "filmgrp/experiments.hpp"

namespace filmgrp::output {

/// Shortest round-trip representation, at most 17 significant digits.
std::string format_number(double x);

/// Header `x,f,b,g,q`, then one row per cell centre.
std::string solution_csv(const scheme::GridState& grid);

struct RunMeta {
    std::string case_name;
    scheme::SchemeKind scheme = scheme::SchemeKind::GRP2;
    int N = 0;
    double cfl = 0.0;
    double theta = 0.0;
    double t_end = 0.0;
    int steps = 0;
    int violations = 0;
    double wall_seconds = 0.0;
    Vec4 totals_start{}, totals_end{};
};

/// `key = value` lines for the metadata sidecar.
std::string run_meta_text(const RunMeta& meta);

std::string convergence_csv(const std::vector<experiments::ConvergenceRow>& rows);

std::string grp_check_csv(const std::vector<experiments::GrpCheckRow>& rows);

/// Header `x,f,b,g,q` sampled from the exact solution centred at x = 0.
std::string riemann_csv(const riemann::WaveFan& fan, double t, double x_lo, double x_hi,
                        int samples);

/// Configuration, star states and wave speeds.
std::string riemann_summary(const riemann::WaveFan& fan);

/// Writes bytes as given (LF endings preserved). Throws std::runtime_error.
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace filmgrp::output
