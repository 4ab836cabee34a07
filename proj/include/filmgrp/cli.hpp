#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "filmgrp/config.hpp"

namespace filmgrp::cli {

/// Worker count: GRP_THREADS if set and positive, else the hardware count.
int worker_count();

/// Runs task(i) for i in [0, n) on up to `workers` threads. The first
/// exception thrown by any task is rethrown after all workers join.
void parallel_for(int n, int workers, const std::function<void(int)>& task);

/// Parses and runs a config file. Writes the solution CSV, its `.meta`
/// sidecar, and one CSV per snapshot time before t_end.
int cmd_run(const std::filesystem::path& config_path, std::ostream& log);

/// Same, from already parsed text. Relative output paths resolve against
/// `base_dir`.
int cmd_run_text(const std::string& text, const std::filesystem::path& base_dir,
                 std::ostream& log);

inline const std::vector<int> convergence_Ns{20, 40, 80, 160, 320, 640};

/// Travelling-wave tables for GRP and MUSCL, written to DIR/convergence.csv.
int cmd_convergence(const std::filesystem::path& out_dir, std::ostream& log,
                    const std::vector<int>& Ns = convergence_Ns);

struct RiemannArgs {
    ConservedState left{}, right{};
    double time = 1.0;
    int samples = 201;
    std::optional<double> x_lo, x_hi;
    std::filesystem::path out = "riemann.csv";
};

/// Sampled exact solution to `out`, summary to `log` and `<out>.summary`.
int cmd_riemann(const RiemannArgs& args, std::ostream& log);

/// Oracle comparison over grp_check_suite, written to DIR/grp_check.csv.
/// Nonzero exit code if any case fails.
int cmd_grp_check(const std::filesystem::path& out_dir, std::ostream& log);

}  // namespace filmgrp::cli
