#include "filmgrp/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "filmgrp/output.hpp"

namespace filmgrp::cli {

namespace fs = std::filesystem;

int worker_count() {
    if (const char* env = std::getenv("GRP_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(int n, int workers, const std::function<void(int)>& task) {
    workers = std::clamp(workers, 1, std::max(1, n));
    std::atomic<int> next{0};
    std::exception_ptr first;
    std::mutex m;
    auto body = [&] {
        for (int i = next++; i < n; i = next++) {
            try {
                task(i);
            } catch (...) {
                std::lock_guard lock(m);
                if (!first) first = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        body();
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    }
    if (first) std::rethrow_exception(first);
}

namespace {

fs::path snapshot_path(const fs::path& out, double t) {
    auto p = out;
    p.replace_filename(out.stem().string() + "_t" + output::format_number(t) +
                       out.extension().string());
    return p;
}

}  // namespace

int cmd_run_text(const std::string& text, const fs::path& base_dir, std::ostream& log) {
    const RunConfig rc = parse_config(text);
    const experiments::TestCase tc = resolve_case(rc);
    auto config = experiments::config_for(tc, rc.scheme);
    config.continue_on_violation = rc.continue_on_violation;
    scheme::validate(config);

    fs::path out = rc.output;
    if (out.is_relative()) out = base_dir / out;

    auto grid = experiments::initial_grid(tc, config);
    output::RunMeta meta{tc.name, rc.scheme, tc.N, config.cfl, config.theta, tc.t_end,
                         0, 0, 0.0, scheme::conserved_totals(grid), {}};

    std::vector<double> stops;
    for (double t : tc.snapshots) {
        if (t < tc.t_end) stops.push_back(t);
    }
    std::sort(stops.begin(), stops.end());
    stops.push_back(tc.t_end);

    for (std::size_t k = 0; k < stops.size(); ++k) {
        auto r = scheme::run_simulation(std::move(grid), config, stops[k]);
        meta.steps += r.steps;
        meta.violations += r.violations;
        meta.wall_seconds += r.wall_seconds;
        grid = std::move(r.grid);
        if (k + 1 < stops.size()) {
            const auto p = snapshot_path(out, stops[k]);
            output::write_file(p, output::solution_csv(grid));
            log << "wrote " << p.string() << "\n";
        }
    }
    meta.totals_end = scheme::conserved_totals(grid);

    output::write_file(out, output::solution_csv(grid));
    fs::path meta_path = out;
    meta_path += ".meta";
    output::write_file(meta_path, output::run_meta_text(meta));
    log << "wrote " << out.string() << " (" << meta.steps << " steps";
    if (meta.violations > 0) log << ", " << meta.violations << " state-space violations";
    log << ")\n";
    return 0;
}

int cmd_run(const fs::path& config_path, std::ostream& log) {
    std::ifstream is(config_path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot read " + config_path.string());
    std::ostringstream ss;
    ss << is.rdbuf();
    return cmd_run_text(ss.str(), config_path.parent_path(), log);
}

int cmd_convergence(const fs::path& out_dir, std::ostream& log, const std::vector<int>& Ns) {
    const std::array kinds{scheme::SchemeKind::GRP2, scheme::SchemeKind::MusclRk2};
    const int n = static_cast<int>(Ns.size());
    std::vector<experiments::ConvergenceRow> rows(kinds.size() * Ns.size());
    parallel_for(static_cast<int>(rows.size()), worker_count(), [&](int i) {
        const auto kind = kinds[i / n];
        const int N = Ns[i % n];
        rows[i].N = N;
        rows[i].scheme = kind;
        rows[i].errors = experiments::travelling_wave_errors(kind, N);
    });

    std::vector<experiments::ConvergenceRow> table;
    for (std::size_t k = 0; k < kinds.size(); ++k) {
        std::vector<experiments::ConvergenceRow> part(rows.begin() + k * n,
                                                      rows.begin() + (k + 1) * n);
        experiments::fill_orders(part);
        table.insert(table.end(), part.begin(), part.end());
    }

    const auto path = out_dir / "convergence.csv";
    output::write_file(path, output::convergence_csv(table));
    for (const auto& r : table) {
        log << to_string(r.scheme) << " N=" << r.N << " L1(f)=" << output::format_number(r.errors.vars[0].L1)
            << " order=" << output::format_number(r.orders[0].L1) << "\n";
    }
    log << "wrote " << path.string() << "\n";
    return 0;
}

int cmd_riemann(const RiemannArgs& args, std::ostream& log) {
    if (!(args.time >= 0.0)) throw ValidationError("time", "must be >= 0");
    const auto fan = riemann::solve_star_states(args.left, args.right);
    double reach = 1.2 * args.time * std::max(std::abs(fan.w1_lo), std::abs(fan.w4_hi));
    if (!(reach > 0.0)) reach = 1.0;
    const double x_lo = args.x_lo.value_or(-reach);
    const double x_hi = args.x_hi.value_or(reach);

    output::write_file(args.out, output::riemann_csv(fan, args.time, x_lo, x_hi, args.samples));
    const auto summary = output::riemann_summary(fan);
    fs::path summary_path = args.out;
    summary_path += ".summary";
    output::write_file(summary_path, summary);
    log << summary << "wrote " << args.out.string() << "\n";
    return 0;
}

int cmd_grp_check(const fs::path& out_dir, std::ostream& log) {
    const auto suite = experiments::grp_check_suite();
    std::vector<experiments::GrpCheckRow> rows(suite.size());
    parallel_for(static_cast<int>(suite.size()), worker_count(),
                 [&](int i) { rows[i] = experiments::run_grp_check(suite[i]); });

    const auto path = out_dir / "grp_check.csv";
    output::write_file(path, output::grp_check_csv(rows));
    bool ok = true;
    for (const auto& r : rows) {
        log << (r.pass ? "PASS " : "FAIL ") << r.name << " [" << r.structure
            << "] max_rel_err=" << output::format_number(r.max_rel_err) << "\n";
        ok = ok && r.pass;
    }
    log << "wrote " << path.string() << "\n";
    return ok ? 0 : 1;
}

}  // namespace filmgrp::cli
