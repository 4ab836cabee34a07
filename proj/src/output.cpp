#include "filmgrp/output.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "filmgrp/config.hpp"

namespace filmgrp::output {

namespace {

const std::array<const char*, 4> var_names{"f", "b", "g", "q"};

void append_state(std::string& out, const ConservedState& U) {
    out += format_number(U.f);
    out += ',';
    out += format_number(U.b);
    out += ',';
    out += format_number(U.g);
    out += ',';
    out += format_number(U.q);
}

std::string state_text(const ConservedState& U) {
    std::string s;
    append_state(s, U);
    return s;
}

}  // namespace

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    // Shortest round-trip output never needs more than 17 digits.
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

std::string solution_csv(const scheme::GridState& grid) {
    std::string out = "x,f,b,g,q\n";
    for (int j = 0; j < grid.N; ++j) {
        out += format_number(grid.x_center(j));
        out += ',';
        append_state(out, grid.averages[j]);
        out += '\n';
    }
    return out;
}

std::string run_meta_text(const RunMeta& m) {
    std::string s;
    s += "case = " + m.case_name + "\n";
    s += "scheme = " + std::string(cli::to_string(m.scheme)) + "\n";
    s += "N = " + std::to_string(m.N) + "\n";
    s += "cfl = " + format_number(m.cfl) + "\n";
    s += "theta = " + format_number(m.theta) + "\n";
    s += "t_end = " + format_number(m.t_end) + "\n";
    s += "steps = " + std::to_string(m.steps) + "\n";
    s += "violations = " + std::to_string(m.violations) + "\n";
    s += "wall_seconds = " + format_number(m.wall_seconds) + "\n";
    s += "totals_start = " + state_text(m.totals_start) + "\n";
    s += "totals_end = " + state_text(m.totals_end) + "\n";
    return s;
}

std::string convergence_csv(const std::vector<experiments::ConvergenceRow>& rows) {
    std::string out = "N,scheme,var,L1,L1_order,L2,L2_order,Linf,Linf_order,wall_seconds\n";
    for (const auto& r : rows) {
        for (std::size_t v = 0; v < 4; ++v) {
            const auto& e = r.errors.vars[v];
            const auto& o = r.orders[v];
            out += std::to_string(r.N) + ',' + std::string(cli::to_string(r.scheme)) + ',' +
                   var_names[v] + ',';
            out += format_number(e.L1) + ',' + format_number(o.L1) + ',';
            out += format_number(e.L2) + ',' + format_number(o.L2) + ',';
            out += format_number(e.Linf) + ',' + format_number(o.Linf) + ',';
            out += format_number(r.errors.wall_seconds) + '\n';
        }
    }
    return out;
}

std::string grp_check_csv(const std::vector<experiments::GrpCheckRow>& rows) {
    std::string out = "case,structure,var,grp,oracle,max_rel_err,pass\n";
    for (const auto& r : rows) {
        for (std::size_t v = 0; v < 4; ++v) {
            out += '"' + r.name + "\"," + r.structure + ',' + var_names[v] + ',';
            out += format_number(r.grp[v]) + ',' + format_number(r.oracle[v]) + ',';
            out += format_number(r.max_rel_err) + ',' + (r.pass ? "1" : "0") + '\n';
        }
    }
    return out;
}

std::string riemann_csv(const riemann::WaveFan& fan, double t, double x_lo, double x_hi,
                        int samples) {
    if (samples < 2) throw ValidationError("samples", "need at least 2");
    if (!(x_hi > x_lo)) throw ValidationError("xhi", "must exceed xlo");
    std::string out = "x,f,b,g,q\n";
    for (int k = 0; k < samples; ++k) {
        const double x = x_lo + (x_hi - x_lo) * k / (samples - 1);
        const ConservedState U = t > 0.0 ? riemann::sample(fan, x / t)
                                         : (x < 0.0 ? fan.UL : fan.UR);
        out += format_number(x);
        out += ',';
        append_state(out, U);
        out += '\n';
    }
    return out;
}

std::string riemann_summary(const riemann::WaveFan& fan) {
    std::string s;
    s += "structure = " + fan.structure() + "\n";
    s += "U_L = " + state_text(fan.UL) + "\n";
    s += "U*_L = " + state_text(fan.UstarL) + "\n";
    s += "U*_M = " + state_text(fan.UstarM) + "\n";
    s += "U*_R = " + state_text(fan.UstarR) + "\n";
    s += "U_R = " + state_text(fan.UR) + "\n";
    s += "u* = " + format_number(fan.ustar) + "\n";
    s += "v* = " + format_number(fan.vstar) + "\n";
    s += "wave1 = " + format_number(fan.w1_lo) + "," + format_number(fan.w1_hi) + "\n";
    s += "sigma2 = " + format_number(fan.sigma2) + "\n";
    s += "sigma3 = " + format_number(fan.sigma3) + "\n";
    s += "wave4 = " + format_number(fan.w4_lo) + "," + format_number(fan.w4_hi) + "\n";
    const double j1 = norm_inf(fan.UstarL - fan.UL);
    const double j23 = norm_inf(fan.UstarR - fan.UstarL);
    const double j4 = norm_inf(fan.UR - fan.UstarR);
    s += "strength1 = " + format_number(j1) + "\n";
    s += "strength23 = " + format_number(j23) + "\n";
    s += "strength4 = " + format_number(j4) + "\n";
    return s;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    os.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace filmgrp::output
