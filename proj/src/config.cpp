#include "filmgrp/config.hpp"

#include <charconv>
#include <set>
#include <vector>

namespace filmgrp::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r";
    const auto a = s.find_first_not_of(ws);
    if (a == std::string_view::npos) return {};
    const auto b = s.find_last_not_of(ws);
    return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, std::string_view v) {
    double x = 0.0;
    const auto* end = v.data() + v.size();
    const auto [p, ec] = std::from_chars(v.data(), end, x);
    if (ec != std::errc{} || p != end) {
        throw ValidationError(key, "expected a number, got '" + std::string(v) + "'");
    }
    return x;
}

int to_int(const std::string& key, std::string_view v) {
    int x = 0;
    const auto* end = v.data() + v.size();
    const auto [p, ec] = std::from_chars(v.data(), end, x);
    if (ec != std::errc{} || p != end) {
        throw ValidationError(key, "expected an integer, got '" + std::string(v) + "'");
    }
    return x;
}

bool to_bool(const std::string& key, std::string_view v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ValidationError(key, "expected true or false");
}

}  // namespace

std::string_view to_string(scheme::SchemeKind k) {
    switch (k) {
        case scheme::SchemeKind::GRP2: return "grp";
        case scheme::SchemeKind::Godunov: return "godunov";
        case scheme::SchemeKind::MusclRk2: return "muscl";
    }
    return "grp";
}

std::string_view to_string(scheme::LimiterMode m) {
    return m == scheme::LimiterMode::Minmod ? "minmod" : "central";
}

std::string_view to_string(scheme::Boundary b) {
    return b == scheme::Boundary::Periodic ? "periodic" : "outflow";
}

ConservedState parse_state(const std::string& key, std::string_view text) {
    std::vector<double> xs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto part = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
        xs.push_back(to_double(key, part));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (xs.size() != 4) throw ValidationError(key, "expected four components f,b,g,q");
    return {xs[0], xs[1], xs[2], xs[3]};
}

RunConfig parse_config(std::string_view text) {
    RunConfig rc;
    std::set<std::string> seen;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        auto line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(lineno, "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const auto val = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError(lineno, "empty key");
        if (val.empty()) throw ParseError(lineno, "empty value for '" + key + "'");
        if (!seen.insert(key).second) throw ParseError(lineno, "duplicate key '" + key + "'");

        if (key == "case") {
            rc.case_name = std::string(val);
        } else if (key == "scheme") {
            if (val == "grp") rc.scheme = scheme::SchemeKind::GRP2;
            else if (val == "godunov") rc.scheme = scheme::SchemeKind::Godunov;
            else if (val == "muscl") rc.scheme = scheme::SchemeKind::MusclRk2;
            else throw ValidationError(key, "expected grp, godunov or muscl");
        } else if (key == "N") {
            rc.N = to_int(key, val);
            if (*rc.N <= 0) throw ValidationError(key, "must be positive");
        } else if (key == "cfl") {
            rc.cfl = to_double(key, val);
            if (!(*rc.cfl > 0.0 && *rc.cfl <= 1.0)) throw ValidationError(key, "must lie in (0, 1]");
        } else if (key == "theta") {
            rc.theta = to_double(key, val);
            if (!(*rc.theta >= 0.0 && *rc.theta < 2.0)) throw ValidationError(key, "must lie in [0, 2)");
        } else if (key == "limiter") {
            if (val == "minmod") rc.limiter = scheme::LimiterMode::Minmod;
            else if (val == "central") rc.limiter = scheme::LimiterMode::UnlimitedCentral;
            else throw ValidationError(key, "expected minmod or central");
        } else if (key == "t_end") {
            rc.t_end = to_double(key, val);
            if (!(*rc.t_end >= 0.0)) throw ValidationError(key, "must be >= 0");
        } else if (key == "domain_lo") {
            rc.domain_lo = to_double(key, val);
        } else if (key == "domain_hi") {
            rc.domain_hi = to_double(key, val);
        } else if (key == "bc") {
            if (val == "periodic") rc.bc = scheme::Boundary::Periodic;
            else if (val == "outflow") rc.bc = scheme::Boundary::Outflow;
            else throw ValidationError(key, "expected periodic or outflow");
        } else if (key == "left") {
            rc.left = parse_state(key, val);
        } else if (key == "right") {
            rc.right = parse_state(key, val);
        } else if (key == "jump") {
            rc.jump = to_double(key, val);
        } else if (key == "profile") {
            if (val == "travelling_wave") rc.profile = experiments::InitialKind::TravellingWave;
            else if (val == "gaussian") rc.profile = experiments::InitialKind::Gaussian;
            else throw ValidationError(key, "expected travelling_wave or gaussian");
        } else if (key == "output") {
            rc.output = std::string(val);
        } else if (key == "continue_on_violation") {
            rc.continue_on_violation = to_bool(key, val);
        } else {
            throw ValidationError(key, "unknown key");
        }
    }

    if (rc.case_name.empty()) throw ValidationError("case", "missing; give a builtin name or 'custom'");
    if (rc.domain_lo && rc.domain_hi && !(*rc.domain_hi > *rc.domain_lo)) {
        throw ValidationError("domain_hi", "must exceed domain_lo");
    }
    if (rc.profile && (rc.left || rc.right)) {
        throw ValidationError("profile", "cannot be combined with left/right states");
    }
    if (rc.case_name != "custom") (void)experiments::find_case(rc.case_name);
    return rc;
}

experiments::TestCase resolve_case(const RunConfig& rc) {
    experiments::TestCase tc;
    if (rc.case_name == "custom") {
        tc.name = "custom";
        if (!rc.domain_lo || !rc.domain_hi) throw ValidationError("domain_lo", "custom case needs a domain");
        if (!rc.t_end) throw ValidationError("t_end", "custom case needs t_end");
        if (!rc.N) throw ValidationError("N", "custom case needs N");
        if (rc.profile) {
            tc.init.kind = *rc.profile;
        } else {
            if (!rc.left || !rc.right) {
                throw ValidationError("left", "custom case needs left and right states or a profile");
            }
            tc.init = {experiments::InitialKind::Riemann, *rc.left, *rc.right, rc.jump.value_or(0.0)};
        }
        tc.cfl = default_cfl;
        tc.theta = default_theta;
    } else {
        tc = experiments::find_case(rc.case_name);
        if (rc.profile) throw ValidationError("profile", "only valid for case = custom");
        if (rc.left) tc.init.left = *rc.left;
        if (rc.right) tc.init.right = *rc.right;
        if (rc.jump) tc.init.jump = *rc.jump;
        if ((rc.left || rc.right || rc.jump) && tc.init.kind != experiments::InitialKind::Riemann) {
            throw ValidationError("left", "states only apply to Riemann cases");
        }
    }
    if (rc.N) tc.N = *rc.N;
    if (rc.cfl) tc.cfl = *rc.cfl;
    if (rc.theta) tc.theta = *rc.theta;
    if (rc.limiter) tc.limiter = *rc.limiter;
    if (rc.t_end) tc.t_end = *rc.t_end;
    if (rc.domain_lo) tc.x_lo = *rc.domain_lo;
    if (rc.domain_hi) tc.x_hi = *rc.domain_hi;
    if (rc.bc) tc.bc = *rc.bc;
    if (!(tc.x_hi > tc.x_lo)) throw ValidationError("domain_hi", "must exceed domain_lo");
    if (tc.init.kind == experiments::InitialKind::Riemann &&
        (!core::is_admissible(tc.init.left) || !core::is_admissible(tc.init.right))) {
        throw ValidationError("left", "Riemann states must be admissible");
    }
    return tc;
}

}  // namespace filmgrp::cli
