#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "filmgrp/experiments.hpp"

namespace filmgrp::cli {

/// Parsed `key = value` run file. Unset optionals fall back to the builtin
/// case, or to the documented defaults for `case = custom`.
struct RunConfig {
    std::string case_name;
    scheme::SchemeKind scheme = scheme::SchemeKind::GRP2;
    std::optional<int> N;
    std::optional<double> cfl;
    std::optional<double> theta;
    std::optional<scheme::LimiterMode> limiter;
    std::optional<double> t_end;
    std::optional<double> domain_lo, domain_hi;
    std::optional<scheme::Boundary> bc;
    std::optional<ConservedState> left, right;
    std::optional<double> jump;
    std::optional<experiments::InitialKind> profile;
    std::string output = "solution.csv";
    bool continue_on_violation = false;
};

/// Defaults for custom cases.
inline constexpr double default_cfl = 0.4;
inline constexpr double default_theta = 1.0;

/// Throws ParseError (with line number) or ValidationError (with key).
RunConfig parse_config(std::string_view text);

/// Builtin case with overrides applied, or the custom case. Throws
/// ValidationError on missing or inconsistent keys.
experiments::TestCase resolve_case(const RunConfig& rc);

/// "f,b,g,q" to a state. Throws ValidationError naming `key`.
ConservedState parse_state(const std::string& key, std::string_view text);

std::string_view to_string(scheme::SchemeKind k);
std::string_view to_string(scheme::LimiterMode m);
std::string_view to_string(scheme::Boundary b);

}  // namespace filmgrp::cli
