#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "filmgrp/cli.hpp"
#include "filmgrp/output.hpp"

using namespace filmgrp;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("parse_config: builtin case with overrides") {
    const auto rc = cli::parse_config("case = example5.4\nscheme = grp\nN = 100\n");
    CHECK(rc.case_name == "example5.4");
    CHECK(rc.scheme == scheme::SchemeKind::GRP2);
    const auto tc = cli::resolve_case(rc);
    CHECK(tc.N == 100);
    CHECK(tc.cfl == 0.4);
    CHECK(tc.theta == 1.0);
    CHECK(tc.bc == scheme::Boundary::Outflow);
    CHECK(tc.init.left == ConservedState{1.0, -1.5, 2.2, 1.3});
}

TEST_CASE("parse_config: comments, whitespace and every key") {
    const auto rc = cli::parse_config(
        "# custom run\n"
        "case = custom   # trailing comment\n"
        "  scheme=muscl\n"
        "N = 50\ncfl = 0.3\ntheta = 1.5\nlimiter = central\nt_end = 0.5\n"
        "domain_lo = -1\ndomain_hi = 1\nbc = periodic\n"
        "left = 1, -1, 2, 2\nright = 1,-1,2,2\njump = 0.25\n"
        "output = out.csv\ncontinue_on_violation = true\n");
    const auto tc = cli::resolve_case(rc);
    CHECK(rc.scheme == scheme::SchemeKind::MusclRk2);
    CHECK(tc.N == 50);
    CHECK(tc.cfl == 0.3);
    CHECK(tc.theta == 1.5);
    CHECK(tc.limiter == scheme::LimiterMode::UnlimitedCentral);
    CHECK(tc.bc == scheme::Boundary::Periodic);
    CHECK(tc.init.jump == 0.25);
    CHECK(rc.output == "out.csv");
    CHECK(rc.continue_on_violation);
}

TEST_CASE("parse_config: errors") {
    CHECK_THROWS_AS(cli::parse_config("theta = 2.5\n"), ValidationError);
    try {
        cli::parse_config("case = example5.2\ntheta = 2.5\n");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.key() == "theta");
    }
    try {
        cli::parse_config("");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.key() == "case");
    }
    try {
        cli::parse_config("case = example5.2\n\nnonsense line\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(cli::parse_config("case = example5.2\nfoo = 1\n"), ValidationError);
    CHECK_THROWS_AS(cli::parse_config("case = example5.2\nN = 1\nN = 2\n"), ParseError);
    CHECK_THROWS_AS(cli::parse_config("case = example5.2\nN = ten\n"), ValidationError);
    CHECK_THROWS_AS(cli::parse_config("case = nope\n"), ValidationError);
    CHECK_THROWS_AS(cli::parse_config("case = example5.2\nleft = 1,2,3\n"), ValidationError);
    CHECK_THROWS_AS(cli::resolve_case(cli::parse_config("case = custom\nN = 10\n")), ValidationError);
}

TEST_CASE("number formatting") {
    CHECK(output::format_number(0.1) == "0.1");
    CHECK(output::format_number(-2.0) == "-2");
    CHECK(output::format_number(1.0 / 3.0) == "0.3333333333333333");
    CHECK(output::format_number(1e-20) == "1e-20");
    for (double x : {0.1, 1.0 / 3.0, 2.0 / 7.0, -1.2345678901234567e-8}) {
        CHECK(std::stod(output::format_number(x)) == x);
    }
}

TEST_CASE("cmd_run: example 5.2 writes 100 rows and a sidecar") {
    TempDir dir("filmgrp_cli_run");
    std::ostringstream log;
    CHECK(cli::cmd_run_text("case = example5.2\noutput = ex52.csv\n", dir.path, log) == 0);
    const auto csv = slurp(dir.path / "ex52.csv");
    const auto ls = lines(csv);
    REQUIRE(ls.size() == 101);
    CHECK(ls[0] == "x,f,b,g,q");
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(csv.back() == '\n');
    const auto meta = slurp(dir.path / "ex52.csv.meta");
    for (const char* key : {"scheme = grp", "N = 100", "cfl = 0.4", "theta = 1", "t_end = 2.5",
                            "steps = ", "wall_seconds = ", "totals_start = ", "totals_end = "}) {
        CHECK(meta.find(key) != std::string::npos);
    }

    // Byte-stable across repeated runs.
    CHECK(cli::cmd_run_text("case = example5.2\noutput = again.csv\n", dir.path, log) == 0);
    CHECK(slurp(dir.path / "again.csv") == csv);
}

TEST_CASE("cmd_run: constant data gives identical rows") {
    TempDir dir("filmgrp_cli_const");
    std::ostringstream log;
    const std::string cfg =
        "case = custom\nN = 20\nt_end = 0.5\ndomain_lo = 0\ndomain_hi = 1\n"
        "left = 1,-1,2,2\nright = 1,-1,2,2\n";
    CHECK(cli::cmd_run_text(cfg, dir.path, log) == 0);
    const auto ls = lines(slurp(dir.path / "solution.csv"));
    REQUIRE(ls.size() == 21);
    for (std::size_t k = 1; k < ls.size(); ++k) CHECK(ls[k].substr(ls[k].find(',')) == ",1,-1,2,2");
}

TEST_CASE("cmd_run: example 5.6 writes one file per snapshot") {
    TempDir dir("filmgrp_cli_snap");
    std::ostringstream log;
    CHECK(cli::cmd_run_text("case = example5.6\noutput = ex56.csv\n", dir.path, log) == 0);
    for (const char* name : {"ex56_t1.csv", "ex56_t2.csv", "ex56_t3.csv", "ex56_t4.csv", "ex56.csv"}) {
        CHECK(lines(slurp(dir.path / name)).size() == 401);
    }
}

TEST_CASE("cmd_riemann summaries") {
    TempDir dir("filmgrp_cli_riemann");
    std::ostringstream log;
    cli::RiemannArgs a;
    a.left = a.right = {1, -1, 2, 2};
    a.samples = 11;
    a.out = dir.path / "const.csv";
    CHECK(cli::cmd_riemann(a, log) == 0);
    const auto ls = lines(slurp(a.out));
    REQUIRE(ls.size() == 12);
    const auto summary = slurp(dir.path / "const.csv.summary");
    CHECK(summary.find("strength1 = 0\n") != std::string::npos);
    CHECK(summary.find("strength4 = 0\n") != std::string::npos);

    a.left = {1.0, -1.5, 2.2, 1.3};
    a.right = {0.125, -1.5, 0.9, 0.9};
    a.out = dir.path / "ex54.csv";
    CHECK(cli::cmd_riemann(a, log) == 0);
    CHECK(slurp(dir.path / "ex54.csv.summary").find("R1 + J2 + J3 + S4") != std::string::npos);

    a.left = {1.57, -1.15, 2.5, 1.90};
    a.right = {1.9, -0.58, 2.4, 2.30};
    a.out = dir.path / "ex53.csv";
    CHECK(cli::cmd_riemann(a, log) == 0);
    CHECK(slurp(dir.path / "ex53.csv.summary").find("R1 + J2 + J3 + R4") != std::string::npos);

    a.left = {1, 1, 2, 2};
    CHECK_THROWS_AS(cli::cmd_riemann(a, log), DomainError);
}

TEST_CASE("cmd_convergence table layout") {
    TempDir dir("filmgrp_cli_conv");
    std::ostringstream log;
    CHECK(cli::cmd_convergence(dir.path, log, {20, 40}) == 0);
    const auto ls = lines(slurp(dir.path / "convergence.csv"));
    REQUIRE(ls.size() == 1 + 2 * 2 * 4);
    CHECK(ls[0] == "N,scheme,var,L1,L1_order,L2,L2_order,Linf,Linf_order,wall_seconds");
    CHECK(ls[1].rfind("20,grp,f,", 0) == 0);
    CHECK(ls[5].rfind("40,grp,f,", 0) == 0);
    CHECK(ls[9].rfind("20,muscl,f,", 0) == 0);
    CHECK(ls[1].find(",nan,") != std::string::npos);
}

TEST_CASE("parallel_for runs every index once and rethrows") {
    std::vector<int> hits(50, 0);
    cli::parallel_for(50, 4, [&](int i) { hits[i] += 1; });
    for (int h : hits) CHECK(h == 1);
    CHECK_THROWS_AS(cli::parallel_for(10, 3, [](int i) {
        if (i == 7) throw DomainError("boom");
    }), DomainError);
}
