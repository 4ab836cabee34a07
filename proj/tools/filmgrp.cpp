#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "filmgrp/cli.hpp"

int main(int argc, char** argv) {
    namespace cli = filmgrp::cli;

    CLI::App app{"Finite-volume solvers for the two-layer thin-film system"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run = app.add_subcommand("run", "Run a simulation from a key = value config file");
    run->add_option("config", config_path, "Config file")->required()->check(CLI::ExistingFile);

    std::string conv_out = ".";
    auto* conv = app.add_subcommand("convergence", "Travelling-wave error tables for GRP and MUSCL");
    conv->add_option("--out", conv_out, "Output directory");

    cli::RiemannArgs rargs;
    std::string left, right, rout = "riemann.csv";
    double xlo = 0.0, xhi = 0.0;
    auto* rie = app.add_subcommand("riemann", "Sample the exact Riemann solution");
    rie->add_option("--left", left, "Left state f,b,g,q")->required();
    rie->add_option("--right", right, "Right state f,b,g,q")->required();
    rie->add_option("--time", rargs.time, "Sample time")->required();
    rie->add_option("--samples", rargs.samples, "Number of sample points")->required();
    auto* xlo_opt = rie->add_option("--xlo", xlo, "Left end of the sample range");
    auto* xhi_opt = rie->add_option("--xhi", xhi, "Right end of the sample range");
    rie->add_option("--out", rout, "Output CSV");

    std::string check_out = ".";
    auto* check = app.add_subcommand("grp-check", "Compare GRP time derivatives with a finite-difference oracle");
    check->add_option("--out", check_out, "Output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) return cli::cmd_run(config_path, std::cout);
        if (*conv) return cli::cmd_convergence(conv_out, std::cout);
        if (*rie) {
            rargs.left = cli::parse_state("left", left);
            rargs.right = cli::parse_state("right", right);
            if (*xlo_opt) rargs.x_lo = xlo;
            if (*xhi_opt) rargs.x_hi = xhi;
            rargs.out = rout;
            return cli::cmd_riemann(rargs, std::cout);
        }
        if (*check) return cli::cmd_grp_check(check_out, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
