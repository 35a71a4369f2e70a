#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv)
{
    using flagdual::Backend;
    namespace cli = flagdual::cli;

    CLI::App app{"Flag coordinates, duality and volumes of decorated ideal triangulations"};
    cli::Command cmd;
    std::string backend = "auto";

    app.add_option("verb", cmd.verb, "coords | dualize | conjugate | check | beta | volume | defect | solve | example")
        ->required()
        ->check(CLI::IsMember(cli::verbs()));
    app.add_option("args", cmd.args, "input file (- for stdin), or example name and parameter");
    app.add_option("-o,--output", cmd.output, "write the result here instead of stdout");
    app.add_option("--backend", backend, "exact | float | auto")->check(CLI::IsMember({"auto", "exact", "float"}));
    app.add_option("--tolerance", cmd.tolerance, "pass threshold for float residuals")->check(CLI::PositiveNumber);
    app.add_flag("--json", cmd.json, "machine-readable output");
    app.add_option("--perturb", cmd.perturb, "solve: relative noise added to the chart coordinates first");
    app.add_option("--seed", cmd.seed, "solve: seed for --perturb");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : cli::kParse;
    }
    cmd.backend = backend == "exact" ? Backend::Exact : backend == "float" ? Backend::Float : Backend::Auto;
    return cli::run(cmd, std::cout, std::cerr);
}
