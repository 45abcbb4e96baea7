#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "omnr/commands.hpp"
#include "omnr/config.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "Steady-state nonreciprocal transmission of a three-mode "
        "optomechanical system"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string format;
    int points = 0;
    omnr::CommandOptions options;
    std::string traversal;
    std::string figure_id;

    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--out", out_path, "output file path");
    app.add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--points", points, "sweep point count");
    app.add_option("--direction", options.direction, "forward|backward|both")
        ->check(CLI::IsMember({"forward", "backward", "both"}));
    app.add_option("--traversal", traversal, "up|down|both")
        ->check(CLI::IsMember({"up", "down", "both"}));
    app.add_option("--branch", options.branch_policy, "lowest|highest|continued")
        ->check(CLI::IsMember({"lowest", "highest", "continued"}));

    // let global options appear after the subcommand as well
    app.add_subcommand("solve", "print all branches at the configured power")
        ->fallthrough();
    app.add_subcommand("sweep-power", "power sweep at the configured detunings")
        ->fallthrough();
    app.add_subcommand("sweep-detuning", "detuning sweep at the configured power")
        ->fallthrough();
    app.add_subcommand("stability",
                       "dump fluctuation-matrix eigenvalues per branch")
        ->fallthrough();
    app.add_subcommand("oracle", "time-domain settle from the vacuum state")
        ->fallthrough();
    CLI::App* figure = app.add_subcommand("figure", "run a figure preset");
    figure->add_option("id", figure_id, "fig2a..fig5b")->required();
    figure->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? omnr::k_exit_ok : omnr::k_exit_usage;
    }

    std::string text;
    if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) {
            std::cerr << "error: cannot read config '" << config_path << "'\n";
            return omnr::k_exit_usage;
        }
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }

    omnr::RunConfig cfg;
    try {
        cfg = omnr::parse_config(text);
    } catch (const omnr::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return omnr::k_exit_usage;
    }
    if (!out_path.empty()) {
        cfg.out = out_path;
    }
    if (!format.empty()) {
        cfg.format = format;
    }
    if (points > 0) {
        cfg.sweep_points = points;
    }
    if (!traversal.empty()) {
        cfg.traversal = traversal;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    return omnr::run_command(command, figure_id, std::move(cfg), options,
                             std::cout, std::cerr);
}
