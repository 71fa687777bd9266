// Command line front end for the depth-based election library.
//
//   deepvote elect --input ballots.csv --rule wl2
//   deepvote depth-grid --input ballots.csv --rule tukey --resolution 0.01
//   deepvote audit --input ballots.csv --rule wl1 --split part2.csv
//   deepvote axioms --rule wlp:1.5 --trials 500 --seed 0
//   deepvote reproduce

#include <iostream>

#include "CLI11.hpp"
#include "dv/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"depth-based grading elections"};
    app.require_subcommand(1);

    dv::cli::RunConfig cfg;

    auto add_rule = [&cfg](CLI::App* cmd) {
        cmd->add_option("--rule", cfg.rule,
                        "wl1, wl2, wl3, wlinf, wlp:<p>, tukey, liu, mj, rv, approval");
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", cfg.input_path, "ballot CSV file")->required();
        add_rule(cmd);
        cmd->add_option("--tiebreak", cfg.tiebreak, "report, lowest, label");
        cmd->add_option("--output", cfg.output, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* elect = app.add_subcommand("elect", "run one election");
    add_common(elect);
    elect->add_option("--resolution", cfg.resolution, "grid step for tukey and liu");

    CLI::App* grid = app.add_subcommand("depth-grid", "depth surface over the ballot square");
    add_common(grid);
    grid->add_option("--resolution", cfg.resolution, "grid step");

    CLI::App* audit = app.add_subcommand("audit", "paradox checks for one election");
    add_common(audit);
    audit->add_option("--resolution", cfg.resolution, "grid step for tukey and liu");
    audit->add_option("--split", cfg.split_path, "second district for the split check");

    CLI::App* axioms = app.add_subcommand("axioms", "randomized axiom verification");
    add_rule(axioms);
    axioms->add_option("--trials", cfg.trials, "random profiles per condition");
    axioms->add_option("--seed", cfg.seed, "RNG seed");

    CLI::App* repro = app.add_subcommand("reproduce",
                                         "recompute the bundled study results");
    repro->add_option("--resolution", cfg.resolution, "grid step for tukey and liu");

    CLI11_PARSE(app, argc, argv);

    if (elect->parsed()) cfg.command = dv::cli::RunConfig::Command::Elect;
    if (grid->parsed()) cfg.command = dv::cli::RunConfig::Command::DepthGrid;
    if (audit->parsed()) cfg.command = dv::cli::RunConfig::Command::Audit;
    if (axioms->parsed()) cfg.command = dv::cli::RunConfig::Command::Axioms;
    if (repro->parsed()) cfg.command = dv::cli::RunConfig::Command::Reproduce;

    return dv::cli::run(cfg, std::cout, std::cerr);
}
