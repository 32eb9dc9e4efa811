#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rkdg/config.hpp"
#include "rkdg/errors.hpp"
#include "rkdg/problems.hpp"
#include "rkdg/reports.hpp"
#include "rkdg/runner.hpp"

namespace {

struct Cli {
    std::string config_path;
    std::string problem;
    std::string out_dir = "out";
    std::string mode;
    std::string snapshots;
    std::string hlist;
    int p = 0, k = 0;
    double h = 0, tau = 0, gamma = 0, mu = 0, tfinal = 0, kappa = 0, ceiling = 0;
};

std::vector<double> parse_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw rkdg::ConfigError(std::string(what) + " has non-numeric entry '" + item + "'");
        }
    }
    if (out.empty()) throw rkdg::ConfigError(std::string(what) + " is empty");
    return out;
}

// defaults from the problem factory, then the config file, then flags
rkdg::ProblemSpec resolve(const Cli& cli, const CLI::App* cmd, rkdg::RunConfig& cfg) {
    rkdg::FileConfig fc;
    bool have_file = !cli.config_path.empty();
    if (have_file) fc = rkdg::load_config_file(cli.config_path);

    std::string problem_name = "example1";
    if (have_file && fc.has_problem) problem_name = fc.problem;
    if (cmd->count("--problem")) problem_name = cli.problem;

    rkdg::ProblemSpec problem = rkdg::problem_by_name(problem_name);
    cfg = problem.defaults;
    if (have_file) rkdg::apply_file_config(fc, cfg);

    if (cmd->count("--p")) cfg.p = cli.p;
    if (cmd->count("--k")) cfg.k = cli.k;
    if (cmd->count("--h")) cfg.h = cli.h;
    if (cmd->count("--tau")) cfg.tau_fixed = cli.tau;
    if (cmd->count("--gamma")) cfg.gamma = cli.gamma;
    if (cmd->count("--mu")) cfg.mu = cli.mu;
    if (cmd->count("--tfinal")) cfg.t_final = cli.tfinal;
    if (cmd->count("--kappa")) cfg.kappa = cli.kappa;
    if (cmd->count("--ceiling")) cfg.m_ceiling = cli.ceiling;
    if (cmd->count("--mode")) {
        if (cli.mode == "fixed")
            cfg.mode = rkdg::CflMode::fixed;
        else if (cli.mode == "auto")
            cfg.mode = rkdg::CflMode::automatic;
        else
            throw rkdg::ConfigError("--mode must be fixed or auto, got '" + cli.mode + "'");
    }
    if (cmd->count("--snapshots")) cfg.snapshots = parse_list(cli.snapshots, "--snapshots");
    cfg.validate();
    return problem;
}

void add_common_flags(CLI::App* cmd, Cli& cli) {
    // --h is the cell size, so help must not claim the short -h
    cmd->set_help_flag("--help", "print this help message and exit");
    cmd->add_option("--config", cli.config_path, "key=value config file");
    cmd->add_option("--problem", cli.problem, "problem name (example1, example2, linadv)");
    cmd->add_option("--p", cli.p, "polynomial degree");
    cmd->add_option("--k", cli.k, "Runge-Kutta order (1..3)");
    cmd->add_option("--h", cli.h, "cell size");
    cmd->add_option("--tau", cli.tau, "fixed time step");
    cmd->add_option("--gamma", cli.gamma, "strengthened CFL constant");
    cmd->add_option("--mu", cli.mu, "rate exponent in (0,1]");
    cmd->add_option("--tfinal", cli.tfinal, "final time");
    cmd->add_option("--kappa", cli.kappa, "derivative-growth safety factor");
    cmd->add_option("--ceiling", cli.ceiling, "indicator trust ceiling");
    cmd->add_option("--mode", cli.mode, "step-size mode: fixed or auto");
    cmd->add_option("--snapshots", cli.snapshots, "comma-separated snapshot times");
    cmd->add_option("--out", cli.out_dir, "output directory");
}

int run_cmd(const Cli& cli, const CLI::App* cmd) {
    rkdg::RunConfig cfg;
    rkdg::ProblemSpec problem = resolve(cli, cmd, cfg);
    rkdg::RunArtifact art = rkdg::run_simulation(problem, cfg);
    rkdg::emit_reports(art, cli.out_dir);
    std::cout << rkdg::report_text(cli.out_dir);
    if (!art.completed) {
        std::cerr << "run aborted: " << art.abort_reason << "\n";
        return rkdg::exit_blowup;
    }
    return rkdg::exit_ok;
}

int converge_cmd(const Cli& cli, const CLI::App* cmd) {
    rkdg::RunConfig cfg;
    rkdg::ProblemSpec problem = resolve(cli, cmd, cfg);
    std::vector<double> hs = cmd->count("--hlist")
                                 ? parse_list(cli.hlist, "--hlist")
                                 : std::vector<double>{0.2, 0.1, 0.05, 0.025};
    rkdg::StudyResult study = rkdg::convergence_study(problem, cfg, hs);
    rkdg::emit_study(study, cli.out_dir);
    std::printf("%-10s %-14s %-14s %-12s\n", "h", "l1_error", "estimate", "effectivity");
    for (const auto& r : study.rows)
        std::printf("%-10g %-14.6e %-14.6e %-12.4g\n", r.h, r.l1_error, r.estimate,
                    r.effectivity);
    std::printf("fitted order: %.3f\n", study.fitted_order);
    return rkdg::exit_ok;
}

int report_cmd(const Cli& cli) {
    std::cout << rkdg::report_text(cli.out_dir);
    return rkdg::exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"RKDG conservation-law solver with smoothness indicators"};
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);
    Cli cli;

    CLI::App* run = app.add_subcommand("run", "run a single simulation and emit reports");
    add_common_flags(run, cli);
    CLI::App* conv = app.add_subcommand("converge", "mesh convergence study against the oracle");
    add_common_flags(conv, cli);
    conv->add_option("--hlist", cli.hlist, "comma-separated cell sizes");
    CLI::App* rep = app.add_subcommand("report", "print the summary of a finished run");
    rep->add_option("--out", cli.out_dir, "run directory to summarize");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : rkdg::exit_config_error;
    }

    try {
        if (run->parsed()) return run_cmd(cli, run);
        if (conv->parsed()) return converge_cmd(cli, conv);
        if (rep->parsed()) return report_cmd(cli);
        std::cerr << "no subcommand given\n";
        return rkdg::exit_config_error;
    } catch (const rkdg::OracleError& e) {
        std::cerr << "oracle error: " << e.what() << "\n";
        return rkdg::exit_oracle_invalid;
    } catch (const rkdg::BlowupError& e) {
        std::cerr << "blow-up: " << e.what() << "\n";
        return rkdg::exit_blowup;
    } catch (const rkdg::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return rkdg::exit_config_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
