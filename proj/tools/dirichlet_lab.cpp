#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dlab/cli.hpp"
#include "dlab/errors.hpp"

namespace {

// Exit codes: 0 success, 2 validation, 3 budget, 4 convergence, 5 I/O.
int run_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read config file '" << path << "'\n";
        return 5;
    }
    std::ostringstream text;
    text << in.rdbuf();
    dlab::ExperimentConfig cfg = dlab::parse_config(text.str());
    dlab::RunReport report = dlab::run_experiment(cfg);
    std::cout << "experiment:       " << report.config_echo.experiment << "\n"
              << "rows written:     " << report.rows_written << "\n"
              << "output:           " << report.config_echo.output_path << "\n"
              << "wall time (s):    " << report.wall_time_seconds << "\n"
              << "artifact version: " << report.artifact_version << "\n";
    return 0;
}

int list_all() {
    for (const dlab::ExperimentInfo& info : dlab::list_experiments()) {
        std::cout << info.name << "\n  " << info.description << "\n  required:";
        for (const std::string& p : info.required_params)
            std::cout << " " << p;
        if (!info.optional_params.empty()) {
            std::cout << "\n  optional:";
            for (const std::string& p : info.optional_params)
                std::cout << " " << p;
        }
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dirichlet-lab: experiment runner for Dirichlet polynomial numerics"};
    app.require_subcommand(1);

    std::string config_path;
    CLI::App* run = app.add_subcommand("run", "run one experiment from a JSON config");
    run->add_option("config", config_path, "path to the JSON config")->required();
    CLI::App* list = app.add_subcommand("list", "list available experiments");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return run_config(config_path);
        if (list->parsed())
            return list_all();
    } catch (const dlab::budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const dlab::convergence_error& e) {
        std::cerr << "convergence error: " << e.what() << " (last value " << e.last_value()
                  << ")\n";
        return 4;
    } catch (const dlab::io_error& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 5;
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "config parse error: " << e.what() << "\n";
        return 2;
    } catch (const dlab::validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
