// qdiscord: command-line front end for the dephasing / discord library
//
//   qdiscord evolve          D(t) series (optionally one per detuning r)
//   qdiscord critic-surface  omega_c t_c over (eta Omega^2, c3/c1), T = 0
//   qdiscord amplification   D(0), D(inf), Gamma over c1 in (0, 2/3]
//   qdiscord critic-time     single critic-time query
//   qdiscord discord         single-point discord query
//
// Exit codes: 0 ok, 2 configuration error, 3 numeric failure, 4 domain error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "qdiscord/cli.hpp"

namespace cli = qdiscord::cli;

int main(int argc, char** argv) {
    CLI::App app{"Exact dephasing dynamics and quantum discord of two qubits in an Ohmic bath"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    app.add_option("--config", config_path, "key=value file; flags override its entries");

    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;
    for (const auto& [key, help] : cli::config_keys()) {
        std::string flag = key;
        std::replace(flag.begin(), flag.end(), '_', '-');
        options[key] = app.add_option("--" + flag, values[key], help);
    }

    auto* evolve = app.add_subcommand("evolve", "time series of gamma, mu, nu, chi, I, C, D");
    auto* surface = app.add_subcommand("critic-surface", "critic-time surface at T = 0");
    auto* amplification = app.add_subcommand("amplification", "amplification rate scan over c1");
    auto* critic = app.add_subcommand("critic-time", "critic time for one configuration");
    auto* discord = app.add_subcommand("discord", "discord at a single time");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::config_error;
    }

    try {
        std::vector<cli::ConfigEntry> entries;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw cli::ConfigError("cannot read config file '" + config_path + "'");
            entries = cli::read_config(in, config_path);
        }
        for (const auto& [key, opt] : options) {
            if (opt->count() > 0) entries.push_back({key, values[key], opt->get_name()});
        }
        const cli::RunConfig cfg = cli::parse_config(entries);

        std::ofstream file;
        if (!cfg.output.empty()) {
            file.open(cfg.output, std::ios::binary);
            if (!file) throw cli::ConfigError("cannot open output '" + cfg.output + "'");
        }
        std::ostringstream buffer;
        if (evolve->parsed()) cli::cmd_evolve(cfg, buffer);
        else if (surface->parsed()) cli::cmd_critic_surface(cfg, buffer);
        else if (amplification->parsed()) cli::cmd_amplification(cfg, buffer);
        else if (critic->parsed()) cli::cmd_critic_time(cfg, buffer);
        else if (discord->parsed()) cli::cmd_discord(cfg, buffer);
        (cfg.output.empty() ? std::cout : file) << buffer.str();
    } catch (const cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return cli::config_error;
    } catch (const qdiscord::NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return cli::numeric_failure;
    } catch (const qdiscord::DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return cli::domain_failure;
    } catch (const qdiscord::InvalidStateError& e) {
        std::cerr << "invalid state: " << e.what() << '\n';
        return cli::domain_failure;
    }
    return cli::ok;
}
