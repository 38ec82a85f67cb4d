#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qdiscord/cli.hpp"

using namespace qdiscord;
using namespace qdiscord::cli;

namespace {

RunConfig config(std::initializer_list<std::pair<const char*, const char*>> kv) {
    std::vector<ConfigEntry> entries;
    for (const auto& [k, v] : kv) entries.push_back({k, v, std::string("--") + k});
    return parse_config(entries);
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text, std::string* header = nullptr) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    bool seen_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!seen_header) {
            seen_header = true;
            if (header) *header = line;
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

template <class Cmd>
std::string run(Cmd cmd, const RunConfig& cfg) {
    std::ostringstream out;
    cmd(cfg, out);
    return out.str();
}

int run_binary(const std::string& args) {
    const std::string command = std::string(QDISCORD_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(ParseConfig, Defaults) {
    const RunConfig cfg = parse_config({});
    EXPECT_EQ(cfg.state.c1, 0.6);
    EXPECT_EQ(cfg.state.c2, 0.0);
    EXPECT_EQ(cfg.state.c3, 0.3);
    EXPECT_EQ(cfg.reservoir.eta, 1.0);
    EXPECT_EQ(cfg.reservoir.omega_c, 1.0);
    EXPECT_EQ(cfg.reservoir.temperature, 0.0);
    EXPECT_EQ(cfg.qubits.omega_a, 1.0);
    EXPECT_EQ(cfg.qubits.omega_b, 1.0);
    EXPECT_EQ(cfg.grid.points, 400);
    EXPECT_EQ(cfg.grid.t_max, 10.0);
    EXPECT_EQ(cfg.resolved.at("c1"), "0.59999999999999998");
}

TEST(ParseConfig, Rejections) {
    try {
        config({{"c1", "2"}});
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("--c1"), std::string::npos) << e.what();
    }
    EXPECT_THROW(config({{"temperature", "-1"}}), ConfigError);
    EXPECT_THROW(config({{"colour", "blue"}}), ConfigError);
    EXPECT_THROW(config({{"c1", "abc"}}), ConfigError);
    EXPECT_THROW(config({{"r", "2"}, {"r_list", "1,2"}}), ConfigError);
    EXPECT_THROW(config({{"preset", "fig3"}, {"c3", "0.1"}}), ConfigError);
    EXPECT_THROW(config({{"detuning_limit", "true"}, {"r", "3"}}), ConfigError);
    EXPECT_THROW(config({{"omega_a", "2"}}), ConfigError);
    EXPECT_THROW(config({{"points", "0"}}), ConfigError);
    EXPECT_THROW(config({{"spacing", "log"}}), ConfigError);  // t_min = 0
}

TEST(ParseConfig, FileThenFlags) {
    std::istringstream file("# sample\nc1 = 0.5\n\nr=2  # detuning\n");
    auto entries = read_config(file, "run.cfg");
    ASSERT_EQ(entries.size(), 2u);
    EXPECT_EQ(entries[1].origin, "run.cfg:4");
    entries.push_back({"c1", "0.4", "--c1"});
    const RunConfig cfg = parse_config(entries);
    EXPECT_EQ(cfg.state.c1, 0.4);
    EXPECT_EQ(cfg.qubits.omega_a, 2.0);

    std::istringstream bad("c1 0.5\n");
    try {
        read_config(bad, "bad.cfg");
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("bad.cfg:1"), std::string::npos);
    }
}

TEST(ParseConfig, Presets) {
    const RunConfig fig3 = config({{"preset", "fig3"}, {"c1", "0.4"}});
    EXPECT_EQ(fig3.state.c3, 0.2);
    const RunConfig fig6 = config({{"preset", "fig6"}});
    EXPECT_EQ(fig6.detunings, (std::vector<double>{1.0, 1.5, 2.0, 5.0}));
    const RunConfig limit = config({{"detuning_limit", "true"}, {"c1", "1"}, {"c2", "-0.5"}, {"c3", "0.5"}});
    EXPECT_TRUE(limit.qubits.detuning_limit);
}

TEST(FormatNumber, Tokens) {
    EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
    EXPECT_EQ(format_number(0.5), "0.5");
    EXPECT_EQ(format_number(0.1), "0.10000000000000001");
}

TEST(Evolve, StableAmplificationPreset) {
    std::string header;
    const auto rows = csv_rows(run(cmd_evolve, config({{"preset", "fig3"}})), &header);
    EXPECT_EQ(header, "wc_t,gamma1,gamma2,mu,nu,chi,I,C,D,regime");
    ASSERT_EQ(rows.size(), 400u);
    double prev = -1.0;
    for (const auto& row : rows) {
        ASSERT_EQ(row.size(), 10u);
        const double d = std::stod(row[8]);
        EXPECT_GE(d, prev);
        prev = d;
    }
    // Each row reproduces the library call.
    const auto& row = rows[123];
    const double t = std::stod(row[0]);
    const EvolvedXState x = evolve_x_state({0.6, 0.0, 0.3}, t, QubitPair::identical(1.0), Reservoir{});
    EXPECT_EQ(row[8], format_number(discord_analytic(x).discord));
}

TEST(Evolve, DetuningSeries) {
    const std::string text = run(cmd_evolve, config({{"preset", "fig6"}}));
    EXPECT_NE(text.find("# critic_time r=1 wc_tc=inf"), std::string::npos);
    EXPECT_NE(text.find("# critic_time r=1.5 wc_tc=1.07"), std::string::npos);
    std::string header;
    const auto rows = csv_rows(text, &header);
    EXPECT_EQ(header.rfind("r,wc_t,", 0), 0u);
    EXPECT_EQ(rows.size(), 1600u);
    EXPECT_EQ(rows.front()[0], "1");
    EXPECT_EQ(rows.back()[0], "5");
}

TEST(Evolve, ZeroStateHasZeroDiscord) {
    const auto rows = csv_rows(run(cmd_evolve, config({{"c1", "0"}, {"c2", "0"}, {"c3", "0"}, {"points", "50"}})));
    ASSERT_EQ(rows.size(), 50u);
    for (const auto& row : rows) EXPECT_EQ(row[8], "0");
}

TEST(CriticSurface, Columns) {
    const RunConfig cfg = config({{"eta_omega2_points", "4"}, {"ratio_min", "0.5"}, {"ratio_max", "1"},
                                  {"ratio_points", "3"}});
    std::string header;
    const auto rows = csv_rows(run(cmd_critic_surface, cfg), &header);
    EXPECT_EQ(header, "eta_omega2,c3_over_c1,wc_tc");
    ASSERT_EQ(rows.size(), 12u);
    for (const auto& row : rows) {
        if (row[1] == "0.5") {
            EXPECT_EQ(row[2], "inf");
        } else if (row[1] == "1") {
            EXPECT_EQ(row[2], "0");
        }
    }
    EXPECT_THROW(run(cmd_critic_surface, config({{"temperature", "0.1"}})), DomainError);
}

TEST(CriticSurface, SpotCellMatchesClosedForm) {
    const RunConfig cfg = config({{"eta_omega2_min", "1"}, {"eta_omega2_max", "1"}, {"eta_omega2_points", "1"},
                                  {"ratio_min", "0.66666666666666663"}, {"ratio_max", "0.66666666666666663"},
                                  {"ratio_points", "1"}});
    const auto rows = csv_rows(run(cmd_critic_surface, cfg));
    ASSERT_EQ(rows.size(), 1u);
    const double expected = critic_time_closed_form_identical(0.5, 0.5 * (2.0 / 3.0), 1.0, 1.0, 1.0);
    EXPECT_NEAR(std::stod(rows[0][2]), expected, 1e-8 * expected);
}

TEST(Amplification, RowsAndFooter) {
    const std::string text = run(cmd_amplification, config({{"c1_step", "0.01"}}));
    std::string header;
    const auto rows = csv_rows(text, &header);
    EXPECT_EQ(header, "c1,D0,Dinf,Gamma");
    ASSERT_EQ(rows.size(), 67u);
    double prev = 0.0;
    for (const auto& row : rows) {
        EXPECT_GT(std::stod(row[2]), prev);
        prev = std::stod(row[2]);
        EXPECT_GT(std::stod(row[3]), 1.0);
    }
    EXPECT_LT(std::stod(rows.front()[1]), 1e-3);
    const auto pos = text.find("# gamma_max=");
    ASSERT_NE(pos, std::string::npos);
    EXPECT_NEAR(std::stod(text.substr(pos + 12)), 2.17, 0.05);
}

TEST(SinglePoint, CriticTimeAndDiscord) {
    const auto tc = csv_rows(run(cmd_critic_time, config({{"c3", "0.4"}})));
    ASSERT_EQ(tc.size(), 1u);
    EXPECT_EQ(tc[0][0], "finite");
    EXPECT_NEAR(std::stod(tc[0][1]), 0.85559967716735219, 1e-10);
    EXPECT_NEAR(std::stod(tc[0][3]), 0.85559967716735219, 1e-14);

    std::string header;
    const auto d = csv_rows(run(cmd_discord, config({{"t", "0"}, {"bruteforce", "true"}})), &header);
    EXPECT_EQ(header, "wc_t,gamma1,gamma2,mu,nu,chi,I,C,D,regime,D_bruteforce");
    ASSERT_EQ(d.size(), 1u);
    EXPECT_NEAR(std::stod(d[0][8]), 0.11169558864163878, 1e-14);
    EXPECT_NEAR(std::stod(d[0][10]), 0.11169558864163878, 1e-4);
}

TEST(CliProperties, ThreadCountDoesNotChangeOutput) {
    for (const char* threads : {"2", "5"}) {
        EXPECT_EQ(run(cmd_evolve, config({{"preset", "fig6"}, {"points", "97"}})),
                  run(cmd_evolve, config({{"preset", "fig6"}, {"points", "97"}, {"threads", threads}})));
        const RunConfig one = config({{"eta_omega2_points", "9"}, {"ratio_points", "11"}});
        RunConfig many = one;
        many.threads = std::atoi(threads);
        EXPECT_EQ(run(cmd_critic_surface, one), run(cmd_critic_surface, many));
    }
}

TEST(Binary, ExitCodes) {
    EXPECT_EQ(run_binary("critic-time"), 0);
    EXPECT_EQ(run_binary("evolve --c1 2"), 2);
    EXPECT_EQ(run_binary("evolve --no-such-flag 1"), 2);
    EXPECT_EQ(run_binary("frobnicate"), 2);
    EXPECT_EQ(run_binary("critic-surface --temperature 0.1"), 4);
    EXPECT_EQ(run_binary("critic-time --r 2 --eta 1e-6"), 3);
}

TEST(Binary, ConfigFileAndOutput) {
    const std::string dir = ::testing::TempDir();
    const std::string cfg = dir + "qdiscord_test.cfg";
    const std::string out = dir + "qdiscord_test.csv";
    std::ofstream(cfg) << "c1 = 0.6\nc3 = 0.45\n";
    ASSERT_EQ(run_binary("discord --config " + cfg + " --c3 0.4 --t 0 --output " + out), 0);
    std::ifstream in(out);
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_NE(text.str().find("# c3=0.40000000000000002"), std::string::npos);
    EXPECT_EQ(csv_rows(text.str()).size(), 1u);
    EXPECT_EQ(run_binary("discord --config " + dir + "missing.cfg"), 2);
}

TEST(TimeGrid, EndpointsAreExact) {
    const TimeGrid lin{0.0, 10.0, 400, Spacing::linear};
    const TimeGrid log{0.01, 100.0, 200, Spacing::log};
    EXPECT_EQ(lin.scaled_times().back(), 10.0);
    EXPECT_EQ(log.scaled_times().front(), 0.01);
    EXPECT_EQ(log.scaled_times().back(), 100.0);
    EXPECT_NEAR(log.scaled_times()[100] / log.scaled_times()[99], std::pow(1e4, 1.0 / 199.0), 1e-12);
}
