// cli.hpp: run configuration and the CSV-emitting commands behind tools/qdiscord
//
// Configuration is a flat key=value namespace. A config file supplies entries
// first and command-line flags override them. Every command writes a comment
// block with the resolved configuration, then a CSV header and rows
// (17 significant digits, LF line endings).

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "qdiscord/qdiscord.hpp"

namespace qdiscord::cli {

enum ExitCode : int { ok = 0, config_error = 2, numeric_failure = 3, domain_failure = 4 };

class ConfigError : public Error {
public:
    using Error::Error;
};

struct ConfigEntry {
    std::string key;
    std::string value;
    std::string origin;  // "file.cfg:12" or "--flag"
};

enum class Spacing { linear, log };

struct TimeGrid {
    double t_min{0.0};  // in units of 1/omega_c
    double t_max{10.0};
    int points{400};
    Spacing spacing{Spacing::linear};

    std::vector<double> scaled_times() const {
        std::vector<double> out(static_cast<std::size_t>(points));
        for (int i = 0; i < points; ++i) {
            const double u = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
            out[static_cast<std::size_t>(i)] =
                spacing == Spacing::linear
                    ? t_min + u * (t_max - t_min)
                    : std::exp(std::log(t_min) + u * (std::log(t_max) - std::log(t_min)));
        }
        out.front() = t_min;
        if (points > 1) out.back() = t_max;  // exact endpoints under log spacing
        return out;
    }
};

struct SurfaceGrid {
    double c1{0.5};
    double eta_omega2_min{0.1};
    double eta_omega2_max{2.0};
    int eta_omega2_points{100};
    double ratio_min{0.5};
    double ratio_max{1.0};
    int ratio_points{100};
};

struct RunConfig {
    XStateParams state{0.6, 0.0, 0.3};
    QubitPair qubits{1.0, 1.0, false};
    double omega{1.0};               // Omega, with omega_b = Omega and omega_a = r Omega
    std::vector<double> detunings;   // several r values -> one series each
    Reservoir reservoir{};
    TimeGrid grid{};
    double t{1.0};                   // single-point time, units of 1/omega_c
    bool bruteforce{false};
    SurfaceGrid surface{};
    double c1_step{1e-3};
    int threads{1};
    std::string preset;
    std::string output;
    std::map<std::string, std::string> resolved;  // echo of every key for the stamp
};

// Keys accepted in files and (with '-' for '_') as flags.
inline const std::vector<std::pair<std::string, std::string>>& config_keys() {
    static const std::vector<std::pair<std::string, std::string>> keys{
        {"preset", "fig3 (stable amplification) | fig6 (detuning series)"},
        {"c1", "X-state parameter c1 (default 0.6)"},
        {"c2", "X-state parameter c2 (default 0)"},
        {"c3", "X-state parameter c3 (default 0.3)"},
        {"omega", "qubit frequency Omega = omega_B (default 1)"},
        {"r", "detuning r = omega_A/omega_B (default 1)"},
        {"r_list", "comma-separated detunings, one series each"},
        {"omega_a", "explicit omega_A (needs omega_b unless detuning_limit)"},
        {"omega_b", "explicit omega_B"},
        {"detuning_limit", "true: exact r -> infinity mode, gamma2 = gamma1"},
        {"eta", "reservoir coupling eta (default 1)"},
        {"omega_c", "cutoff frequency omega_c (default 1)"},
        {"temperature", "bath temperature T >= 0 (default 0)"},
        {"q2_method", "auto | quadrature | low-temperature (default auto)"},
        {"t_min", "grid start in omega_c t (default 0)"},
        {"t_max", "grid end in omega_c t (default 10)"},
        {"points", "grid points (default 400)"},
        {"spacing", "linear | log (default linear)"},
        {"t", "single-point time in omega_c t (default 1)"},
        {"bruteforce", "true: add the grid-search discord (discord command)"},
        {"surface_c1", "c1 used for critic-surface cells (default 0.5)"},
        {"eta_omega2_min", "critic-surface eta Omega^2 start (default 0.1)"},
        {"eta_omega2_max", "critic-surface eta Omega^2 end (default 2)"},
        {"eta_omega2_points", "critic-surface eta Omega^2 points (default 100)"},
        {"ratio_min", "critic-surface c3/c1 start (default 0.5)"},
        {"ratio_max", "critic-surface c3/c1 end (default 1)"},
        {"ratio_points", "critic-surface c3/c1 points (default 100)"},
        {"c1_step", "amplification c1 step (default 1e-3)"},
        {"threads", "worker threads for sweeps (default 1)"},
        {"output", "output file (default stdout)"},
    };
    return keys;
}

// ---------------------------------------------------------------------------

namespace detail {

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline double to_double(const ConfigEntry& e) {
    double v = 0.0;
    const char* first = e.value.data();
    const char* last = first + e.value.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw ConfigError(e.origin + ": " + e.key + " = '" + e.value + "' is not a number");
    return v;
}

inline int to_int(const ConfigEntry& e) {
    int v = 0;
    const char* first = e.value.data();
    const char* last = first + e.value.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw ConfigError(e.origin + ": " + e.key + " = '" + e.value + "' is not an integer");
    return v;
}

inline bool to_bool(const ConfigEntry& e) {
    if (e.value == "true" || e.value == "1" || e.value == "yes") return true;
    if (e.value == "false" || e.value == "0" || e.value == "no") return false;
    throw ConfigError(e.origin + ": " + e.key + " = '" + e.value + "' is not a boolean");
}

inline std::vector<double> to_list(const ConfigEntry& e) {
    std::vector<double> out;
    std::stringstream ss(e.value);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_double({e.key, trim(item), e.origin}));
    if (out.empty()) throw ConfigError(e.origin + ": " + e.key + " is empty");
    return out;
}

}  // namespace detail

inline std::string format_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// key=value lines; '#' starts a comment; blank lines ignored.
inline std::vector<ConfigEntry> read_config(std::istream& in, const std::string& name) {
    std::vector<ConfigEntry> out;
    std::string line;
    for (int n = 1; std::getline(in, line); ++n) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string body = detail::trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        const std::string origin = name + ":" + std::to_string(n);
        if (eq == std::string::npos) throw ConfigError(origin + ": expected key=value");
        std::string key = detail::trim(std::string_view(body).substr(0, eq));
        std::replace(key.begin(), key.end(), '-', '_');
        out.push_back({key, detail::trim(std::string_view(body).substr(eq + 1)), origin});
    }
    return out;
}

// Later entries override earlier ones, so pass file entries before flag entries.
inline RunConfig parse_config(const std::vector<ConfigEntry>& entries) {
    std::set<std::string> known;
    for (const auto& k : config_keys()) known.insert(k.first);

    std::map<std::string, ConfigEntry> set;
    for (const auto& e : entries) {
        if (!known.count(e.key)) throw ConfigError(e.origin + ": unknown key '" + e.key + "'");
        set[e.key] = e;
    }
    auto has = [&](const char* k) { return set.count(k) > 0; };
    auto num = [&](const char* k, double fallback) {
        return has(k) ? detail::to_double(set.at(k)) : fallback;
    };
    auto integer = [&](const char* k, int fallback) {
        return has(k) ? detail::to_int(set.at(k)) : fallback;
    };
    auto contradict = [&](const char* a, const char* b) {
        throw ConfigError(set.at(a).origin + ": '" + a + "' contradicts '" + b + "' (" +
                          set.at(b).origin + ")");
    };

    RunConfig cfg;
    if (has("preset")) {
        cfg.preset = set.at("preset").value;
        if (cfg.preset != "fig3" && cfg.preset != "fig6")
            throw ConfigError(set.at("preset").origin + ": unknown preset '" + cfg.preset + "'");
    }

    // State
    cfg.state.c1 = num("c1", 0.6);
    cfg.state.c2 = num("c2", 0.0);
    cfg.state.c3 = num("c3", 0.3);
    if (cfg.preset == "fig3") {
        for (const char* k : {"c2", "c3", "r", "r_list", "omega_a", "omega_b", "detuning_limit"})
            if (has(k)) contradict(k, "preset");
        cfg.state.c2 = 0.0;
        cfg.state.c3 = cfg.state.c1 / 2.0;
    }
    if (cfg.preset == "fig6") {
        for (const char* k : {"r", "omega_a", "omega_b", "detuning_limit"})
            if (has(k)) contradict(k, "preset");
        cfg.detunings = {1.0, 1.5, 2.0, 5.0};
    }
    try {
        validate(cfg.state);
    } catch (const InvalidStateError& ex) {
        const char* k = has("c1") ? "c1" : has("c2") ? "c2" : has("c3") ? "c3" : nullptr;
        throw ConfigError(std::string(k ? set.at(k).origin + ": " : "") + ex.what());
    }

    // Qubits
    cfg.omega = num("omega", 1.0);
    const bool limit = has("detuning_limit") && detail::to_bool(set.at("detuning_limit"));
    if (has("r_list")) cfg.detunings = detail::to_list(set.at("r_list"));
    if (has("r") && has("r_list")) contradict("r", "r_list");
    if (has("omega_a") || has("omega_b")) {
        for (const char* k : {"omega", "r", "r_list"})
            if (has(k)) contradict(k, has("omega_a") ? "omega_a" : "omega_b");
    }
    if (limit) {
        for (const char* k : {"r", "r_list", "omega_b"})
            if (has(k)) contradict(k, "detuning_limit");
        cfg.qubits = QubitPair::large_detuning_limit(num("omega_a", cfg.omega));
        cfg.detunings.clear();
    } else if (has("omega_a") || has("omega_b")) {
        if (!has("omega_a") || !has("omega_b"))
            throw ConfigError((has("omega_a") ? set.at("omega_a") : set.at("omega_b")).origin +
                              ": omega_a and omega_b must be given together");
        cfg.qubits = {num("omega_a", 1.0), num("omega_b", 1.0), false};
    } else {
        cfg.qubits = QubitPair::detuned(cfg.omega, num("r", 1.0));
    }
    try {
        validate(cfg.qubits);
        for (double r : cfg.detunings) validate(QubitPair::detuned(cfg.omega, r));
    } catch (const DomainError& ex) {
        throw ConfigError(std::string("qubits: ") + ex.what());
    }

    // Reservoir
    cfg.reservoir.eta = num("eta", 1.0);
    cfg.reservoir.omega_c = num("omega_c", 1.0);
    cfg.reservoir.temperature = num("temperature", 0.0);
    if (has("q2_method")) {
        const auto& m = set.at("q2_method").value;
        if (m == "auto") cfg.reservoir.q2_method = Q2Method::automatic;
        else if (m == "quadrature") cfg.reservoir.q2_method = Q2Method::quadrature;
        else if (m == "low-temperature") cfg.reservoir.q2_method = Q2Method::low_temperature;
        else throw ConfigError(set.at("q2_method").origin + ": unknown q2_method '" + m + "'");
    }
    try {
        validate(cfg.reservoir);
    } catch (const DomainError& ex) {
        throw ConfigError(std::string("reservoir: ") + ex.what());
    }
    if (cfg.preset == "fig3" || cfg.preset == "fig6") {
        if (cfg.reservoir.temperature != 0.0) contradict("temperature", "preset");
    }

    // Time grid
    cfg.grid.t_min = num("t_min", 0.0);
    cfg.grid.t_max = num("t_max", 10.0);
    cfg.grid.points = integer("points", 400);
    if (has("spacing")) {
        const auto& s = set.at("spacing").value;
        if (s == "linear") cfg.grid.spacing = Spacing::linear;
        else if (s == "log") cfg.grid.spacing = Spacing::log;
        else throw ConfigError(set.at("spacing").origin + ": spacing must be linear or log");
    }
    if (cfg.grid.points < 1) throw ConfigError("points must be >= 1");
    if (!(cfg.grid.t_min >= 0.0) || !(cfg.grid.t_max >= cfg.grid.t_min) ||
        !std::isfinite(cfg.grid.t_max))
        throw ConfigError("time grid needs 0 <= t_min <= t_max");
    if (cfg.grid.spacing == Spacing::log && !(cfg.grid.t_min > 0.0))
        throw ConfigError("log spacing needs t_min > 0");
    cfg.t = num("t", 1.0);
    if (!(cfg.t >= 0.0) || !std::isfinite(cfg.t)) throw ConfigError("t must be >= 0");
    cfg.bruteforce = has("bruteforce") && detail::to_bool(set.at("bruteforce"));

    // Sweeps
    cfg.surface.c1 = num("surface_c1", 0.5);
    cfg.surface.eta_omega2_min = num("eta_omega2_min", 0.1);
    cfg.surface.eta_omega2_max = num("eta_omega2_max", 2.0);
    cfg.surface.eta_omega2_points = integer("eta_omega2_points", 100);
    cfg.surface.ratio_min = num("ratio_min", 0.5);
    cfg.surface.ratio_max = num("ratio_max", 1.0);
    cfg.surface.ratio_points = integer("ratio_points", 100);
    if (cfg.surface.eta_omega2_points < 1 || cfg.surface.ratio_points < 1)
        throw ConfigError("surface grids need at least one point");
    if (!(cfg.surface.eta_omega2_min > 0.0) ||
        !(cfg.surface.eta_omega2_max >= cfg.surface.eta_omega2_min))
        throw ConfigError("surface needs 0 < eta_omega2_min <= eta_omega2_max");
    if (!(cfg.surface.ratio_max >= cfg.surface.ratio_min))
        throw ConfigError("surface needs ratio_min <= ratio_max");
    cfg.c1_step = num("c1_step", 1e-3);
    if (!(cfg.c1_step > 0.0) || cfg.c1_step > 2.0 / 3.0)
        throw ConfigError("c1_step must lie in (0, 2/3]");
    cfg.threads = integer("threads", 1);
    if (cfg.threads < 1) throw ConfigError("threads must be >= 1");
    if (has("output")) cfg.output = set.at("output").value;

    // Reproducibility stamp: every key with its resolved value.
    auto& r = cfg.resolved;
    r["preset"] = cfg.preset.empty() ? "none" : cfg.preset;
    r["c1"] = format_number(cfg.state.c1);
    r["c2"] = format_number(cfg.state.c2);
    r["c3"] = format_number(cfg.state.c3);
    r["omega_a"] = format_number(cfg.qubits.omega_a);
    r["omega_b"] = cfg.qubits.detuning_limit ? "0 (limit)" : format_number(cfg.qubits.omega_b);
    r["omega"] = format_number(cfg.omega);
    if (!cfg.detunings.empty()) {
        std::string list;
        for (double d : cfg.detunings) list += (list.empty() ? "" : ";") + format_number(d);
        r["r_list"] = list;
    }
    r["detuning_limit"] = cfg.qubits.detuning_limit ? "true" : "false";
    r["eta"] = format_number(cfg.reservoir.eta);
    r["omega_c"] = format_number(cfg.reservoir.omega_c);
    r["temperature"] = format_number(cfg.reservoir.temperature);
    r["q2_method"] = cfg.reservoir.q2_method == Q2Method::automatic     ? "auto"
                     : cfg.reservoir.q2_method == Q2Method::quadrature ? "quadrature"
                                                                        : "low-temperature";
    r["t_min"] = format_number(cfg.grid.t_min);
    r["t_max"] = format_number(cfg.grid.t_max);
    r["points"] = std::to_string(cfg.grid.points);
    r["spacing"] = cfg.grid.spacing == Spacing::linear ? "linear" : "log";
    r["t"] = format_number(cfg.t);
    return cfg;
}

// ---------------------------------------------------------------------------

namespace detail {

// Runs fn(i) for i in [0, n) on `threads` workers; results keep index order.
template <class Fn>
std::vector<std::string> parallel_rows(std::size_t n, int threads, Fn fn) {
    std::vector<std::string> rows(n);
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(std::max(threads, 1)));
    auto work = [&](std::size_t worker) {
        try {
            for (std::size_t i = worker; i < n; i += errors.size()) rows[i] = fn(i);
        } catch (...) {
            errors[worker] = std::current_exception();
        }
    };
    if (threads <= 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < errors.size(); ++w) pool.emplace_back(work, w);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

inline void write_stamp(std::ostream& out, std::string_view command,
                        const std::map<std::string, std::string>& resolved) {
    out << "# qdiscord " << command << '\n';
    for (const auto& [k, v] : resolved) out << "# " << k << '=' << v << '\n';
}

inline std::string join(std::initializer_list<std::string> cells) {
    std::string s;
    for (const auto& c : cells) {
        if (!s.empty()) s += ',';
        s += c;
    }
    return s;
}

}  // namespace detail

inline std::string critic_label(const CriticTimeResult& r, double omega_c) {
    switch (r.kind) {
        case CriticKind::finite: return format_number(omega_c * r.tc);
        case CriticKind::infinite: return "inf";
        case CriticKind::none: return "none";
        case CriticKind::unresolved: return "unresolved";
    }
    return "?";
}

// Row cells for one time point: wc_t,gamma1,gamma2,mu,nu,chi,I,C,D,regime
inline std::string evolve_row(const XStateParams& p, const QubitPair& q, const Reservoir& res,
                              double scaled_t) {
    const double t = scaled_t / res.omega_c;
    const DecayFactors decay = gamma_factors(t, q, res);
    const EvolvedXState x = evolve_x_state(p, t, q, decay);
    const DiscordBreakdown d = discord_analytic(x);
    return detail::join({format_number(scaled_t), format_number(decay.gamma1),
                         format_number(decay.gamma2), format_number(x.mu), format_number(x.nu),
                         format_number(d.chi), format_number(d.mutual_information),
                         format_number(d.classical_correlation), format_number(d.discord),
                         std::string(to_string(d.regime))});
}

inline void cmd_evolve(const RunConfig& cfg, std::ostream& out) {
    std::vector<std::pair<double, QubitPair>> series;
    if (cfg.detunings.empty()) {
        series.push_back({cfg.qubits.detuning(), cfg.qubits});
    } else {
        for (double r : cfg.detunings) series.push_back({r, QubitPair::detuned(cfg.omega, r)});
    }
    const bool multi = !cfg.detunings.empty();
    detail::write_stamp(out, "evolve", cfg.resolved);
    for (const auto& [r, q] : series) {
        const CriticTimeResult tc = critic_time(cfg.state, q, cfg.reservoir);
        if (tc.kind == CriticKind::unresolved)
            throw NumericError("critic time could not be bracketed for r = " + format_number(r),
                               std::numeric_limits<double>::infinity());
        out << "# critic_time r=" << format_number(r) << " wc_tc=" << critic_label(tc, cfg.reservoir.omega_c)
            << '\n';
    }
    out << (multi ? "r," : "") << "wc_t,gamma1,gamma2,mu,nu,chi,I,C,D,regime\n";
    const auto times = cfg.grid.scaled_times();
    for (const auto& [r, q] : series) {
        const auto rows = detail::parallel_rows(times.size(), cfg.threads, [&](std::size_t i) {
            return evolve_row(cfg.state, q, cfg.reservoir, times[i]);
        });
        for (const auto& row : rows) out << (multi ? format_number(r) + "," : "") << row << '\n';
    }
}

inline void cmd_critic_surface(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.reservoir.zero_temperature())
        throw DomainError("critic-surface is defined at zero temperature only");
    const SurfaceGrid& s = cfg.surface;
    auto axis = [](double lo, double hi, int n) {
        std::vector<double> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
        return v;
    };
    const auto couplings = axis(s.eta_omega2_min, s.eta_omega2_max, s.eta_omega2_points);
    const auto ratios = axis(s.ratio_min, s.ratio_max, s.ratio_points);

    auto stamp = cfg.resolved;
    stamp["surface_c1"] = format_number(s.c1);
    detail::write_stamp(out, "critic-surface", stamp);
    out << "eta_omega2,c3_over_c1,wc_tc\n";
    const std::size_t n = couplings.size() * ratios.size();
    const auto rows = detail::parallel_rows(n, cfg.threads, [&](std::size_t idx) {
        const double coupling = couplings[idx / ratios.size()];
        const double ratio = ratios[idx % ratios.size()];
        std::string cell;
        try {
            Reservoir res{coupling, cfg.reservoir.omega_c, 0.0, cfg.reservoir.q2_method};
            const CriticTimeResult tc =
                critic_time({s.c1, 0.0, ratio * s.c1}, QubitPair::identical(1.0), res);
            cell = critic_label(tc, res.omega_c);
        } catch (const InvalidStateError&) {
            cell = "invalid";
        } catch (const DomainError&) {
            cell = "invalid";
        }
        return detail::join({format_number(coupling), format_number(ratio), cell});
    });
    for (const auto& row : rows) out << row << '\n';
}

inline void cmd_amplification(const RunConfig& cfg, std::ostream& out) {
    auto stamp = cfg.resolved;
    stamp["c1_step"] = format_number(cfg.c1_step);
    detail::write_stamp(out, "amplification", stamp);
    out << "c1,D0,Dinf,Gamma\n";
    std::vector<double> c1s;
    for (std::size_t k = 1;; ++k) {
        const double c = static_cast<double>(k) * cfg.c1_step;
        if (c > 2.0 / 3.0 - 1e-12) break;
        c1s.push_back(c);
    }
    c1s.push_back(2.0 / 3.0);
    for (double c : c1s) {
        const AmplificationReport r = amplification_rate(c);
        out << detail::join({format_number(c), format_number(r.d0), format_number(r.d_inf),
                             format_number(r.rate)})
            << '\n';
    }
    const AmplificationScan scan = scan_amplification(1e-4);
    out << "# gamma_max=" << format_number(scan.gamma_max)
        << " c1_at_max=" << format_number(scan.c1_at_max)
        << " gamma_min=" << format_number(scan.gamma_min) << '\n';
}

inline void cmd_critic_time(const RunConfig& cfg, std::ostream& out) {
    const CriticTimeResult tc = critic_time(cfg.state, cfg.qubits, cfg.reservoir);
    std::string closed;
    const auto& p = cfg.state;
    const auto& res = cfg.reservoir;
    if (res.zero_temperature()) {
        try {
            if (cfg.qubits.detuning_limit && p.c1 == 1.0 && p.c3 == -p.c2) {
                closed = format_number(res.omega_c * critic_time_closed_form_detuned(
                                                         p.c3, res.eta, cfg.qubits.omega_a, res.omega_c));
            } else if (!cfg.qubits.detuning_limit && cfg.qubits.difference_frequency() == 0.0 &&
                       p.c2 == 0.0) {
                closed = format_number(res.omega_c * critic_time_closed_form_identical(
                                                         p.c1, p.c3, res.eta, cfg.qubits.omega_a,
                                                         res.omega_c));
            }
        } catch (const DomainError&) {
            closed.clear();
        }
    }
    detail::write_stamp(out, "critic-time", cfg.resolved);
    out << "kind,wc_tc,method,wc_tc_closed_form\n";
    out << detail::join({std::string(to_string(tc.kind)), critic_label(tc, res.omega_c),
                         std::string(to_string(tc.method)), closed})
        << '\n';
    if (tc.kind == CriticKind::unresolved)
        throw NumericError("critic time could not be bracketed", std::numeric_limits<double>::infinity());
}

inline void cmd_discord(const RunConfig& cfg, std::ostream& out) {
    const double t = cfg.t / cfg.reservoir.omega_c;
    const DecayFactors decay = gamma_factors(t, cfg.qubits, cfg.reservoir);
    const EvolvedXState x = evolve_x_state(cfg.state, t, cfg.qubits, decay);
    detail::write_stamp(out, "discord", cfg.resolved);
    out << "wc_t,gamma1,gamma2,mu,nu,chi,I,C,D,regime" << (cfg.bruteforce ? ",D_bruteforce" : "")
        << '\n';
    out << evolve_row(cfg.state, cfg.qubits, cfg.reservoir, cfg.t);
    if (cfg.bruteforce) out << ',' << format_number(discord_bruteforce(assemble_density(x)).discord);
    out << '\n';
}

}  // namespace qdiscord::cli
