// analysis.hpp: critic time, stable amplification, derivative signs, protection
//
// The critic time t_c solves (|mu(t)| + |nu(t)|)/2 = |c3|. The left side is a
// sum of decreasing exponentials of Q2(t), so bisection on a bracket is safe.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string_view>
#include <vector>

#include "qdiscord/discord.hpp"
#include "qdiscord/errors.hpp"
#include "qdiscord/evolution.hpp"
#include "qdiscord/model.hpp"
#include "qdiscord/reservoir.hpp"

namespace qdiscord {

enum class CriticKind { finite, infinite, none, unresolved };
enum class CriticMethod { root_find, closed_form_identical, closed_form_detuned };

inline std::string_view to_string(CriticKind k) noexcept {
    switch (k) {
        case CriticKind::finite: return "finite";
        case CriticKind::infinite: return "infinite";
        case CriticKind::none: return "none";
        case CriticKind::unresolved: return "unresolved";
    }
    return "?";
}

inline std::string_view to_string(CriticMethod m) noexcept {
    switch (m) {
        case CriticMethod::root_find: return "root-find";
        case CriticMethod::closed_form_identical: return "closed-form-identical";
        case CriticMethod::closed_form_detuned: return "closed-form-detuned";
    }
    return "?";
}

struct CriticTimeResult {
    CriticKind kind{CriticKind::unresolved};
    double tc{std::numeric_limits<double>::quiet_NaN()};
    CriticMethod method{CriticMethod::root_find};

    bool is_finite() const noexcept { return kind == CriticKind::finite; }
};

struct CriticSearch {
    double t_max_scaled{1e6};  // bracket limit in units of 1/omega_c
    double rel_tol{1e-13};
    int max_iterations{400};
};

inline constexpr double kBoundaryTol = 1e-14;

// (|mu(t)| + |nu(t)|)/2
inline double coherence_strength_at(double t, const XStateParams& p, const QubitPair& qubits,
                                    const Reservoir& res) {
    const DecayFactors d = gamma_factors(t, qubits, res);
    return (std::abs(p.c1 - p.c2) * d.gamma1 + std::abs(p.c1 + p.c2) * d.gamma2) / 2.0;
}

inline CriticTimeResult critic_time(const XStateParams& p, const QubitPair& qubits,
                                    const Reservoir& res, const CriticSearch& search = {}) {
    validate(p);
    validate(qubits);
    validate(res);
    const double target = std::abs(p.c3);
    const double at_zero = (std::abs(p.c1 - p.c2) + std::abs(p.c1 + p.c2)) / 2.0;
    if (target > at_zero + kBoundaryTol) return {CriticKind::none};
    if (std::abs(at_zero - target) <= kBoundaryTol) return {CriticKind::finite, 0.0};

    // Q2 grows without bound, so gamma1 -> 0; gamma2 stays 1 only for identical qubits.
    const bool resonant = qubits.difference_frequency() == 0.0;
    const double infimum = resonant ? std::abs(p.c1 + p.c2) / 2.0 : 0.0;
    if (infimum >= target)
        return {CriticKind::infinite, std::numeric_limits<double>::infinity()};

    auto excess = [&](double t) { return coherence_strength_at(t, p, qubits, res) - target; };
    const double t_max = search.t_max_scaled / res.omega_c;
    double lo = 0.0;
    double hi = std::min(1.0 / res.omega_c, t_max);
    try {
        while (excess(hi) > 0.0) {
            lo = hi;
            hi *= 2.0;
            if (hi > t_max) return {CriticKind::unresolved};
        }
        for (int i = 0; i < search.max_iterations && hi - lo > search.rel_tol * hi; ++i) {
            const double mid = 0.5 * (lo + hi);
            (excess(mid) > 0.0 ? lo : hi) = mid;
        }
    } catch (const NumericError&) {
        return {CriticKind::unresolved};
    }
    return {CriticKind::finite, 0.5 * (lo + hi)};
}

// Zero temperature, identical qubits, c2 = 0:
//   t_c = (1/wc) sqrt[(2 c3/c1 - 1)^(-1/(2 eta Omega^2)) - 1]
inline double critic_time_closed_form_identical(double c1, double c3, double eta, double omega,
                                                double omega_c) {
    if (!(c1 > 0.0) || c1 > 2.0 / 3.0 + kBoundaryTol || c3 < c1 / 2.0 - kBoundaryTol ||
        c3 > c1 + kBoundaryTol) {
        std::ostringstream os;
        os << "closed-form critic time needs 0 < c1/2 <= c3 <= c1 <= 2/3 (got c1 = " << c1
           << ", c3 = " << c3 << ")";
        throw DomainError(os.str());
    }
    if (!(eta > 0.0) || !(omega > 0.0) || !(omega_c > 0.0))
        throw DomainError("eta, Omega and omega_c must be positive");
    const double base = 2.0 * c3 / c1 - 1.0;
    if (base <= 0.0) return std::numeric_limits<double>::infinity();
    const double grown = std::pow(base, -1.0 / (2.0 * eta * omega * omega));
    return std::sqrt(std::max(0.0, grown - 1.0)) / omega_c;
}

// Zero temperature, r >> 1, state c1 = 1, -c2 = c3 = c:
//   t_c = (1/wc) sqrt[c^(-2/(eta wA^2)) - 1]
inline double critic_time_closed_form_detuned(double c, double eta, double omega_a,
                                              double omega_c) {
    if (!(c > 0.0 && c < 1.0)) throw DomainError("detuned closed-form critic time needs 0 < c < 1");
    if (!(eta > 0.0) || !(omega_a > 0.0) || !(omega_c > 0.0))
        throw DomainError("eta, omega_A and omega_c must be positive");
    return std::sqrt(std::pow(c, -2.0 / (eta * omega_a * omega_a)) - 1.0) / omega_c;
}

// ---------------------------------------------------------------------------
// Identical qubits, family c2 = 0, c3 = c1/2.

namespace detail {

inline void require_identical_family(double c1) {
    if (!(c1 > 0.0) || c1 > 2.0 / 3.0 + kBoundaryTol) {
        std::ostringstream os;
        os << "identical-qubit family needs 0 < c1 <= 2/3 (got " << c1 << ")";
        throw DomainError(os.str());
    }
}

}  // namespace detail

// Long-time plateau of the discord (gamma1 = 0).
inline double asymptotic_discord_identical(double c1) {
    detail::require_identical_family(c1);
    return xlog2x(2.0 + c1) / 8.0 - xlog2x(2.0 - c1) / 4.0 + xlog2x(2.0 - 3.0 * c1) / 8.0;
}

// Discord of the initial state of the same family.
inline double initial_discord_identical(double c1) {
    detail::require_identical_family(c1);
    return -1.0 + xlog2x(2.0 - c1) / 8.0 + xlog2x(2.0 + c1) / 8.0 + xlog2x(2.0 + 3.0 * c1) / 8.0 +
           xlog2x(2.0 - 3.0 * c1) / 8.0 - xlog2x(1.0 + c1) / 2.0 - xlog2x(1.0 - c1) / 2.0;
}

struct AmplificationReport {
    double d0{0.0};
    double d_inf{0.0};
    double rate{0.0};
    double c1{0.0};
};

inline AmplificationReport amplification_rate(double c1) {
    AmplificationReport r;
    r.c1 = c1;
    r.d0 = initial_discord_identical(c1);
    r.d_inf = asymptotic_discord_identical(c1);
    if (!(r.d0 > 0.0)) {
        std::ostringstream os;
        os << "amplification rate undefined: initial discord " << r.d0 << " at c1 = " << c1;
        throw DomainError(os.str());
    }
    r.rate = r.d_inf / r.d0;
    return r;
}

struct AmplificationScan {
    double c1_at_max{0.0};
    double gamma_max{0.0};
    double gamma_min{std::numeric_limits<double>::infinity()};
    std::size_t samples{0};
};

// c1 = step, 2 step, ..., 2/3, then a parabolic step around the best sample.
inline AmplificationScan scan_amplification(double step = 1e-4) {
    if (!(step > 0.0) || step > 2.0 / 3.0) throw DomainError("scan step must lie in (0, 2/3]");
    const double upper = 2.0 / 3.0;
    std::vector<double> c1s;
    for (std::size_t k = 1;; ++k) {
        const double c = static_cast<double>(k) * step;
        if (c > upper - 1e-12) break;
        c1s.push_back(c);
    }
    c1s.push_back(upper);

    AmplificationScan scan;
    scan.samples = c1s.size();
    std::vector<double> rates(c1s.size());
    std::size_t best = 0;
    for (std::size_t i = 0; i < c1s.size(); ++i) {
        rates[i] = amplification_rate(c1s[i]).rate;
        scan.gamma_min = std::min(scan.gamma_min, rates[i]);
        if (rates[i] > rates[best]) best = i;
    }
    scan.c1_at_max = c1s[best];
    scan.gamma_max = rates[best];
    if (best > 0 && best + 1 < c1s.size()) {
        const double ym = rates[best - 1], y0 = rates[best], yp = rates[best + 1];
        const double curvature = ym - 2.0 * y0 + yp;
        if (curvature < 0.0) {
            const double x = c1s[best] - 0.5 * step * (yp - ym) / curvature;
            const double y = amplification_rate(x).rate;
            if (y > scan.gamma_max) {
                scan.c1_at_max = x;
                scan.gamma_max = y;
            }
        }
    }
    return scan;
}

// ---------------------------------------------------------------------------
// Sign analysis of dD/dt = (dD/dgamma1)(dgamma1/dt).

struct AmplificationIndicator {
    double f{0.0};  // F(gamma1) <= 0
    double g{0.0};  // G(gamma1)
    double h{0.0};  // d nu / d gamma1
    Regime regime{Regime::before_critic};
    double dd_dgamma1{0.0};
    double dgamma1_dt{0.0};
    double dd_dt{0.0};

    int sign() const noexcept { return (dd_dt > 0.0) - (dd_dt < 0.0); }
    bool amplifying() const noexcept { return dd_dt > 0.0; }
};

namespace detail {

// coefficient/4 * log2(num/den), zero when the coefficient is zero.
inline double weighted_log_ratio(double coefficient, double num, double den) noexcept {
    if (coefficient == 0.0) return 0.0;
    return coefficient / 4.0 * std::log2(num / den);
}

}  // namespace detail

inline AmplificationIndicator amplification_indicator(const EvolvedXState& x,
                                                      const XStateParams& p,
                                                      const QubitPair& qubits,
                                                      const Reservoir& res) {
    const DecayFactors decay = gamma_factors(x.t, qubits, res);
    const double k = decay_exponent_ratio(qubits);

    AmplificationIndicator out;
    // nu = (c1 + c2) gamma1^k
    out.h = k == 0.0 ? 0.0 : (p.c1 + p.c2) * k * decay.gamma2 / decay.gamma1;
    const double am = std::abs(x.mu);
    const double an = std::abs(x.nu);
    out.f = (std::abs(p.c1 - p.c2) + std::abs(out.h)) / 4.0 * std::log2((2.0 - am - an) / (2.0 + am + an));
    out.g = detail::weighted_log_ratio(p.c1 - p.c2, 1.0 + x.c3 + x.mu, 1.0 + x.c3 - x.mu) +
            detail::weighted_log_ratio(out.h, 1.0 - x.c3 + x.nu, 1.0 - x.c3 - x.nu);
    out.regime = regime_of(x);
    out.dd_dgamma1 = out.regime == Regime::before_critic ? out.f + out.g : out.g;
    const double s = qubits.sum_frequency();
    out.dgamma1_dt = -s * s * q2_rate(x.t, res) * decay.gamma1;
    out.dd_dt = out.dd_dgamma1 * out.dgamma1_dt;
    return out;
}

// ---------------------------------------------------------------------------
// Large detuning, c1 = 1, -c2 = c3 = c, gamma2 = gamma1.

struct ProtectedDiscord {
    double before{0.0};  // constant: 1 - h2((1 + c)/2)
    double after{0.0};   // 1 - h2((1 + gamma1)/2)
};

inline ProtectedDiscord protected_discord(double c, double gamma1) {
    if (!(c > 0.0 && c < 1.0)) throw DomainError("protected discord needs 0 < c < 1");
    if (!(gamma1 >= 0.0 && gamma1 <= 1.0)) throw DomainError("gamma1 must lie in [0, 1]");
    auto branch = [](double v) { return 0.5 * (xlog2x(1.0 + v) + xlog2x(1.0 - v)); };
    return {branch(c), branch(gamma1)};
}

// D(t) minus the protected value, for a finite-detuning pair.
inline double protection_deviation(double c, double t, const QubitPair& qubits,
                                   const Reservoir& res) {
    const XStateParams p{1.0, -c, c};
    const EvolvedXState x = evolve_x_state(p, t, qubits, res);
    return discord_analytic(x).discord - protected_discord(c, 0.0).before;
}

}  // namespace qdiscord
