// discord.hpp: quantum discord of two-qubit states, measured on qubit B
//
// Two independent routes:
//   * discord_analytic: closed expressions for evolved X-states (eigenvalues,
//     mutual information, chi = max(|c3|, (|mu|+|nu|)/2), classical correlation).
//   * discord_bruteforce: builds the projectors, conditional states and entropies
//     explicitly and minimises the conditional entropy over a refined (theta, phi)
//     grid. Works for any two-qubit density matrix.

#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string_view>
#include <utility>

#include "qdiscord/errors.hpp"
#include "qdiscord/evolution.hpp"
#include "qdiscord/model.hpp"

namespace qdiscord {

enum class Regime { before_critic, after_critic, no_critic };

enum class RegimeHint { before, after, unknown };

inline std::string_view to_string(Regime r) noexcept {
    switch (r) {
        case Regime::before_critic: return "before-critic";
        case Regime::after_critic: return "after-critic";
        case Regime::no_critic: return "no-critic";
    }
    return "?";
}

struct DiscordBreakdown {
    double mutual_information{0.0};
    double classical_correlation{0.0};
    double discord{0.0};
    double chi{0.0};
    Regime regime{Regime::no_critic};
};

// Projectors |theta_par><theta_par|, |theta_perp><theta_perp| with
//   |theta_par>  = cos(theta)|0> + e^{i phi} sin(theta)|1>
//   |theta_perp> = e^{-i phi} sin(theta)|0> - cos(theta)|1>
struct MeasurementBasis {
    double theta{0.0};  // [0, pi/2]
    double phi{0.0};    // [0, 2 pi)

    std::array<Eigen::Vector2cd, 2> states() const {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        Eigen::Vector2cd par(c, std::polar(s, phi));
        Eigen::Vector2cd perp(std::polar(s, -phi), -c);
        return {par, perp};
    }

    std::array<Matrix2c, 2> projectors() const {
        const auto v = states();
        return {v[0] * v[0].adjoint(), v[1] * v[1].adjoint()};
    }
};

// ---------------------------------------------------------------------------
// Analytic route

inline std::array<double, 4> x_state_eigenvalues(const EvolvedXState& x) {
    std::array<double, 4> lam{(1.0 + x.c3 - x.mu) / 4.0, (1.0 + x.c3 + x.mu) / 4.0,
                              (1.0 - x.c3 - x.nu) / 4.0, (1.0 - x.c3 + x.nu) / 4.0};
    for (std::size_t i = 0; i < lam.size(); ++i) {
        if (lam[i] < -kEigenTol) {
            std::ostringstream os;
            os.precision(17);
            os << "evolved X-state has negative eigenvalue lambda" << (i + 1) << " = " << lam[i];
            throw InvalidStateError(os.str());
        }
        lam[i] = std::max(lam[i], 0.0);
    }
    return lam;
}

// Marginals are maximally mixed, so S(rho_A) = S(rho_B) = 1.
inline double mutual_information(const EvolvedXState& x) {
    const auto lam = x_state_eigenvalues(x);
    double s = 2.0;
    for (double l : lam) s += xlog2x(l);
    return s;
}

inline double lambda_param(const MeasurementBasis& basis, const EvolvedXState& x) noexcept {
    const double c2t = std::cos(2.0 * basis.theta);
    const double s2t = std::sin(2.0 * basis.theta);
    const double coh = x.mu * x.mu + x.nu * x.nu +
                       2.0 * x.mu * x.nu * std::cos(x.delta2 - x.delta1 + 2.0 * basis.phi);
    return std::sqrt(std::max(0.0, x.c3 * x.c3 * c2t * c2t + 0.25 * coh * s2t * s2t));
}

// Entropy of either conditional state of A, (1 -/+ Lambda)/2 eigenvalues.
inline double conditional_entropy(double lambda) noexcept {
    return binary_entropy((1.0 + lambda) / 2.0);
}

inline double coherence_strength(const EvolvedXState& x) noexcept {
    return (std::abs(x.mu) + std::abs(x.nu)) / 2.0;
}

inline double chi(const EvolvedXState& x) noexcept {
    return std::max(std::abs(x.c3), coherence_strength(x));
}

// sum_n (1 + (-1)^n chi)/2 log2(1 + (-1)^n chi) == 1 - h2((1 + chi)/2)
inline double correlation_from_chi(double chi_value) {
    if (chi_value > 1.0 + kEigenTol || chi_value < 0.0 || !std::isfinite(chi_value)) {
        std::ostringstream os;
        os.precision(17);
        os << "chi = " << chi_value << " outside [0, 1]";
        throw InvalidStateError(os.str());
    }
    const double c = std::min(chi_value, 1.0);
    return 0.5 * (xlog2x(1.0 - c) + xlog2x(1.0 + c));
}

inline double classical_correlation(const EvolvedXState& x) { return correlation_from_chi(chi(x)); }

// Branch by chi; a tie counts as after the critic time.
inline Regime regime_of(const EvolvedXState& x) noexcept {
    return coherence_strength(x) > std::abs(x.c3) ? Regime::before_critic : Regime::after_critic;
}

// A before/after hint forces that branch (Lambda'_n = 1 +/- (|mu|+|nu|)/2 or
// Lambda_n = 1 +/- |c3|); without a hint the branch follows chi.
inline DiscordBreakdown discord_analytic(const EvolvedXState& x,
                                         RegimeHint hint = RegimeHint::unknown) {
    DiscordBreakdown out;
    out.mutual_information = mutual_information(x);
    switch (hint) {
        case RegimeHint::before:
            out.regime = Regime::before_critic;
            out.chi = coherence_strength(x);
            break;
        case RegimeHint::after:
            out.regime = Regime::after_critic;
            out.chi = std::abs(x.c3);
            break;
        case RegimeHint::unknown:
            out.regime = regime_of(x);
            out.chi = chi(x);
            break;
    }
    out.classical_correlation = correlation_from_chi(out.chi);
    out.discord = out.mutual_information - out.classical_correlation;
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force route

struct MeasurementOutcome {
    std::array<double, 2> probability{};
    std::array<Matrix2c, 2> conditional_state{};
    std::array<double, 2> entropy{};

    double conditional_entropy() const noexcept {
        return probability[0] * entropy[0] + probability[1] * entropy[1];
    }
};

// rho_A^(k) = Tr_B[(I (x) P_k) rho (I (x) P_k)] / p_k
inline MeasurementOutcome measure_on_b(const TwoQubitDensity& rho, const MeasurementBasis& basis) {
    const auto projectors = basis.projectors();
    MeasurementOutcome out;
    for (int k = 0; k < 2; ++k) {
        Matrix4c lift = Matrix4c::Zero();
        lift.block<2, 2>(0, 0) = projectors[k];
        lift.block<2, 2>(2, 2) = projectors[k];
        const Matrix4c post = lift * rho.matrix() * lift;
        Matrix2c reduced;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                reduced(i, j) = post(2 * i, 2 * j) + post(2 * i + 1, 2 * j + 1);
        const double p = reduced.trace().real();
        out.probability[k] = p;
        if (p > 1e-300) {
            out.conditional_state[k] = reduced / p;
            out.entropy[k] = von_neumann_entropy(out.conditional_state[k]);
        } else {
            out.conditional_state[k] = Matrix2c::Identity() / 2.0;
            out.entropy[k] = 0.0;
        }
    }
    return out;
}

struct GridSpec {
    int theta_points{64};
    int phi_points{128};
    int refinement_rounds{3};
    int refinement_factor{10};
    double convergence_tol{1e-6};
};

struct GridMinimum {
    MeasurementBasis basis;
    double conditional_entropy{std::numeric_limits<double>::infinity()};
};

// Refinement did not settle; carries the best result found.
class RefinementError : public NumericError {
public:
    RefinementError(const std::string& what, double achieved, DiscordBreakdown best)
        : NumericError(what, achieved), best_(best) {}

    const DiscordBreakdown& best() const noexcept { return best_; }

private:
    DiscordBreakdown best_;
};

namespace detail {

// Ties go to the smaller theta, then the smaller phi.
inline bool better(const GridMinimum& candidate, const GridMinimum& incumbent) noexcept {
    if (candidate.conditional_entropy != incumbent.conditional_entropy)
        return candidate.conditional_entropy < incumbent.conditional_entropy;
    if (candidate.basis.theta != incumbent.basis.theta)
        return candidate.basis.theta < incumbent.basis.theta;
    return candidate.basis.phi < incumbent.basis.phi;
}

inline double wrap_phase(double phi) noexcept {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    phi = std::fmod(phi, two_pi);
    return phi < 0.0 ? phi + two_pi : phi;
}

}  // namespace detail

inline GridMinimum minimize_conditional_entropy(const TwoQubitDensity& rho, const GridSpec& grid,
                                                double* last_change = nullptr) {
    if (grid.theta_points < 2 || grid.phi_points < 1 || grid.refinement_factor < 2)
        throw DomainError("measurement grid too small");
    constexpr double theta_max = std::numbers::pi / 2.0;
    double theta_step = theta_max / (grid.theta_points - 1);
    double phi_step = 2.0 * std::numbers::pi / grid.phi_points;

    GridMinimum best;
    auto visit = [&](double theta, double phi) {
        GridMinimum c{{theta, phi}, measure_on_b(rho, {theta, phi}).conditional_entropy()};
        if (detail::better(c, best)) best = c;
    };
    for (int i = 0; i < grid.theta_points; ++i)
        for (int j = 0; j < grid.phi_points; ++j) visit(i * theta_step, j * phi_step);

    double change = std::numeric_limits<double>::infinity();
    const int half = grid.refinement_factor;
    for (int round = 0; round < grid.refinement_rounds; ++round) {
        const double previous = best.conditional_entropy;
        const MeasurementBasis centre = best.basis;
        theta_step /= grid.refinement_factor;
        phi_step /= grid.refinement_factor;
        for (int i = -half; i <= half; ++i) {
            const double theta = centre.theta + i * theta_step;
            if (theta < 0.0 || theta > theta_max) continue;
            for (int j = -half; j <= half; ++j)
                visit(theta, detail::wrap_phase(centre.phi + j * phi_step));
        }
        change = previous - best.conditional_entropy;
    }
    if (last_change) *last_change = change;
    return best;
}

inline DiscordBreakdown discord_bruteforce(const TwoQubitDensity& rho, const GridSpec& grid = {}) {
    if (grid.theta_points < 64 || grid.phi_points < 128)
        throw DomainError("brute-force grid must be at least 64 x 128 in (theta, phi)");
    double change = 0.0;
    const GridMinimum best = minimize_conditional_entropy(rho, grid, &change);

    const double s_a = von_neumann_entropy(partial_trace(rho, Subsystem::A));
    const double s_b = von_neumann_entropy(partial_trace(rho, Subsystem::B));
    DiscordBreakdown out;
    out.mutual_information = s_a + s_b - von_neumann_entropy(rho);
    out.classical_correlation = s_a - best.conditional_entropy;
    out.discord = out.mutual_information - out.classical_correlation;
    out.regime = Regime::no_critic;
    out.chi = std::numeric_limits<double>::quiet_NaN();
    if (grid.refinement_rounds > 0 && !(change < grid.convergence_tol)) {
        std::ostringstream os;
        os.precision(6);
        os << "measurement refinement not converged (last change " << change << ")";
        throw RefinementError(os.str(), change, out);
    }
    return out;
}

}  // namespace qdiscord
