// reservoir.hpp: Ohmic bath functions Q1(t), Q2(t) and the decay factors gamma1, gamma2
//
// The bath only enters through the combination J(w) g^2(w) = eta w exp(-w/wc).
// Q1 and Q2 are integrals of that weight divided by w^2 against sin(wt) and
// 2 sin^2(wt/2) coth(beta w/2). Units: hbar = k_B = 1, beta = 1/T.

#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <sstream>

#include "qdiscord/errors.hpp"
#include "qdiscord/model.hpp"

namespace qdiscord {

enum class Q2Method {
    automatic,        // closed form at T = 0, quadrature otherwise
    quadrature,       // always integrate, including T = 0
    low_temperature,  // the low-temperature closed form, any T
};

struct Reservoir {
    double eta{1.0};
    double omega_c{1.0};
    double temperature{0.0};  // 0 selects the exact zero-temperature mode
    Q2Method q2_method{Q2Method::automatic};

    bool zero_temperature() const noexcept { return temperature == 0.0; }
    double beta() const noexcept {
        return zero_temperature() ? std::numeric_limits<double>::infinity() : 1.0 / temperature;
    }
};

inline void validate(const Reservoir& r) {
    if (!(r.eta > 0.0) || !std::isfinite(r.eta))
        throw DomainError("reservoir coupling eta must be positive");
    if (!(r.omega_c > 0.0) || !std::isfinite(r.omega_c))
        throw DomainError("reservoir cutoff omega_c must be positive");
    if (!(r.temperature >= 0.0) || !std::isfinite(r.temperature))
        throw DomainError("reservoir temperature must be >= 0");
}

struct DecayFactors {
    double gamma1{1.0};
    double gamma2{1.0};
};

struct QuadratureResult {
    double value{0.0};
    double error{0.0};
};

inline constexpr double kQuadAbsTol = 1e-10;
inline constexpr double kQuadRelTol = 1e-9;

// ---------------------------------------------------------------------------

inline double spectral_weight(double omega, const Reservoir& res) noexcept {
    return res.eta * omega * std::exp(-omega / res.omega_c);
}

namespace detail {

inline void require_time(double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("time must be finite and >= 0");
}

// coth(beta w / 2); 1 at T = 0.
inline double thermal_factor(double omega, const Reservoir& res) noexcept {
    if (res.zero_temperature()) return 1.0;
    return 1.0 / std::tanh(omega / (2.0 * res.temperature));
}

// Upper limit W with eta wc coth(beta W/2) exp(-W/wc) / W below 1e-14 (integrand
// envelopes are at most 2 eta exp(-w/wc) coth(beta w/2) / w).
inline double tail_cutoff(const Reservoir& res) noexcept {
    double w = 30.0 * res.omega_c;
    for (int i = 0; i < 200; ++i) {
        const double bound = 2.0 * res.eta * res.omega_c * thermal_factor(w, res) *
                             std::exp(-w / res.omega_c) / w;
        if (bound < 1e-14) break;
        w += res.omega_c;
    }
    return w;
}

// Integrate f over [0, W] with a fixed 31-point Gauss-Kronrod rule on uniform
// panels. Panels stay below half an oscillation period pi/t, half the cutoff
// scale, and a few thermal widths (coth has poles at distance 2 pi T from 0).
template <class F>
QuadratureResult integrate_oscillatory(F&& f, double t, const Reservoir& res, const char* what) {
    using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
    const double upper = tail_cutoff(res);
    double width = 0.5 * res.omega_c;
    if (t > 0.0) width = std::min(width, std::numbers::pi / t);
    if (!res.zero_temperature()) width = std::min(width, 4.0 * res.temperature);
    const double count = std::ceil(upper / width);
    if (count > 5e6) {
        std::ostringstream os;
        os << what << ": t = " << t << " needs " << count << " quadrature panels";
        throw NumericError(os.str(), std::numeric_limits<double>::infinity());
    }
    const auto panels = static_cast<std::size_t>(count);
    width = upper / count;
    QuadratureResult total;
    for (std::size_t k = 0; k < panels; ++k) {
        const double a = width * static_cast<double>(k);
        const double b = (k + 1 == panels) ? upper : a + width;
        double err = 0.0;
        total.value += GK::integrate(f, a, b, 0, 0.0, &err);
        total.error += err;
    }
    if (!std::isfinite(total.value) ||
        total.error > std::max(kQuadAbsTol, kQuadRelTol * std::abs(total.value))) {
        std::ostringstream os;
        os.precision(6);
        os << what << " quadrature did not converge at t = " << t
           << " (achieved error estimate " << total.error << ")";
        throw NumericError(os.str(), total.error);
    }
    return total;
}

// ln(sinh(x)/x) without overflow or cancellation.
inline double log_sinhc(double x) noexcept {
    x = std::abs(x);
    if (x < 1e-4) return x * x / 6.0 - x * x * x * x / 180.0;
    if (x > 20.0) return x - std::numbers::ln2 - std::log(x) + std::log1p(-std::exp(-2.0 * x));
    return std::log(std::sinh(x) / x);
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline double q1_closed_form(double t, const Reservoir& res) {
    detail::require_time(t);
    return res.eta * std::atan(res.omega_c * t);
}

inline QuadratureResult q1_quadrature(double t, const Reservoir& res) {
    detail::require_time(t);
    if (t == 0.0) return {};
    auto f = [&](double w) {
        if (w == 0.0) return res.eta * t;
        return res.eta * std::exp(-w / res.omega_c) * std::sin(w * t) / w;
    };
    return detail::integrate_oscillatory(f, t, res, "Q1");
}

inline double q1(double t, const Reservoir& res) { return q1_quadrature(t, res).value; }

inline double q2_zero_temperature(double t, const Reservoir& res) {
    detail::require_time(t);
    const double x = res.omega_c * t;
    return 0.5 * res.eta * std::log1p(x * x);
}

inline QuadratureResult q2_quadrature(double t, const Reservoir& res) {
    detail::require_time(t);
    if (t == 0.0) return {};
    auto f = [&](double w) {
        if (w == 0.0) {
            // sin^2(wt/2)/w -> w t^2/4 and coth(beta w/2) -> 2T/w
            return res.zero_temperature() ? 0.0 : res.eta * t * t * res.temperature;
        }
        const double s = std::sin(0.5 * w * t);
        return 2.0 * res.eta * std::exp(-w / res.omega_c) * (s / w) * s *
               detail::thermal_factor(w, res);
    };
    return detail::integrate_oscillatory(f, t, res, "Q2");
}

// eta { ln[1 + (wc t)^2]/2 + ln[(beta/(pi t)) sinh(pi t/beta)] }
inline double q2_low_temperature(double t, const Reservoir& res) {
    detail::require_time(t);
    const double x = res.omega_c * t;
    const double thermal =
        res.zero_temperature() ? 0.0 : detail::log_sinhc(std::numbers::pi * t * res.temperature);
    return res.eta * (0.5 * std::log1p(x * x) + thermal);
}

inline double q2(double t, const Reservoir& res) {
    switch (res.q2_method) {
        case Q2Method::quadrature: return q2_quadrature(t, res).value;
        case Q2Method::low_temperature: return q2_low_temperature(t, res);
        case Q2Method::automatic: break;
    }
    return res.zero_temperature() ? q2_zero_temperature(t, res) : q2_quadrature(t, res).value;
}

// dQ2/dt, consistent with the method q2() uses.
inline double q2_rate(double t, const Reservoir& res) {
    detail::require_time(t);
    const double x = res.omega_c * t;
    const double vacuum = res.eta * res.omega_c * x / (1.0 + x * x);
    if (res.q2_method == Q2Method::low_temperature) {
        if (res.zero_temperature() || t == 0.0) return vacuum;
        const double y = std::numbers::pi * t * res.temperature;
        // d/dt ln(sinh y / y) = (pi T)(coth y - 1/y)
        const double dlog = y < 1e-4 ? y / 3.0 : 1.0 / std::tanh(y) - 1.0 / y;
        return vacuum + res.eta * std::numbers::pi * res.temperature * dlog;
    }
    if (res.zero_temperature() && res.q2_method == Q2Method::automatic) return vacuum;
    if (t == 0.0) return 0.0;
    auto f = [&](double w) {
        if (w == 0.0) return res.zero_temperature() ? 0.0 : 2.0 * res.eta * t * res.temperature;
        return res.eta * std::exp(-w / res.omega_c) * std::sin(w * t) *
               detail::thermal_factor(w, res);
    };
    return detail::integrate_oscillatory(f, t, res, "dQ2/dt").value;
}

inline DecayFactors decay_from_q2(double q2_value, const QubitPair& qubits) noexcept {
    const double s = qubits.sum_frequency();
    const double d = qubits.difference_frequency();
    return {std::exp(-s * s * q2_value), std::exp(-d * d * q2_value)};
}

inline DecayFactors gamma_factors(double t, const QubitPair& qubits, const Reservoir& res) {
    return decay_from_q2(q2(t, res), qubits);
}

// ((r-1)/(r+1))^2, with the detuning-limit value 1.
inline double decay_exponent_ratio(const QubitPair& qubits) noexcept {
    const double ratio = qubits.difference_frequency() / qubits.sum_frequency();
    return ratio * ratio;
}

}  // namespace qdiscord
