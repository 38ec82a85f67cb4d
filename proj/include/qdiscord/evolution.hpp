// evolution.hpp: exact pure-dephasing evolution of the reduced two-qubit state
//
// General law, element by element in the eigenbasis of H_S:
//   rho_{l'l}(t) = rho_{l'l}(0) exp{-i[E'^2 - E^2] Q1} exp{-[E' - E]^2 Q2} exp{-i[E' - E] t}
// with E(l_A, l_B) = [(-1)^l_A w_A + (-1)^l_B w_B] / 2.
//
// Layout: the element for the pair (bra = l', ket = l) is stored at matrix
// entry [ket][bra]. With that convention the X-state evolves into
//   mu e^{+i D1} at (00, 11), nu e^{+i D2} at (01, 10)
// and the general and X-state paths agree entry by entry.

#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "qdiscord/model.hpp"
#include "qdiscord/reservoir.hpp"

namespace qdiscord {

struct Level {
    int a{0};  // l_A
    int b{0};  // l_B

    constexpr int index() const noexcept { return TwoQubitDensity::index(a, b); }
};

struct LevelPair {
    Level bra;  // l'
    Level ket;  // l
};

inline double level_energy(Level l, const QubitPair& q) noexcept {
    const double sa = l.a == 0 ? 1.0 : -1.0;
    const double sb = l.b == 0 ? 1.0 : -1.0;
    return (sa * q.omega_a + sb * q.effective_omega_b()) / 2.0;
}

struct ReservoirFunctions {
    double q1{0.0};
    double q2{0.0};
};

inline ReservoirFunctions reservoir_functions(double t, const Reservoir& res) {
    return {q1(t, res), q2(t, res)};
}

inline cplx evolve_element(cplx initial, const LevelPair& pair, double t, const QubitPair& qubits,
                           const ReservoirFunctions& rf) {
    const double e_bra = level_energy(pair.bra, qubits);
    const double e_ket = level_energy(pair.ket, qubits);
    const double gap = e_bra - e_ket;
    const double reservoir_phase = (e_bra * e_bra - e_ket * e_ket) * rf.q1;
    const double damping = std::exp(-gap * gap * rf.q2);
    return initial * damping * std::polar(1.0, -(reservoir_phase + gap * t));
}

inline cplx evolve_element(cplx initial, const LevelPair& pair, double t, const QubitPair& qubits,
                           const Reservoir& res) {
    detail::require_time(t);
    return evolve_element(initial, pair, t, qubits, reservoir_functions(t, res));
}

// General path: every entry of an arbitrary two-qubit state.
inline TwoQubitDensity evolve_density(const TwoQubitDensity& rho0, double t,
                                      const QubitPair& qubits, const ReservoirFunctions& rf) {
    Matrix4c m;
    for (int ket = 0; ket < 4; ++ket) {
        for (int bra = 0; bra < 4; ++bra) {
            const LevelPair pair{{bra / 2, bra % 2}, {ket / 2, ket % 2}};
            m(ket, bra) = evolve_element(rho0(ket, bra), pair, t, qubits, rf);
        }
    }
    return TwoQubitDensity(m);
}

inline TwoQubitDensity evolve_density(const TwoQubitDensity& rho0, double t,
                                      const QubitPair& qubits, const Reservoir& res) {
    detail::require_time(t);
    validate(qubits);
    return evolve_density(rho0, t, qubits, reservoir_functions(t, res));
}

// ---------------------------------------------------------------------------

struct EvolvedXState {
    double mu{0.0};
    double nu{0.0};
    double delta1{0.0};
    double delta2{0.0};
    double c3{0.0};
    double t{0.0};
};

inline EvolvedXState evolve_x_state(const XStateParams& p, double t, const QubitPair& qubits,
                                    const DecayFactors& decay) {
    return {(p.c1 - p.c2) * decay.gamma1, (p.c1 + p.c2) * decay.gamma2,
            qubits.sum_frequency() * t, qubits.difference_frequency() * t, p.c3, t};
}

inline EvolvedXState evolve_x_state(const XStateParams& p, double t, const QubitPair& qubits,
                                    const Reservoir& res) {
    validate(p);
    validate(qubits);
    detail::require_time(t);
    return evolve_x_state(p, t, qubits, gamma_factors(t, qubits, res));
}

inline TwoQubitDensity assemble_density(const EvolvedXState& x) {
    Matrix4c m = Matrix4c::Zero();
    m(0, 0) = m(3, 3) = (1.0 + x.c3) / 4.0;
    m(1, 1) = m(2, 2) = (1.0 - x.c3) / 4.0;
    m(0, 3) = x.mu / 4.0 * std::polar(1.0, x.delta1);
    m(3, 0) = x.mu / 4.0 * std::polar(1.0, -x.delta1);
    m(1, 2) = x.nu / 4.0 * std::polar(1.0, x.delta2);
    m(2, 1) = x.nu / 4.0 * std::polar(1.0, -x.delta2);
    return TwoQubitDensity(m);
}

}  // namespace qdiscord
