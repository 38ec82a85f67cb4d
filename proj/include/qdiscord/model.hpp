// model.hpp: two-qubit state types and small density-matrix utilities
//
// Basis order is |00>, |01>, |10>, |11> with index 2*l_A + l_B. Entropies
// are in bits and 0*log2(0) is taken as 0.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <sstream>
#include <string>

#include "qdiscord/errors.hpp"

namespace qdiscord {

using cplx = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kEigenTol = 1e-10;

// x*log2(x) extended continuously to x = 0.
inline double xlog2x(double x) noexcept {
    return x > 0.0 ? x * std::log2(x) : 0.0;
}

// h2(p) = -p log2 p - (1-p) log2(1-p)
inline double binary_entropy(double p) noexcept {
    return -xlog2x(p) - xlog2x(1.0 - p);
}

inline double shannon_entropy(std::span<const double> weights) noexcept {
    double s = 0.0;
    for (double w : weights) s -= xlog2x(w);
    return s;
}

// ---------------------------------------------------------------------------

struct XStateParams {
    double c1{0.0};
    double c2{0.0};
    double c3{0.0};
};

// Eigenvalues of the undamped X-state: (1+c3 -/+ (c1-c2))/4, (1-c3 -/+ (c1+c2))/4.
inline std::array<double, 4> initial_eigenvalues(const XStateParams& p) noexcept {
    return {(1.0 + p.c3 - (p.c1 - p.c2)) / 4.0, (1.0 + p.c3 + (p.c1 - p.c2)) / 4.0,
            (1.0 - p.c3 - (p.c1 + p.c2)) / 4.0, (1.0 - p.c3 + (p.c1 + p.c2)) / 4.0};
}

inline void validate(const XStateParams& p) {
    const std::array<double, 3> c{p.c1, p.c2, p.c3};
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!std::isfinite(c[i]) || std::abs(c[i]) > 1.0) {
            std::ostringstream os;
            os << "X-state parameter c" << (i + 1) << " = " << c[i] << " outside [-1, 1]";
            throw InvalidStateError(os.str());
        }
    }
    const auto lam = initial_eigenvalues(p);
    for (std::size_t i = 0; i < lam.size(); ++i) {
        if (lam[i] < -kEigenTol) {
            std::ostringstream os;
            os.precision(17);
            os << "X-state (" << p.c1 << ", " << p.c2 << ", " << p.c3
               << ") is not positive: eigenvalue lambda" << (i + 1) << " = " << lam[i];
            throw InvalidStateError(os.str());
        }
    }
}

// ---------------------------------------------------------------------------

// Hermitian, unit-trace, positive semidefinite 4x4 matrix. Construction validates.
class TwoQubitDensity {
public:
    explicit TwoQubitDensity(const Matrix4c& m) : m_(m) { check(); }

    const Matrix4c& matrix() const noexcept { return m_; }
    cplx operator()(int row, int col) const { return m_(row, col); }

    static constexpr int index(int l_a, int l_b) noexcept { return 2 * l_a + l_b; }

private:
    void check() const {
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                if (!std::isfinite(m_(i, j).real()) || !std::isfinite(m_(i, j).imag()))
                    throw InvalidStateError("density matrix has a non-finite entry");
                if (std::abs(m_(i, j) - std::conj(m_(j, i))) > kHermitianTol) {
                    std::ostringstream os;
                    os << "density matrix is not Hermitian at (" << i << ", " << j << ")";
                    throw InvalidStateError(os.str());
                }
            }
        }
        const double tr = m_.trace().real();
        if (std::abs(tr - 1.0) > kTraceTol) {
            std::ostringstream os;
            os.precision(17);
            os << "density matrix trace " << tr << " != 1";
            throw InvalidStateError(os.str());
        }
        Eigen::SelfAdjointEigenSolver<Matrix4c> es(m_, Eigen::EigenvaluesOnly);
        const double lo = es.eigenvalues().minCoeff();
        if (lo < -kEigenTol) {
            std::ostringstream os;
            os.precision(17);
            os << "density matrix has negative eigenvalue " << lo;
            throw InvalidStateError(os.str());
        }
    }

    Matrix4c m_;
};

// ---------------------------------------------------------------------------

struct QubitPair {
    double omega_a{1.0};
    double omega_b{1.0};
    // omega_b -> 0 limit: gamma1 == gamma2 == exp(-omega_a^2 Q2). omega_b is ignored.
    bool detuning_limit{false};

    static QubitPair identical(double omega) { return {omega, omega, false}; }
    // omega_b = omega, omega_a = r * omega
    static QubitPair detuned(double omega, double r) { return {r * omega, omega, false}; }
    static QubitPair large_detuning_limit(double omega_a) { return {omega_a, 0.0, true}; }

    double effective_omega_b() const noexcept { return detuning_limit ? 0.0 : omega_b; }
    double detuning() const noexcept {
        return detuning_limit ? std::numeric_limits<double>::infinity() : omega_a / omega_b;
    }
    double sum_frequency() const noexcept { return omega_a + effective_omega_b(); }
    double difference_frequency() const noexcept { return omega_a - effective_omega_b(); }
};

inline void validate(const QubitPair& q) {
    if (!(q.omega_a > 0.0) || !std::isfinite(q.omega_a))
        throw DomainError("qubit frequency omega_A must be positive");
    if (!q.detuning_limit && (!(q.omega_b > 0.0) || !std::isfinite(q.omega_b)))
        throw DomainError("qubit frequency omega_B must be positive");
}

// ---------------------------------------------------------------------------

// Matrix of 1/4 (I + sum_i c_i sigma_i (x) sigma_i).
inline TwoQubitDensity x_state_density(const XStateParams& p) {
    validate(p);
    Matrix4c m = Matrix4c::Zero();
    m(0, 0) = m(3, 3) = (1.0 + p.c3) / 4.0;
    m(1, 1) = m(2, 2) = (1.0 - p.c3) / 4.0;
    m(0, 3) = m(3, 0) = (p.c1 - p.c2) / 4.0;
    m(1, 2) = m(2, 1) = (p.c1 + p.c2) / 4.0;
    return TwoQubitDensity(m);
}

enum class Subsystem { A, B };

inline Matrix2c partial_trace(const TwoQubitDensity& rho, Subsystem keep) {
    Matrix2c out = Matrix2c::Zero();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < 2; ++k) {
                s += keep == Subsystem::A
                         ? rho(TwoQubitDensity::index(i, k), TwoQubitDensity::index(j, k))
                         : rho(TwoQubitDensity::index(k, i), TwoQubitDensity::index(k, j));
            }
            out(i, j) = s;
        }
    }
    return out;
}

namespace detail {

inline double clip_eigenvalue(double lam) {
    if (lam < -kEigenTol) {
        std::ostringstream os;
        os.precision(17);
        os << "negative eigenvalue " << lam << " in entropy argument";
        throw InvalidStateError(os.str());
    }
    return std::max(lam, 0.0);
}

}  // namespace detail

// Closed-form eigenvalues of a 2x2 Hermitian matrix, ascending.
inline std::array<double, 2> hermitian_eigenvalues(const Matrix2c& m) noexcept {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double half_gap = std::hypot((a - d) / 2.0, std::abs(m(0, 1)));
    const double mid = (a + d) / 2.0;
    return {mid - half_gap, mid + half_gap};
}

inline double von_neumann_entropy(const Matrix2c& m) {
    const auto lam = hermitian_eigenvalues(m);
    return -xlog2x(detail::clip_eigenvalue(lam[0])) - xlog2x(detail::clip_eigenvalue(lam[1]));
}

// Dense path for any size up to 4.
inline double von_neumann_entropy(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols() || m.rows() < 1 || m.rows() > 4)
        throw InvalidStateError("entropy argument must be square with dimension 1..4");
    if (m.rows() == 2) return von_neumann_entropy(Matrix2c(m));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        s -= xlog2x(detail::clip_eigenvalue(es.eigenvalues()(i)));
    return s;
}

inline double von_neumann_entropy(const Matrix4c& m) {
    return von_neumann_entropy(Eigen::MatrixXcd(m));
}

inline double von_neumann_entropy(const TwoQubitDensity& rho) {
    return von_neumann_entropy(rho.matrix());
}

}  // namespace qdiscord
