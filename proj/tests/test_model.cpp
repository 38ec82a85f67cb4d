#include <gtest/gtest.h>

#include <array>
#include <random>

#include "qdiscord/model.hpp"
#include "test_support.hpp"

using namespace qdiscord;

TEST(XStateDensity, ZeroParamsIsMaximallyMixed) {
    const auto rho = x_state_density({0.0, 0.0, 0.0});
    EXPECT_TRUE(rho.matrix().isApprox(Matrix4c::Identity() / 4.0, 1e-15));
}

TEST(XStateDensity, BellProjector) {
    const auto rho = x_state_density({1.0, -1.0, 1.0});
    Eigen::Vector4cd phi(1.0, 0.0, 0.0, 1.0);
    phi /= std::sqrt(2.0);
    EXPECT_TRUE(rho.matrix().isApprox(phi * phi.adjoint(), 1e-15));
}

TEST(XStateDensity, DirectSubstitution) {
    const auto rho = x_state_density({0.6, 0.0, 0.3});
    const std::array<double, 4> diag{0.325, 0.175, 0.175, 0.325};
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(rho(i, i).real(), diag[i], 1e-15);
    EXPECT_NEAR(rho(0, 3).real(), 0.15, 1e-15);
    EXPECT_NEAR(rho(3, 0).real(), 0.15, 1e-15);
    EXPECT_NEAR(rho(1, 2).real(), 0.15, 1e-15);
    EXPECT_NEAR(rho(2, 1).real(), 0.15, 1e-15);
    EXPECT_EQ(rho(0, 1), cplx(0.0));
}

TEST(XStateDensity, RejectsNonPositiveWithEigenvalue) {
    try {
        x_state_density({2.0, 0.0, 0.0});
        FAIL() << "expected InvalidStateError";
    } catch (const InvalidStateError& e) {
        EXPECT_NE(std::string(e.what()).find("c1"), std::string::npos);
    }
    try {
        x_state_density({0.9, 0.0, 0.9});  // 1 - c3 - c1 < 0
        FAIL() << "expected InvalidStateError";
    } catch (const InvalidStateError& e) {
        EXPECT_NE(std::string(e.what()).find("lambda3"), std::string::npos);
    }
}

TEST(TwoQubitDensity, RejectsInvalidMatrices) {
    Matrix4c m = Matrix4c::Identity() / 4.0;
    m(0, 1) = cplx(0.1, 0.0);
    EXPECT_THROW(TwoQubitDensity{m}, InvalidStateError);  // not Hermitian
    EXPECT_THROW(TwoQubitDensity{Matrix4c::Identity() / 2.0}, InvalidStateError);
    Matrix4c neg = Matrix4c::Zero();
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    EXPECT_THROW(TwoQubitDensity{neg}, InvalidStateError);
}

TEST(PartialTrace, MarginalsOfXStatesAreMaximallyMixed) {
    for (const XStateParams p : {XStateParams{0, 0, 0}, XStateParams{1, -1, 1}, XStateParams{0.6, 0, 0.3}}) {
        const auto rho = x_state_density(p);
        EXPECT_TRUE(partial_trace(rho, Subsystem::A).isApprox(Matrix2c::Identity() / 2.0, 1e-15));
        EXPECT_TRUE(partial_trace(rho, Subsystem::B).isApprox(Matrix2c::Identity() / 2.0, 1e-15));
    }
}

TEST(PartialTrace, ProductStateFactorises) {
    Matrix2c a;
    a << 0.7, cplx(0.1, 0.2), cplx(0.1, -0.2), 0.3;
    Matrix2c b;
    b << 0.4, 0.0, 0.0, 0.6;
    Matrix4c m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    const TwoQubitDensity rho(m);
    EXPECT_TRUE(partial_trace(rho, Subsystem::A).isApprox(a, 1e-14));
    EXPECT_TRUE(partial_trace(rho, Subsystem::B).isApprox(b, 1e-14));
}

TEST(Entropy, ReferenceValues) {
    EXPECT_NEAR(von_neumann_entropy(Matrix4c(Matrix4c::Identity() / 4.0)), 2.0, 1e-14);
    EXPECT_NEAR(von_neumann_entropy(x_state_density({1.0, -1.0, 1.0})), 0.0, 1e-12);
    EXPECT_NEAR(von_neumann_entropy(Matrix2c(Matrix2c::Identity() / 2.0)), 1.0, 1e-15);
    Matrix2c pure;
    pure << 0.5, 0.5, 0.5, 0.5;
    EXPECT_NEAR(von_neumann_entropy(pure), 0.0, 1e-15);
}

TEST(Entropy, NegativeEigenvalueNamed) {
    Matrix2c m;
    m << 1.1, 0.0, 0.0, -0.1;
    try {
        von_neumann_entropy(m);
        FAIL();
    } catch (const InvalidStateError& e) {
        EXPECT_NE(std::string(e.what()).find("-0.1"), std::string::npos);
    }
}

TEST(ModelProperties, RandomXStatesSatisfyInvariants) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const XStateParams p = testing_support::random_x_state(rng);
        const auto rho = x_state_density(p);  // constructor re-validates
        EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-12);
        EXPECT_TRUE(partial_trace(rho, Subsystem::A).isApprox(Matrix2c::Identity() / 2.0, 1e-12));
        EXPECT_TRUE(partial_trace(rho, Subsystem::B).isApprox(Matrix2c::Identity() / 2.0, 1e-12));
    }
}

TEST(ModelProperties, ShannonMatchesDiagonalVonNeumann) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        std::array<double, 4> w{u(rng), u(rng), u(rng), i % 7 == 0 ? 0.0 : u(rng)};
        double s = 0.0;
        for (double x : w) s += x;
        for (double& x : w) x /= s;
        Matrix4c d = Matrix4c::Zero();
        for (int k = 0; k < 4; ++k) d(k, k) = w[k];
        EXPECT_NEAR(shannon_entropy(w), von_neumann_entropy(d), 1e-12);
    }
}

TEST(QubitPair, DetuningIsExactRatio) {
    const QubitPair q{3.0, 2.0};
    EXPECT_EQ(q.detuning(), 3.0 / 2.0);
    EXPECT_EQ(QubitPair::detuned(1.0, 5.0).omega_a, 5.0);
    EXPECT_THROW(validate(QubitPair{0.0, 1.0}), DomainError);
    EXPECT_THROW(validate(QubitPair{1.0, -1.0}), DomainError);
    EXPECT_NO_THROW(validate(QubitPair::large_detuning_limit(1.0)));
}
