#include <gtest/gtest.h>

#include <cmath>

#include "simonzx/zx/tensor.hpp"

using namespace simonzx::zx;

namespace {

using Matrix = std::vector<std::vector<complex>>;

const complex i1{0.0, 1.0};

Matrix cnot() {
    return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
}

}  // namespace

TEST(Tensor, PhasedZState) {
    ZxDiagram d;
    const int z = d.add_z(pi / 3);
    d.add_edge(z, d.add_output());
    const auto t = eval_tensor(d);
    ASSERT_EQ(t.legs(), 1U);
    EXPECT_NEAR(std::abs(t[0] - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(t[1] - std::polar(1.0, pi / 3)), 0.0, 1e-12);
}

TEST(Tensor, PhaseZeroXStateIsComputationalZero) {
    ZxDiagram d;
    d.add_edge(d.add_x(), d.add_output());
    const Tensor zero(1, {1.0, 0.0});
    EXPECT_TRUE(proportional(eval_tensor(d), zero));
    ZxDiagram e;
    e.add_edge(e.add_x(pi), e.add_output());
    EXPECT_TRUE(proportional(eval_tensor(e), Tensor(1, {0.0, 1.0})));
}

TEST(Tensor, HadamardWire) {
    ZxDiagram d;
    d.add_edge(d.add_input(), d.add_output(), EdgeKind::hadamard);
    EXPECT_TRUE(proportional(eval_tensor(d), Tensor(2, {1.0, 1.0, 1.0, -1.0})));
}

TEST(Tensor, ZPhaseGate) {
    ZxDiagram d;
    const int z = d.add_z(pi / 2);
    d.add_edge(d.add_input(), z);
    d.add_edge(z, d.add_output());
    const auto t = eval_tensor(d);
    EXPECT_TRUE(proportional(t, Tensor::from_operator({{1, 0}, {0, i1}}, 1, 1)));
}

TEST(Tensor, CnotFromSpiders) {
    ZxDiagram d;
    const int in1 = d.add_input();
    const int in2 = d.add_input();
    const int c = d.add_z();
    const int t = d.add_x();
    d.add_edge(in1, c);
    d.add_edge(in2, t);
    d.add_edge(c, t);
    d.add_edge(c, d.add_output());
    d.add_edge(t, d.add_output());
    EXPECT_LT(proportionality_residual(eval_tensor(d), Tensor::from_operator(cnot(), 2, 2)), 1e-12);
}

TEST(Tensor, FromOperatorIndexesInputsFirst) {
    // X gate: output 1 for input 0
    const auto t = Tensor::from_operator({{0, 1}, {1, 0}}, 1, 1);
    EXPECT_EQ(t[0b01], complex(1.0));
    EXPECT_EQ(t[0b10], complex(1.0));
    EXPECT_EQ(t[0b00], complex(0.0));
}

TEST(Tensor, ContractLeg) {
    // |a b c> with amplitude index value
    std::vector<complex> data(8);
    for (int i = 0; i < 8; ++i) data[i] = i;
    const Tensor t(3, data);
    const auto middle0 = t.contract_leg(1, {1.0, 0.0});
    EXPECT_EQ(middle0.legs(), 2U);
    EXPECT_EQ(middle0[0b00], complex(0.0));
    EXPECT_EQ(middle0[0b01], complex(1.0));
    EXPECT_EQ(middle0[0b10], complex(4.0));
    EXPECT_EQ(middle0[0b11], complex(5.0));
    const auto plus = t.contract_leg(0, {1.0, 1.0});
    EXPECT_EQ(plus[0b11], complex(3.0 + 7.0));
}

TEST(Proportionality, ScalarMultiplesAndZero) {
    const Tensor a(1, {1.0, i1});
    const Tensor b(1, {2.0 * i1, -2.0});
    EXPECT_LT(proportionality_residual(a, b), 1e-15);
    EXPECT_GT(proportionality_residual(a, Tensor(1, {1.0, -i1})), 0.5);
    EXPECT_EQ(proportionality_residual(Tensor::zeros(2), Tensor::zeros(2)), 0.0);
    EXPECT_TRUE(std::isinf(proportionality_residual(Tensor::zeros(1), a)));
    EXPECT_TRUE(std::isinf(proportionality_residual(a, Tensor::zeros(2))));
}

TEST(Tensor, ScalarDiagram) {
    ZxDiagram d;
    const int z = d.add_z();
    const int x = d.add_x();
    d.add_edge(z, x);
    const auto t = eval_tensor(d);
    EXPECT_EQ(t.legs(), 0U);
    EXPECT_NEAR(std::abs(t[0]), 2.0, 1e-12);  // <+|0> style pairing, unnormalized
}

TEST(Tensor, ContractionCapIsEnforced) {
    ZxDiagram d;
    const int z = d.add_z();
    for (int i = 0; i < 25; ++i) d.add_edge(z, d.add_output());
    EXPECT_THROW(eval_tensor(d), ContractionTooLarge);
}
