#include <gtest/gtest.h>

#include "simonzx/zx/gadget.hpp"

using namespace simonzx::zx;

namespace {

using Matrix = std::vector<std::vector<complex>>;

Matrix mul(const Matrix& a, const Matrix& b) {
    Matrix r(a.size(), std::vector<complex>(b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b[0].size(); ++j) {
            for (std::size_t k = 0; k < b.size(); ++k) r[i][j] += a[i][k] * b[k][j];
        }
    }
    return r;
}

const complex mi{0.0, -1.0};

}  // namespace

TEST(Gadget, OnIsControlledZWithPhaseCorrections) {
    // CZ followed by S^dagger on both lines, written out
    const Matrix cz{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
    const Matrix sdag2{{1, 0, 0, 0}, {0, mi, 0, 0}, {0, 0, mi, 0}, {0, 0, 0, mi * mi}};
    const auto want = Tensor::from_operator(mul(sdag2, cz), 2, 2);
    EXPECT_LT(proportionality_residual(eval_tensor(adaptive_gadget(true)), want), 1e-12);
}

TEST(Gadget, OnIsCnotInHadamardFrame) {
    // CZ = (I x H) CNOT (I x H): with Hadamards on the lower line the gadget is a CNOT plus corrections
    const Matrix cnot{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    const Matrix ih{{1, 1, 0, 0}, {1, -1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, -1}};
    const Matrix sdag2{{1, 0, 0, 0}, {0, mi, 0, 0}, {0, 0, mi, 0}, {0, 0, 0, mi * mi}};
    const auto want = Tensor::from_operator(mul(ih, mul(sdag2, mul(ih, cnot))), 2, 2);
    auto g = adaptive_gadget(true);
    // wrap the lower line in Hadamard edges at both ends
    for (int b : {g.inputs()[1], g.outputs()[1]}) g.set_edge_kind(g.incident_edges(b).front(), EdgeKind::hadamard);
    EXPECT_LT(proportionality_residual(eval_tensor(g), want), 1e-12);
}

TEST(Gadget, OffDisconnectsLines) {
    const Matrix id{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    EXPECT_LT(proportionality_residual(eval_tensor(adaptive_gadget(false)), Tensor::from_operator(id, 2, 2)), 1e-12);
}

TEST(Gadget, IdentityChains) {
    const auto on = verify_adaptive_cnot(true);
    const auto off = verify_adaptive_cnot(false);
    EXPECT_TRUE(on.holds) << on.max_residual;
    EXPECT_TRUE(off.holds) << off.max_residual;
    EXPECT_GE(adaptive_cnot_chain().size(), 4U);
    EXPECT_GE(adaptive_bridge_chain().size(), 3U);
}
