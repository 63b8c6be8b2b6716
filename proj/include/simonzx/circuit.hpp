#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "simonzx/bits.hpp"
#include "simonzx/function_table.hpp"
#include "simonzx/gf2.hpp"
#include "simonzx/oracle_synth.hpp"

namespace simonzx {

using complex = std::complex<double>;

inline constexpr std::size_t max_simulated_qubits = 24;

struct Op {
    enum class Kind { h, x, cnot };
    Kind kind = Kind::h;
    std::size_t a = 1;  ///< target, or control for CNOT
    std::size_t b = 0;  ///< CNOT target

    static Op h(std::size_t q) { return {Kind::h, q, 0}; }
    static Op x(std::size_t q) { return {Kind::x, q, 0}; }
    static Op cnot(std::size_t control, std::size_t target) { return {Kind::cnot, control, target}; }

    friend bool operator==(const Op&, const Op&) = default;
};

enum class Init { zero, plus };

/// Qubits are 1-based; for a Simon circuit 1..n are working and n+1..2n auxiliary.
struct Circuit {
    std::size_t q = 0;
    std::vector<Init> initial;
    std::vector<Op> ops;

    void validate() const {
        if (q == 0 || q > max_simulated_qubits) throw std::out_of_range("circuit width out of range");
        if (initial.size() != q) throw std::invalid_argument("one initial state per qubit required");
        auto check = [this](std::size_t i) {
            if (i < 1 || i > q) throw std::out_of_range("qubit index " + std::to_string(i) + " out of range");
        };
        for (const auto& op : ops) {
            check(op.a);
            if (op.kind == Op::Kind::cnot) {
                check(op.b);
                if (op.a == op.b) throw std::invalid_argument("CNOT control equals target");
            }
        }
    }
};

/// Dense amplitudes; qubit 1 is the most significant index bit.
class StateVector {
public:
    explicit StateVector(std::size_t q) : q_(q), amps_(std::size_t{1} << q, complex{0.0, 0.0}) {
        if (q > max_simulated_qubits) throw std::out_of_range("state vector above qubit cap");
        amps_[0] = 1.0;
    }

    [[nodiscard]] std::size_t qubits() const noexcept { return q_; }
    [[nodiscard]] const std::vector<complex>& amplitudes() const noexcept { return amps_; }
    [[nodiscard]] complex operator[](std::size_t i) const { return amps_.at(i); }

    void apply(const Op& op) {
        switch (op.kind) {
            case Op::Kind::h: apply_h(op.a); break;
            case Op::Kind::x: apply_x(op.a); break;
            case Op::Kind::cnot: apply_cnot(op.a, op.b); break;
        }
    }

    void apply_h(std::size_t qubit) {
        const auto mask = mask_of(qubit);
        const double r = 1.0 / std::sqrt(2.0);
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((i & mask) != 0) continue;
            const auto a0 = amps_[i];
            const auto a1 = amps_[i | mask];
            amps_[i] = r * (a0 + a1);
            amps_[i | mask] = r * (a0 - a1);
        }
    }

    void apply_x(std::size_t qubit) {
        const auto mask = mask_of(qubit);
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((i & mask) == 0) std::swap(amps_[i], amps_[i | mask]);
        }
    }

    void apply_cnot(std::size_t control, std::size_t target) {
        const auto cm = mask_of(control);
        const auto tm = mask_of(target);
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((i & cm) != 0 && (i & tm) == 0) std::swap(amps_[i], amps_[i | tm]);
        }
    }

    [[nodiscard]] double norm_squared() const {
        double s = 0.0;
        for (const auto& a : amps_) s += std::norm(a);
        return s;
    }

private:
    [[nodiscard]] std::size_t mask_of(std::size_t qubit) const {
        if (qubit < 1 || qubit > q_) throw std::out_of_range("qubit index out of range");
        return std::size_t{1} << (q_ - qubit);
    }

    std::size_t q_;
    std::vector<complex> amps_;
};

inline StateVector run_state(const Circuit& c) {
    c.validate();
    StateVector psi(c.q);
    for (std::size_t i = 0; i < c.q; ++i) {
        if (c.initial[i] == Init::plus) psi.apply_h(i + 1);
    }
    for (const auto& op : c.ops) psi.apply(op);
    return psi;
}

/// Working register |+>^n, auxiliary |0>^n, then the oracle gates.
inline Circuit oracle_circuit(const GateList& oracle) {
    const std::size_t n = oracle.n;
    Circuit c;
    c.q = 2 * n;
    c.initial.assign(n, Init::plus);
    c.initial.resize(2 * n, Init::zero);
    for (const auto& g : oracle.gates) {
        g.validate(n);
        c.ops.push_back(g.is_cnot() ? Op::cnot(g.control, n + g.target) : Op::x(n + g.target));
    }
    return c;
}

/// Oracle circuit followed by H on every working qubit (x-basis readout as z-basis readout).
inline Circuit simon_circuit(const GateList& oracle) {
    auto c = oracle_circuit(oracle);
    for (std::size_t j = 1; j <= oracle.n; ++j) c.ops.push_back(Op::h(j));
    return c;
}

using Distribution = std::map<BitString, double>;

/**
 * @brief Marginal over the first `n_working` qubits in the computational basis.
 * Probabilities are normalized by the total weight.
 */
inline Distribution marginal_distribution(const std::vector<complex>& amps, std::size_t q, std::size_t n_working) {
    if (amps.size() != (std::size_t{1} << q) || n_working > q) throw std::invalid_argument("bad marginal shape");
    std::vector<double> weights(std::size_t{1} << n_working, 0.0);
    const std::size_t shift = q - n_working;
    double total = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        weights[i >> shift] += p;
        total += p;
    }
    if (total == 0.0) throw std::domain_error("zero-norm state has no outcome distribution");
    Distribution d;
    for (std::size_t m = 0; m < weights.size(); ++m) d[BitString::from_uint(m, n_working)] = weights[m] / total;
    return d;
}

/// Outcome distribution of the working register of an oracle circuit measured in the x basis.
inline Distribution working_outcome_distribution(const Circuit& oracle_c, std::size_t n_working) {
    Circuit c = oracle_c;
    for (std::size_t j = 1; j <= n_working; ++j) c.ops.push_back(Op::h(j));
    const auto psi = run_state(c);
    return marginal_distribution(psi.amplitudes(), c.q, n_working);
}

inline Distribution working_outcome_distribution(const GateList& oracle) {
    return working_outcome_distribution(oracle_circuit(oracle), oracle.n);
}

/// Deterministic inverse-CDF sampler over an exact distribution.
class OutcomeSampler {
public:
    OutcomeSampler(const Distribution& d, std::uint64_t seed) : rng_(seed) {
        double acc = 0.0;
        for (const auto& [m, p] : d) {
            if (p <= 0.0) continue;
            acc += p;
            cdf_.emplace_back(acc, m);
        }
        if (cdf_.empty()) throw std::invalid_argument("cannot sample from an empty distribution");
    }

    BitString operator()() {
        // 53 random mantissa bits, identical on every platform
        const double u = static_cast<double>(rng_() >> 11U) * 0x1.0p-53 * cdf_.back().first;
        for (const auto& [c, m] : cdf_) {
            if (u < c) return m;
        }
        return cdf_.back().second;
    }

private:
    std::mt19937_64 rng_;
    std::vector<std::pair<double, BitString>> cdf_;
};

enum class ProtocolStatus { solved, underdetermined };

struct ProtocolReport {
    ProtocolStatus status = ProtocolStatus::underdetermined;
    PeriodKind kind = PeriodKind::invalid;
    BitString period;
    std::size_t rounds_used = 0;
    std::vector<BitString> equations;
    bool verified = false;
};

/**
 * @brief Quantum sampling plus classical post-processing of Simon's algorithm.
 *
 * Samples working outcomes from `dist` until n-1 independent nonzero equations
 * are collected, solves for the candidate period, then evaluates f at 0 and at
 * the candidate to tell two-to-one from bijective.
 */
inline ProtocolReport run_simon_protocol(const FunctionTable& f, const Distribution& dist, std::uint64_t seed,
                                         std::size_t max_rounds) {
    const std::size_t n = f.n();
    ProtocolReport report;
    gf2::RowSpace space(n);
    OutcomeSampler sample(dist, seed);
    while (space.rank() + 1 < n && report.rounds_used < max_rounds) {
        auto m = sample();
        ++report.rounds_used;
        if (m.size() != n) throw std::invalid_argument("distribution width does not match the function");
        if (!m.is_zero() && space.insert(m)) report.equations.push_back(std::move(m));
    }

    const auto solution = gf2::solve_period(report.equations, n);
    const auto* unique = std::get_if<gf2::UniquePeriod>(&solution);
    if (unique == nullptr) return report;  // rounds exhausted

    report.status = ProtocolStatus::solved;
    const BitString a1(n);
    if (f(a1) == f(a1 ^ unique->period)) {
        report.kind = PeriodKind::two_to_one;
        report.period = unique->period;
    } else {
        report.kind = PeriodKind::bijective;
        report.period = BitString(n);
    }
    const auto truth = find_period(f);
    report.verified = truth.kind == report.kind && truth.period == report.period;
    return report;
}

/// Circuit-mode protocol: synthesizes the oracle and samples the exact circuit distribution.
inline ProtocolReport run_simon_protocol(const FunctionTable& f, std::uint64_t seed, std::size_t max_rounds) {
    const auto synth = synthesize_oracle(f);
    const auto* gates = std::get_if<GateList>(&synth);
    if (gates == nullptr) throw std::invalid_argument("function is not realizable by a CNOT/X oracle");
    return run_simon_protocol(f, working_outcome_distribution(*gates), seed, max_rounds);
}

}  // namespace simonzx
