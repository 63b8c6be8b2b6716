#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "simonzx/zx/diagram.hpp"

namespace simonzx::zx {

using complex = std::complex<double>;

/// Largest number of entries any intermediate factor may hold.
inline constexpr std::size_t max_contraction_log2 = 24;

class ContractionTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * @brief Dense tensor with one binary axis per leg. Leg 0 is the most
 * significant bit of the flat index.
 */
class Tensor {
public:
    Tensor() : data_(1, complex{1.0, 0.0}) {}
    Tensor(std::size_t legs, std::vector<complex> data) : legs_(legs), data_(std::move(data)) {
        if (data_.size() != (std::size_t{1} << legs_)) throw std::invalid_argument("tensor size must be 2^legs");
    }

    static Tensor zeros(std::size_t legs) { return {legs, std::vector<complex>(std::size_t{1} << legs)}; }

    /// Matrix m[row][col] as a tensor with the column (input) legs first.
    static Tensor from_operator(const std::vector<std::vector<complex>>& m, std::size_t in_legs, std::size_t out_legs) {
        auto t = zeros(in_legs + out_legs);
        for (std::size_t r = 0; r < (std::size_t{1} << out_legs); ++r) {
            for (std::size_t c = 0; c < (std::size_t{1} << in_legs); ++c) {
                t.data_[(c << out_legs) | r] = m.at(r).at(c);
            }
        }
        return t;
    }

    [[nodiscard]] std::size_t legs() const noexcept { return legs_; }
    [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }
    [[nodiscard]] const std::vector<complex>& data() const noexcept { return data_; }
    [[nodiscard]] complex operator[](std::size_t i) const { return data_.at(i); }
    complex& operator[](std::size_t i) { return data_.at(i); }

    [[nodiscard]] double max_abs() const {
        double m = 0.0;
        for (const auto& z : data_) m = std::max(m, std::abs(z));
        return m;
    }

    /// Contracts leg `leg` with the covector (v0, v1); the leg is removed.
    [[nodiscard]] Tensor contract_leg(std::size_t leg, std::array<complex, 2> covector) const {
        if (leg >= legs_) throw std::out_of_range("leg out of range");
        const std::size_t shift = legs_ - 1 - leg;
        auto out = zeros(legs_ - 1);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            const std::size_t bit = (i >> shift) & 1U;
            const std::size_t high = i >> (shift + 1);
            const std::size_t low = i & ((std::size_t{1} << shift) - 1);
            out.data_[(high << shift) | low] += covector[bit] * data_[i];
        }
        return out;
    }

private:
    std::size_t legs_ = 0;
    std::vector<complex> data_;
};

/// Entries of unnormalized diagram tensors below this are rounding noise.
inline constexpr double numerical_zero = 1e-9;

/**
 * @brief How far `a` is from some nonzero multiple of `b`.
 *
 * Both tensors are scaled to unit max-norm; the multiple is fixed by the
 * largest-magnitude entry of b. A tensor whose entries are all below `zero`
 * counts as zero: returns 0 when both are zero and infinity when exactly one
 * is zero or the shapes differ.
 */
inline double proportionality_residual(const Tensor& a, const Tensor& b, double zero = numerical_zero) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (a.legs() != b.legs()) return inf;
    const double na = a.max_abs();
    const double nb = b.max_abs();
    if (na <= zero && nb <= zero) return 0.0;
    if (na <= zero || nb <= zero) return inf;

    std::size_t pivot = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (std::abs(b[i]) > std::abs(b[pivot])) pivot = i;
    }
    const complex lambda = (a[pivot] / na) / (b[pivot] / nb);
    double residual = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        residual = std::max(residual, std::abs(a[i] / na - lambda * (b[i] / nb)));
    }
    return residual;
}

inline bool proportional(const Tensor& a, const Tensor& b, double tol = 1e-9) {
    return proportionality_residual(a, b) <= tol;
}

namespace detail {

/// Factor over binary variables; vars[0] is the most significant index bit.
struct Factor {
    std::vector<int> vars;
    std::vector<complex> data;
};

/// Product of `factors` over the union of their variables, optionally summing out `eliminate`.
inline Factor multiply(const std::vector<const Factor*>& factors, int eliminate, bool do_eliminate) {
    std::set<int> var_set;
    for (const auto* f : factors) var_set.insert(f->vars.begin(), f->vars.end());
    std::vector<int> all_vars(var_set.begin(), var_set.end());
    if (all_vars.size() > max_contraction_log2) {
        throw ContractionTooLarge("contraction frontier of " + std::to_string(all_vars.size()) + " legs exceeds cap");
    }

    // per factor, the bit position of each of its vars inside all_vars
    std::vector<std::vector<std::size_t>> shifts;
    for (const auto* f : factors) {
        std::vector<std::size_t> s;
        for (int v : f->vars) {
            const auto pos = static_cast<std::size_t>(std::find(all_vars.begin(), all_vars.end(), v) - all_vars.begin());
            s.push_back(all_vars.size() - 1 - pos);
        }
        shifts.push_back(std::move(s));
    }

    Factor out;
    std::size_t elim_shift = 0;
    if (do_eliminate) {
        for (int v : all_vars) {
            if (v != eliminate) out.vars.push_back(v);
        }
        const auto pos = static_cast<std::size_t>(std::find(all_vars.begin(), all_vars.end(), eliminate) - all_vars.begin());
        elim_shift = all_vars.size() - 1 - pos;
    } else {
        out.vars = all_vars;
    }
    out.data.assign(std::size_t{1} << out.vars.size(), complex{0.0, 0.0});

    const std::uint64_t total = std::uint64_t{1} << all_vars.size();
    for (std::uint64_t a = 0; a < total; ++a) {
        complex value{1.0, 0.0};
        for (std::size_t fi = 0; fi < factors.size() && value != complex{0.0, 0.0}; ++fi) {
            std::size_t idx = 0;
            for (auto s : shifts[fi]) idx = (idx << 1U) | ((a >> s) & 1U);
            value *= factors[fi]->data[idx];
        }
        std::uint64_t target = a;
        if (do_eliminate) {
            const std::uint64_t high = a >> (elim_shift + 1);
            const std::uint64_t low = a & ((std::uint64_t{1} << elim_shift) - 1);
            target = (high << elim_shift) | low;
        }
        out.data[static_cast<std::size_t>(target)] += value;
    }
    return out;
}

}  // namespace detail

/**
 * @brief Brute-force contraction of a diagram to its tensor over (inputs, outputs).
 *
 * Every spider gets one binary variable in its own basis: Z spiders in the
 * computational basis, X spiders in the |+>,|-> basis. A spider of phase a
 * contributes (1, e^{ia}); each edge contributes the 2x2 matrix that maps
 * between the bases of its ends, times H = [[1,1],[1,-1]] for a Hadamard
 * edge. Internal variables are then summed out greedily, smallest frontier
 * first. Scalars are unnormalized throughout.
 */
inline Tensor eval_tensor(const ZxDiagram& d) {
    using Mat = std::array<std::array<complex, 2>, 2>;
    const Mat identity{{{1.0, 0.0}, {0.0, 1.0}}};
    const Mat hadamard{{{1.0, 1.0}, {1.0, -1.0}}};
    auto mul = [](const Mat& p, const Mat& q) {
        Mat r{};
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) r[i][j] = p[i][0] * q[0][j] + p[i][1] * q[1][j];
        }
        return r;
    };
    auto frame = [&](int v) -> const Mat& { return d.vertex(v).kind == VertexKind::x ? hadamard : identity; };

    std::vector<detail::Factor> factors;
    for (const auto& [id, v] : d.vertices()) {
        if (!v.is_spider()) continue;
        factors.push_back({{id}, {complex{1.0, 0.0}, std::polar(1.0, v.phase)}});
    }
    for (const auto& [eid, e] : d.edges()) {
        const Mat m = mul(mul(frame(e.a), e.kind == EdgeKind::hadamard ? hadamard : identity), frame(e.b));
        if (e.is_self_loop()) {
            factors.push_back({{e.a}, {m[0][0], m[1][1]}});
        } else if (e.a < e.b) {
            factors.push_back({{e.a, e.b}, {m[0][0], m[0][1], m[1][0], m[1][1]}});
        } else {
            factors.push_back({{e.b, e.a}, {m[0][0], m[1][0], m[0][1], m[1][1]}});
        }
    }

    std::set<int> internal;
    for (const auto& [id, v] : d.vertices()) {
        if (v.is_spider()) internal.insert(id);
    }

    while (!internal.empty()) {
        int best = *internal.begin();
        std::size_t best_size = std::numeric_limits<std::size_t>::max();
        for (int var : internal) {
            std::set<int> frontier;
            for (const auto& f : factors) {
                if (std::find(f.vars.begin(), f.vars.end(), var) != f.vars.end()) frontier.insert(f.vars.begin(), f.vars.end());
            }
            if (frontier.size() < best_size) {
                best_size = frontier.size();
                best = var;
            }
        }
        std::vector<const detail::Factor*> touching;
        std::vector<detail::Factor> rest;
        for (const auto& f : factors) {
            if (std::find(f.vars.begin(), f.vars.end(), best) != f.vars.end()) touching.push_back(&f);
        }
        auto merged = detail::multiply(touching, best, true);
        for (auto& f : factors) {
            if (std::find(f.vars.begin(), f.vars.end(), best) == f.vars.end()) rest.push_back(std::move(f));
        }
        rest.push_back(std::move(merged));
        factors = std::move(rest);
        internal.erase(best);
    }

    std::vector<const detail::Factor*> all;
    for (const auto& f : factors) all.push_back(&f);
    auto product = detail::multiply(all, 0, false);

    std::vector<int> legs = d.inputs();
    legs.insert(legs.end(), d.outputs().begin(), d.outputs().end());
    if (legs.size() > max_contraction_log2) throw ContractionTooLarge("too many open legs");
    auto result = Tensor::zeros(legs.size());
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << legs.size()); ++a) {
        // product.vars is the sorted leg ids; legs lacking any factor cannot occur (degree 1)
        std::size_t idx = 0;
        for (int v : product.vars) {
            const auto pos = static_cast<std::size_t>(std::find(legs.begin(), legs.end(), v) - legs.begin());
            if (pos == legs.size()) throw std::logic_error("dangling boundary in contraction");
            idx = (idx << 1U) | ((a >> (legs.size() - 1 - pos)) & 1U);
        }
        result[static_cast<std::size_t>(a)] = product.data[idx];
    }
    return result;
}

}  // namespace simonzx::zx
