#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "simonzx/bits.hpp"

namespace simonzx::gf2 {

/// Incrementally maintained row-echelon basis of a subspace of GF(2)^n.
class RowSpace {
public:
    explicit RowSpace(std::size_t n) : n_(n) {}

    [[nodiscard]] std::size_t dimension() const noexcept { return n_; }
    [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
    [[nodiscard]] const std::vector<BitString>& rows() const noexcept { return rows_; }

    /// Adds `v`; returns false when it is already in the span.
    bool insert(BitString v) {
        if (v.size() != n_) throw std::invalid_argument("row width mismatch");
        v = reduce(std::move(v));
        if (v.is_zero()) return false;
        const std::size_t pivot = v.first_set();
        // keep the basis fully reduced so nullspace extraction is a read-off
        for (auto& row : rows_) {
            if (row.get(pivot)) row ^= v;
        }
        auto pos = rows_.begin();
        while (pos != rows_.end() && pos->first_set() < pivot) ++pos;
        rows_.insert(pos, std::move(v));
        return true;
    }

    [[nodiscard]] bool contains(const BitString& v) const { return reduce(v).is_zero(); }

    /// Basis of {s : r.s = 0 for every row r}.
    [[nodiscard]] std::vector<BitString> nullspace() const {
        std::vector<bool> is_pivot(n_, false);
        for (const auto& r : rows_) is_pivot[r.first_set()] = true;
        std::vector<BitString> basis;
        for (std::size_t free = 0; free < n_; ++free) {
            if (is_pivot[free]) continue;
            BitString s(n_);
            s.set(free, true);
            for (const auto& r : rows_) {
                if (r.get(free)) s.set(r.first_set(), true);
            }
            basis.push_back(std::move(s));
        }
        return basis;
    }

private:
    [[nodiscard]] BitString reduce(BitString v) const {
        for (const auto& row : rows_) {
            if (v.get(row.first_set())) v ^= row;
        }
        return v;
    }

    std::size_t n_;
    std::vector<BitString> rows_;
};

struct UniquePeriod {
    BitString period;
};
struct Underdetermined {
    std::size_t rank = 0;
};
/// Only s = 0^n solves the system (full rank).
struct Inconsistent {};

using PeriodSolution = std::variant<UniquePeriod, Underdetermined, Inconsistent>;

/**
 * @brief Solve m.s = 0 for every sample m over GF(2).
 *
 * Unique when the samples span an (n-1)-dimensional space, in which case the
 * single nonzero nullspace vector is returned.
 */
inline PeriodSolution solve_period(std::span<const BitString> samples, std::size_t n) {
    RowSpace space(n);
    for (const auto& m : samples) space.insert(m);
    if (space.rank() == n) return Inconsistent{};
    if (space.rank() + 1 < n) return Underdetermined{space.rank()};
    return UniquePeriod{space.nullspace().front()};
}

/// Width inferred from the samples; an empty sample list is underdetermined.
inline PeriodSolution solve_period(std::span<const BitString> samples) {
    if (samples.empty()) return Underdetermined{0};
    const std::size_t n = samples.front().size();
    for (const auto& m : samples) {
        if (m.size() != n) throw std::invalid_argument("samples must share one width");
    }
    return solve_period(samples, n);
}

/// Rank of A where rows[i] is row i.
inline std::size_t rank(std::span<const BitString> rows) {
    if (rows.empty()) return 0;
    RowSpace s(rows.front().size());
    for (const auto& r : rows) s.insert(r);
    return s.rank();
}

}  // namespace simonzx::gf2
