#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "teig/error.hpp"
#include "teig/poly/unipoly.hpp"

namespace teig {

struct MatchReport {
    bool matched = false;
    double max_distance = 0.0;
    /// assignment[i] = index in B matched to A[i].
    std::vector<std::size_t> assignment;
};

namespace detail {

/// Minimum-cost perfect assignment (Kuhn-Munkres with potentials), O(n^3).
/// Returns row -> column.
inline std::vector<std::size_t> hungarian(const std::vector<std::vector<double>>& cost) {
    const std::size_t n = cost.size();
    if (n == 0) return {};
    constexpr double inf = std::numeric_limits<double>::infinity();
    // 1-based arrays; column 0 is a sentinel.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    std::vector<char> used(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::fill(minv.begin(), minv.end(), inf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = p[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<std::size_t> row_to_col(n);
    for (std::size_t j = 1; j <= n; ++j) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

inline void require_same_size(const EigenMultiset& a, const EigenMultiset& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("multisets differ in size: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

}  // namespace detail

/// Minimum-cost perfect matching under |a - b|; matched iff the largest matched distance is <= tol.
inline MatchReport match_multisets(const EigenMultiset& a, const EigenMultiset& b, double tol) {
    detail::require_same_size(a, b);
    const std::size_t n = a.size();
    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cost[i][j] = std::abs(a.values[i] - b.values[j]);
    MatchReport r;
    r.assignment = detail::hungarian(cost);
    for (std::size_t i = 0; i < n; ++i) r.max_distance = std::max(r.max_distance, cost[i][r.assignment[i]]);
    r.matched = r.max_distance <= tol;
    return r;
}

/// Matching that tolerates the spread of computed roots around repeated exact values.
///
/// Entries of `exact` closer than tol * (1 + |v|) form a cluster of size k. The computed
/// values assigned to a cluster must have their mean within tol * (1 + |v|) of the
/// cluster value and each lie within tol^(1/k) * (1 + |v|) of it. For k = 1 this is the
/// plain test. max_distance reports the worst centroid error.
inline MatchReport match_multisets_clustered(const EigenMultiset& computed, const EigenMultiset& exact, double tol) {
    detail::require_same_size(computed, exact);
    MatchReport base = match_multisets(computed, exact, std::numeric_limits<double>::infinity());
    const std::size_t n = exact.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(exact.values[i] - exact.values[j]) <= tol * (1.0 + std::abs(exact.values[i])))
                parent[find(i)] = find(j);

    std::vector<std::size_t> col_to_row(n);
    for (std::size_t i = 0; i < n; ++i) col_to_row[base.assignment[i]] = i;

    MatchReport r;
    r.assignment = base.assignment;
    r.matched = true;
    std::vector<char> seen(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t root = find(j);
        if (seen[root]) continue;
        seen[root] = 1;
        std::vector<std::size_t> members;
        for (std::size_t k = 0; k < n; ++k)
            if (find(k) == root) members.push_back(k);
        cplx centre = 0.0;
        cplx mean = 0.0;
        for (std::size_t k : members) {
            centre += exact.values[k];
            mean += computed.values[col_to_row[k]];
        }
        centre /= static_cast<double>(members.size());
        mean /= static_cast<double>(members.size());
        const double scale = 1.0 + std::abs(centre);
        const double centroid_err = std::abs(mean - centre);
        r.max_distance = std::max(r.max_distance, centroid_err);
        if (centroid_err > tol * scale) r.matched = false;
        const double spread_tol = std::pow(tol, 1.0 / static_cast<double>(members.size())) * scale;
        for (std::size_t k : members)
            if (std::abs(computed.values[col_to_row[k]] - centre) > spread_tol) r.matched = false;
    }
    return r;
}

}  // namespace teig
