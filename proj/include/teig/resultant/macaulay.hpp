#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "teig/core/monomial.hpp"
#include "teig/core/tensor.hpp"
#include "teig/error.hpp"

namespace teig {

/// (p+q) x (p+q) Sylvester matrix of two binary forms of degrees p and q.
/// Rows 0..q-1 hold shifted a-coefficients, rows q..q+p-1 shifted b-coefficients.
struct SylvesterMatrix {
    int p = 0;
    int q = 0;
    Eigen::MatrixXcd entries;
};

inline SylvesterMatrix sylvester_matrix(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.empty() || b.empty()) throw DimensionMismatch("Sylvester matrix needs nonempty coefficient vectors");
    SylvesterMatrix s;
    s.p = static_cast<int>(a.size()) - 1;
    s.q = static_cast<int>(b.size()) - 1;
    const int size = s.p + s.q;
    s.entries = Eigen::MatrixXcd::Zero(size, size);
    for (int r = 0; r < s.q; ++r)
        for (int k = 0; k <= s.p; ++k) s.entries(r, r + k) = a[static_cast<std::size_t>(k)];
    for (int r = 0; r < s.p; ++r)
        for (int k = 0; k <= s.q; ++k) s.entries(s.q + r, r + k) = b[static_cast<std::size_t>(k)];
    return s;
}

/// Position of one tensor coefficient inside R0: R0(row, col) += T(slice, entry).
struct Placement {
    std::size_t row;
    std::size_t col;
    std::size_t slice;
    std::size_t entry;
};

/// Macaulay matrix R = R0 - lambda I of the system T x^m - lambda x^[m] on the
/// degree-d monomial basis, with d = nm - n + 1.
///
/// For n = 1 the basis is {x^m} and R0 = [t].
struct MacaulayPair {
    int n = 0;
    int m = 0;
    int d = 0;
    std::size_t w = 0;
    std::vector<Exponent> basis;
    /// Class i of each basis monomial: the first i with alpha_i >= m.
    std::vector<int> partition;
    /// Exactly one exponent >= m.
    std::vector<bool> reduced;
    /// Indices of the non-reduced monomials, ascending; R0' = R0 restricted to these.
    std::vector<std::size_t> non_reduced;
    /// Sparsity pattern of R0 as a linear function of the tensor coefficients.
    std::vector<Placement> placements;
    Eigen::MatrixXcd R0;
};

/// Basis, partition, reduced set and placement pattern; R0 left empty.
inline MacaulayPair macaulay_basis(int n, int m) {
    if (n < 1 || m < 1) throw DimensionMismatch("Macaulay basis needs n >= 1 and m >= 1");
    MacaulayPair mp;
    mp.n = n;
    mp.m = m;
    if (n == 1) {
        mp.d = m;
        mp.w = 1;
        mp.basis = {Exponent{m}};
        mp.partition = {0};
        mp.reduced = {true};
        mp.placements = {{0, 0, 0, 0}};
        return mp;
    }
    mp.d = n * m - n + 1;
    mp.basis = monomials(n, mp.d);
    mp.w = mp.basis.size();
    const MonomialIndex index(mp.basis);
    const auto slice_basis = monomials(n, m);
    mp.partition.resize(mp.w);
    mp.reduced.resize(mp.w);
    for (std::size_t r = 0; r < mp.w; ++r) {
        const Exponent& alpha = mp.basis[r];
        int cls = -1;
        int big = 0;
        for (int i = 0; i < n; ++i) {
            if (alpha[static_cast<std::size_t>(i)] >= m) {
                ++big;
                if (cls < 0) cls = i;
            }
        }
        // Every degree-d monomial has some exponent >= m by pigeonhole.
        mp.partition[r] = cls;
        mp.reduced[r] = (big == 1);
        if (big != 1) mp.non_reduced.push_back(r);

        Exponent shift = alpha;
        shift[static_cast<std::size_t>(cls)] -= m;
        for (std::size_t j = 0; j < slice_basis.size(); ++j) {
            Exponent e = shift;
            for (int k = 0; k < n; ++k) e[static_cast<std::size_t>(k)] += slice_basis[j][static_cast<std::size_t>(k)];
            mp.placements.push_back({r, index.at(e), static_cast<std::size_t>(cls), j});
        }
    }
    return mp;
}

/// R0 for the tensor coefficients given slice by slice; any TensorTS of matching shape.
inline Eigen::MatrixXcd macaulay_r0(const MacaulayPair& skeleton, const TensorTS& t) {
    if (t.n() != skeleton.n || t.m() != skeleton.m)
        throw DimensionMismatch("tensor shape does not match the Macaulay skeleton");
    Eigen::MatrixXcd r0 = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(skeleton.w), static_cast<Eigen::Index>(skeleton.w));
    for (const Placement& p : skeleton.placements)
        r0(static_cast<Eigen::Index>(p.row), static_cast<Eigen::Index>(p.col)) += t(p.slice, p.entry);
    return r0;
}

inline MacaulayPair macaulay_matrices(const TensorTS& t) {
    MacaulayPair mp = macaulay_basis(t.n(), t.m());
    mp.R0 = macaulay_r0(mp, t);
    return mp;
}

/// Checks that each row's lambda term x^[m]_i * x^(alpha - m e_i) lands on its own
/// diagonal position, i.e. the lambda coefficient matrix is exactly -I.
inline bool lambda_structure_is_identity(const MacaulayPair& mp) {
    const MonomialIndex index(mp.basis);
    for (std::size_t r = 0; r < mp.w; ++r) {
        if (mp.n == 1) return mp.w == 1;
        Exponent shift = mp.basis[r];
        const auto cls = static_cast<std::size_t>(mp.partition[r]);
        if (shift[cls] < mp.m) return false;
        shift[cls] -= mp.m;
        Exponent lam = shift;
        lam[cls] += mp.m;
        if (index.find(lam) != r) return false;
    }
    return true;
}

}  // namespace teig
