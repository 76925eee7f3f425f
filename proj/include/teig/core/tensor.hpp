#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "teig/core/monomial.hpp"
#include "teig/core/random.hpp"
#include "teig/error.hpp"

namespace teig {

using cplx = std::complex<double>;

/// A slice-symmetric tensor in TS(C^n, m+1).
///
/// Slice i holds the coefficients of the degree-m form (T x^m)_i, one entry per
/// exponent vector alpha with |alpha| = m, in descending lexicographic order
/// (see monomials()). Entry alpha of slice i is the coefficient of x^alpha, not a
/// symmetric-tensor entry: t_{i i_1..i_m} summed over all words with profile alpha.
class TensorTS {
public:
    /// Validating constructor; see make_tensor_ts().
    TensorTS(int n, int m, std::vector<std::vector<cplx>> slices) : n_(n), m_(m), slices_(std::move(slices)) {
        if (n < 1 || m < 1) throw DimensionMismatch("tensor needs n >= 1 and m >= 1");
        if (slices_.size() != static_cast<std::size_t>(n))
            throw DimensionMismatch("expected " + std::to_string(n) + " slices, got " + std::to_string(slices_.size()));
        const std::size_t len = monomial_count(n, m);
        for (std::size_t i = 0; i < slices_.size(); ++i) {
            if (slices_[i].size() != len)
                throw DimensionMismatch("slice " + std::to_string(i) + " has " + std::to_string(slices_[i].size()) +
                                        " entries, expected " + std::to_string(len));
        }
    }

    /// The zero tensor of the given shape.
    static TensorTS zero(int n, int m) {
        if (n < 1 || m < 1) throw DimensionMismatch("tensor needs n >= 1 and m >= 1");
        return TensorTS(n, m, std::vector<std::vector<cplx>>(static_cast<std::size_t>(n),
                                                             std::vector<cplx>(monomial_count(n, m))));
    }

    /// Slice i is x_i^m, so T x^m = x^[m].
    static TensorTS identity(int n, int m) {
        TensorTS t = zero(n, m);
        const auto basis = monomials(n, m);
        const MonomialIndex index(basis);
        for (int i = 0; i < n; ++i) {
            Exponent e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i)] = m;
            t.slices_[static_cast<std::size_t>(i)][index.at(e)] = 1.0;
        }
        return t;
    }

    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }
    std::size_t slice_length() const noexcept { return slices_.empty() ? 0 : slices_.front().size(); }
    /// Dimension of TS(C^n, m+1) = n * binomial(n+m-1, m).
    std::size_t dimension() const noexcept { return slices_.size() * slice_length(); }

    std::span<const cplx> slice(std::size_t i) const { return slices_.at(i); }
    const std::vector<std::vector<cplx>>& slices() const noexcept { return slices_; }

    cplx& operator()(std::size_t slice, std::size_t entry) { return slices_.at(slice).at(entry); }
    cplx operator()(std::size_t slice, std::size_t entry) const { return slices_.at(slice).at(entry); }

    /// Flat coordinate k = slice * slice_length() + entry.
    cplx& flat(std::size_t k) { return slices_[k / slice_length()][k % slice_length()]; }
    cplx flat(std::size_t k) const { return slices_[k / slice_length()][k % slice_length()]; }

    /// Largest entry modulus.
    double max_abs() const {
        double r = 0.0;
        for (const auto& s : slices_)
            for (const cplx& c : s) r = std::max(r, std::abs(c));
        return r;
    }

    TensorTS conj() const {
        TensorTS r = *this;
        for (auto& s : r.slices_)
            for (cplx& c : s) c = std::conj(c);
        return r;
    }

    TensorTS& operator+=(const TensorTS& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < slices_.size(); ++i)
            for (std::size_t j = 0; j < slices_[i].size(); ++j) slices_[i][j] += o.slices_[i][j];
        return *this;
    }
    TensorTS& operator*=(cplx s) {
        for (auto& sl : slices_)
            for (cplx& c : sl) c *= s;
        return *this;
    }
    friend TensorTS operator+(TensorTS a, const TensorTS& b) { return a += b; }
    friend TensorTS operator*(cplx s, TensorTS a) { return a *= s; }

    friend bool operator==(const TensorTS& a, const TensorTS& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.slices_ == b.slices_;
    }

    void require_same_shape(const TensorTS& o) const {
        if (o.n_ != n_ || o.m_ != m_)
            throw DimensionMismatch("tensor shapes differ: (" + std::to_string(n_) + "," + std::to_string(m_) + ") vs (" +
                                    std::to_string(o.n_) + "," + std::to_string(o.m_) + ")");
    }

private:
    int n_;
    int m_;
    std::vector<std::vector<cplx>> slices_;
};

/// Dense tensor t_{i i_1 ... i_m} in T(C^n, m+1), row-major with the slice index first.
class GeneralTensor {
public:
    GeneralTensor(int n, int m) : n_(n), m_(m) {
        if (n < 1 || m < 1) throw DimensionMismatch("tensor needs n >= 1 and m >= 1");
        entries_.assign(static_cast<std::size_t>(ipow(static_cast<std::uint64_t>(n), static_cast<unsigned>(m + 1))), cplx{});
    }
    GeneralTensor(int n, int m, std::vector<cplx> entries) : GeneralTensor(n, m) {
        if (entries.size() != entries_.size())
            throw DimensionMismatch("general tensor has " + std::to_string(entries.size()) + " entries, expected " +
                                    std::to_string(entries_.size()));
        entries_ = std::move(entries);
    }

    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }
    const std::vector<cplx>& entries() const noexcept { return entries_; }

    /// index = (i, i_1, ..., i_m), zero-based.
    cplx& at(std::span<const int> index) { return entries_[offset(index)]; }
    cplx at(std::span<const int> index) const { return entries_[offset(index)]; }

    std::size_t offset(std::span<const int> index) const {
        if (index.size() != static_cast<std::size_t>(m_ + 1)) throw DimensionMismatch("index has wrong arity");
        std::size_t off = 0;
        for (int k : index) {
            if (k < 0 || k >= n_) throw DimensionMismatch("index component out of range");
            off = off * static_cast<std::size_t>(n_) + static_cast<std::size_t>(k);
        }
        return off;
    }

private:
    int n_;
    int m_;
    std::vector<cplx> entries_;
};

/// 2-dimensional blocks (common m) plus an optional scalar for odd target dimension.
struct BlockSpec {
    std::vector<TensorTS> blocks;
    std::optional<cplx> scalar;

    int target_dimension() const { return 2 * static_cast<int>(blocks.size()) + (scalar ? 1 : 0); }
};

/// Builds a validated TensorTS; errors name the offending slice.
inline TensorTS make_tensor_ts(int n, int m, std::vector<std::vector<cplx>> slices) {
    return TensorTS(n, m, std::move(slices));
}

/// Slice symmetrization: coefficient of x^alpha in slice i is the sum of
/// t_{i i_1..i_m} over all words (i_1..i_m) with exponent profile alpha.
inline TensorTS esym(const GeneralTensor& g) {
    const int n = g.n();
    const int m = g.m();
    TensorTS out = TensorTS::zero(n, m);
    const MonomialIndex index(monomials(n, m));
    const std::size_t words = static_cast<std::size_t>(ipow(static_cast<std::uint64_t>(n), static_cast<unsigned>(m)));
    std::vector<int> word(static_cast<std::size_t>(m), 0);
    Exponent profile(static_cast<std::size_t>(n), 0);
    for (std::size_t w = 0; w < words; ++w) {
        // Decode w as base-n digits i_1..i_m (most significant first).
        std::size_t rest = w;
        for (int k = m - 1; k >= 0; --k) {
            word[static_cast<std::size_t>(k)] = static_cast<int>(rest % static_cast<std::size_t>(n));
            rest /= static_cast<std::size_t>(n);
        }
        std::fill(profile.begin(), profile.end(), 0);
        for (int k : word) ++profile[static_cast<std::size_t>(k)];
        const std::size_t col = index.at(profile);
        for (int i = 0; i < n; ++i) {
            out(static_cast<std::size_t>(i), col) += g.entries()[static_cast<std::size_t>(i) * words + w];
        }
    }
    return out;
}

/// x^alpha for a complex vector x.
inline cplx monomial_value(std::span<const cplx> x, const Exponent& alpha) {
    cplx r = 1.0;
    for (std::size_t j = 0; j < alpha.size(); ++j)
        for (int p = 0; p < alpha[j]; ++p) r *= x[j];
    return r;
}

/// Evaluates T x^m.
inline std::vector<cplx> apply(const TensorTS& t, std::span<const cplx> x) {
    if (x.size() != static_cast<std::size_t>(t.n()))
        throw DimensionMismatch("vector has length " + std::to_string(x.size()) + ", expected " + std::to_string(t.n()));
    const auto basis = monomials(t.n(), t.m());
    std::vector<cplx> powers(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) powers[k] = monomial_value(x, basis[k]);
    std::vector<cplx> out(static_cast<std::size_t>(t.n()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto s = t.slice(i);
        cplx acc = 0.0;
        for (std::size_t k = 0; k < s.size(); ++k) acc += s[k] * powers[k];
        out[i] = acc;
    }
    return out;
}

/// n = 2 tensor with slice polynomials sum a_i x^{m-i} y^i and sum b_i x^{m-i} y^i.
inline TensorTS from_n2_params(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size() || a.size() < 2)
        throw DimensionMismatch("n=2 parameters need equal lengths m+1 >= 2, got " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
    const int m = static_cast<int>(a.size()) - 1;
    return TensorTS(2, m, {std::vector<cplx>(a.begin(), a.end()), std::vector<cplx>(b.begin(), b.end())});
}

/// Inverse of from_n2_params.
inline std::pair<std::vector<cplx>, std::vector<cplx>> to_n2_params(const TensorTS& t) {
    if (t.n() != 2) throw DimensionMismatch("to_n2_params needs n = 2, got n = " + std::to_string(t.n()));
    const auto a = t.slice(0);
    const auto b = t.slice(1);
    return {std::vector<cplx>(a.begin(), a.end()), std::vector<cplx>(b.begin(), b.end())};
}

/// Entries i.i.d. with real and imaginary parts uniform on [-1, 1), deterministic per seed.
inline TensorTS random_tensor(int n, int m, std::uint64_t seed) {
    TensorTS t = TensorTS::zero(n, m);
    Rng rng(seed);
    for (std::size_t k = 0; k < t.dimension(); ++k) t.flat(k) = rng.complex_unit_square();
    return t;
}

/// Block k acts on variables (2k, 2k+1); the optional scalar slice is alpha * x_last^m.
inline TensorTS block_diagonal(const BlockSpec& spec) {
    if (spec.blocks.empty() && !spec.scalar) throw DimensionMismatch("block spec is empty");
    int m = 0;
    for (std::size_t k = 0; k < spec.blocks.size(); ++k) {
        const TensorTS& b = spec.blocks[k];
        if (b.n() != 2) throw DimensionMismatch("block " + std::to_string(k) + " has n = " + std::to_string(b.n()) + ", expected 2");
        if (k == 0) m = b.m();
        else if (b.m() != m)
            throw DimensionMismatch("block " + std::to_string(k) + " has m = " + std::to_string(b.m()) + ", expected " +
                                    std::to_string(m));
    }
    if (spec.blocks.empty()) throw DimensionMismatch("block spec needs at least one block to fix m");
    const int n = spec.target_dimension();
    TensorTS out = TensorTS::zero(n, m);
    const MonomialIndex index(monomials(n, m));
    const auto block_basis = monomials(2, m);
    for (std::size_t k = 0; k < spec.blocks.size(); ++k) {
        for (std::size_t local = 0; local < 2; ++local) {
            const std::size_t row = 2 * k + local;
            for (std::size_t j = 0; j < block_basis.size(); ++j) {
                Exponent e(static_cast<std::size_t>(n), 0);
                e[2 * k] = block_basis[j][0];
                e[2 * k + 1] = block_basis[j][1];
                out(row, index.at(e)) = spec.blocks[k](local, j);
            }
        }
    }
    if (spec.scalar) {
        Exponent e(static_cast<std::size_t>(n), 0);
        e.back() = m;
        out(static_cast<std::size_t>(n - 1), index.at(e)) = *spec.scalar;
    }
    return out;
}

/// Number of eigenvalues n * m^(n-1).
inline std::size_t eigenvalue_count(int n, int m) {
    return static_cast<std::size_t>(static_cast<std::uint64_t>(n) *
                                    ipow(static_cast<std::uint64_t>(m), static_cast<unsigned>(n - 1)));
}

}  // namespace teig
