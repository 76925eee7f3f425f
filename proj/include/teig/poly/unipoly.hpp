#pragma once

#include <algorithm>
#include <complex>
#include <span>
#include <vector>

#include "teig/error.hpp"

namespace teig {

using cplx = std::complex<double>;

/// Univariate complex polynomial; coeffs[k] is the coefficient of t^k.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {}

    const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
    std::vector<cplx>& coeffs() noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    cplx operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : cplx{}; }

    /// Highest k with |c_k| > tol, or -1 for the zero polynomial.
    int degree(double tol = 0.0) const {
        for (std::size_t k = coeffs_.size(); k-- > 0;)
            if (std::abs(coeffs_[k]) > tol) return static_cast<int>(k);
        return -1;
    }

    bool is_zero(double tol = 0.0) const { return degree(tol) < 0; }

    cplx leading() const {
        const int d = degree();
        return d < 0 ? cplx{} : coeffs_[static_cast<std::size_t>(d)];
    }

    /// Horner evaluation.
    cplx operator()(cplx t) const {
        cplx acc = 0.0;
        for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + coeffs_[k];
        return acc;
    }

    UniPoly derivative() const {
        if (coeffs_.size() <= 1) return UniPoly({cplx{}});
        std::vector<cplx> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
        return UniPoly(std::move(d));
    }

    /// Drops coefficients above the degree.
    UniPoly trimmed(double tol = 0.0) const {
        const int d = degree(tol);
        if (d < 0) return UniPoly({cplx{}});
        return UniPoly(std::vector<cplx>(coeffs_.begin(), coeffs_.begin() + d + 1));
    }

    /// Divides by the leading coefficient and sets it to exactly 1.
    UniPoly monic() const {
        UniPoly p = trimmed();
        const int d = p.degree();
        if (d < 0) throw ZeroPolynomial("cannot normalize the zero polynomial");
        const cplx lead = p.coeffs_[static_cast<std::size_t>(d)];
        for (cplx& c : p.coeffs_) c /= lead;
        p.coeffs_[static_cast<std::size_t>(d)] = 1.0;
        return p;
    }

    UniPoly conj() const {
        UniPoly p = *this;
        for (cplx& c : p.coeffs_) c = std::conj(c);
        return p;
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.coeffs_.empty() || b.coeffs_.empty()) return UniPoly();
        std::vector<cplx> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UniPoly(std::move(r));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<cplx> r(std::max(a.size(), b.size()));
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a[k] + b[k];
        return UniPoly(std::move(r));
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<cplx> r(std::max(a.size(), b.size()));
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a[k] - b[k];
        return UniPoly(std::move(r));
    }

    UniPoly pow(unsigned e) const {
        UniPoly r({cplx{1.0}});
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

private:
    std::vector<cplx> coeffs_;
};

/// Max coefficient difference relative to 1 + max coefficient of b.
inline double coefficient_distance(const UniPoly& a, const UniPoly& b) {
    const std::size_t len = std::max(a.size(), b.size());
    double diff = 0.0;
    double scale = 0.0;
    for (std::size_t k = 0; k < len; ++k) {
        diff = std::max(diff, std::abs(a[k] - b[k]));
        scale = std::max(scale, std::abs(b[k]));
    }
    return diff / (1.0 + scale);
}

/// Multiset of complex values; order carries no meaning.
struct EigenMultiset {
    std::vector<cplx> values;

    std::size_t size() const noexcept { return values.size(); }
};

/// Monic polynomial prod (t - s_i).
inline UniPoly poly_from_roots(const EigenMultiset& s) {
    std::vector<cplx> c{1.0};
    for (const cplx& r : s.values) {
        c.push_back(0.0);
        for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
        c[0] = -r * c[0];
    }
    return UniPoly(std::move(c));
}

/// Synthetic division of p by (t - r); returns the quotient and writes the remainder.
inline UniPoly deflate(const UniPoly& p, cplx r, cplx* remainder = nullptr) {
    const auto& c = p.coeffs();
    if (c.size() <= 1) {
        if (remainder) *remainder = c.empty() ? cplx{} : c[0];
        return UniPoly({cplx{}});
    }
    std::vector<cplx> q(c.size() - 1);
    cplx acc = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        q[k] = acc;
        acc = c[k] + r * acc;
    }
    if (remainder) *remainder = acc;
    return UniPoly(std::move(q));
}

}  // namespace teig
