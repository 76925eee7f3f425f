#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "teig/core/tensor.hpp"
#include "teig/error.hpp"
#include "teig/poly/matching.hpp"
#include "teig/poly/roots.hpp"
#include "teig/poly/unipoly.hpp"
#include "teig/resultant/charpoly.hpp"

namespace teig {

/// Binary form F(x, y) = sum_i c_i x^(k-i) y^i of degree k.
class BinaryForm {
public:
    explicit BinaryForm(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw DimensionMismatch("a binary form needs at least one coefficient");
    }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }

    cplx operator()(cplx x, cplx y) const {
        cplx acc = 0.0;
        const int k = degree();
        for (int i = 0; i <= k; ++i) acc += coeffs_[static_cast<std::size_t>(i)] * std::pow(x, k - i) * std::pow(y, i);
        return acc;
    }

    BinaryForm dx() const {
        const int k = degree();
        if (k == 0) return BinaryForm({cplx{}});
        std::vector<cplx> c(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = static_cast<double>(k - i) * coeffs_[static_cast<std::size_t>(i)];
        return BinaryForm(std::move(c));
    }

    BinaryForm dy() const {
        const int k = degree();
        if (k == 0) return BinaryForm({cplx{}});
        std::vector<cplx> c(static_cast<std::size_t>(k));
        for (int i = 1; i <= k; ++i) c[static_cast<std::size_t>(i - 1)] = static_cast<double>(i) * coeffs_[static_cast<std::size_t>(i)];
        return BinaryForm(std::move(c));
    }

    double max_abs() const {
        double r = 0.0;
        for (const cplx& c : coeffs_) r = std::max(r, std::abs(c));
        return r;
    }

private:
    std::vector<cplx> coeffs_;
};

/// Roots of chi(T) with multiplicity; n m^(n-1) values.
inline EigenMultiset eigenvalues(const TensorTS& t, const InterpolationOptions& opt = {}) {
    return roots(charpoly(t, opt));
}

/// The n = 2 tensor with T x^m = grad F / (m+1) for F of degree m+1.
inline TensorTS sym_to_tensor(const BinaryForm& f) {
    if (f.degree() < 2) throw DimensionMismatch("symmetric forms need degree m+1 >= 2");
    const double s = 1.0 / static_cast<double>(f.degree());
    std::vector<cplx> a = f.dx().coeffs();
    std::vector<cplx> b = f.dy().coeffs();
    for (cplx& c : a) c *= s;
    for (cplx& c : b) c *= s;
    return from_n2_params(a, b);
}

namespace detail {

/// Distinct projective roots of a binary form: finite roots (r : 1) and the point (1 : 0).
struct ProjectiveRoots {
    std::vector<cplx> finite;
    std::vector<int> multiplicity;
    int at_infinity = 0;
};

inline ProjectiveRoots projective_roots(const BinaryForm& f, double cluster_radius) {
    ProjectiveRoots pr;
    const auto& c = f.coeffs();
    const int k = f.degree();
    const double scale = f.max_abs();
    int s = 0;
    while (s <= k && std::abs(c[static_cast<std::size_t>(s)]) <= 1e-14 * scale) ++s;
    pr.at_infinity = s;
    if (s >= k) return pr;
    // F(x, 1) = sum_i c_i x^(k-i), ascending in x.
    std::vector<cplx> p(static_cast<std::size_t>(k - s) + 1);
    for (int i = s; i <= k; ++i) p[static_cast<std::size_t>(k - i)] = c[static_cast<std::size_t>(i)];
    const EigenMultiset r = roots(UniPoly(p));
    std::vector<char> used(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (used[i]) continue;
        std::vector<std::size_t> members{i};
        used[i] = 1;
        for (std::size_t j = i + 1; j < r.size(); ++j) {
            if (!used[j] && std::abs(r.values[j] - r.values[i]) <= cluster_radius * (1.0 + std::abs(r.values[i]))) {
                used[j] = 1;
                members.push_back(j);
            }
        }
        cplx mean = 0.0;
        for (std::size_t j : members) mean += r.values[j];
        pr.finite.push_back(mean / static_cast<double>(members.size()));
        pr.multiplicity.push_back(static_cast<int>(members.size()));
    }
    return pr;
}

/// Divides the homogeneous coefficient vector h (x^(d-i) y^i) by (x - r y).
inline std::vector<cplx> divide_linear(const std::vector<cplx>& h, cplx r, double tol) {
    const std::size_t deg = h.size() - 1;
    std::vector<cplx> p(deg + 1);
    for (std::size_t i = 0; i <= deg; ++i) p[deg - i] = h[i];
    cplx rem;
    const UniPoly q = deflate(UniPoly(p), r, &rem);
    double size = 0.0;
    for (std::size_t j = 0; j <= deg; ++j) size += std::abs(p[j]) * std::pow(std::abs(r), static_cast<double>(j));
    if (std::abs(rem) > tol * std::max(size, 1e-300))
        throw NumericalFailure("division by a repeated linear factor left relative residual " +
                               std::to_string(std::abs(rem) / size));
    std::vector<cplx> out(deg);
    for (std::size_t i = 0; i < deg; ++i) out[i] = q.coeffs()[deg - 1 - i];
    return out;
}

}  // namespace detail

/// Eigenvalues of the system F_x = lambda x^m, F_y = lambda y^m for F of degree m+1.
///
/// Zero has multiplicity sum(m_i - 1) over the distinct projective roots of F; the other
/// values come from the roots (alpha : beta) of (y^m F_x - x^m F_y) / prod L_i^(m_i - 1)
/// as F_x(alpha, beta) / alpha^m, or F_y(alpha, beta) / beta^m when |beta| > |alpha|.
/// These are (m+1) times the eigenvalues of sym_to_tensor(F).
inline EigenMultiset sym_eigenvalues(const BinaryForm& f, double cluster_radius = 1e-6) {
    const int k = f.degree();
    if (k < 2) throw DimensionMismatch("symmetric forms need degree m+1 >= 2");
    const double scale = f.max_abs();
    if (scale == 0.0) throw ZeroPolynomial("the form F is identically zero");
    const int m = k - 1;
    const BinaryForm fx = f.dx();
    const BinaryForm fy = f.dy();

    // G = y^m F_x - x^m F_y, coefficients of x^(2m-i) y^i.
    std::vector<cplx> g(static_cast<std::size_t>(2 * m) + 1);
    for (int i = 0; i <= m; ++i) {
        g[static_cast<std::size_t>(i + m)] += fx.coeffs()[static_cast<std::size_t>(i)];
        g[static_cast<std::size_t>(i)] -= fy.coeffs()[static_cast<std::size_t>(i)];
    }
    double gmax = 0.0;
    for (const cplx& c : g) gmax = std::max(gmax, std::abs(c));
    if (gmax <= 1e-12 * scale * static_cast<double>(k))
        throw DegenerateNumerator("y^m F_x - x^m F_y vanishes identically");

    const detail::ProjectiveRoots pr = detail::projective_roots(f, cluster_radius);
    EigenMultiset out;
    int zeros = pr.at_infinity > 0 ? pr.at_infinity - 1 : 0;
    for (int mult : pr.multiplicity) zeros += mult - 1;
    out.values.assign(static_cast<std::size_t>(zeros), cplx{});

    std::vector<cplx> h = g;
    if (pr.at_infinity > 1) {
        const auto e = static_cast<std::size_t>(pr.at_infinity - 1);
        for (std::size_t i = 0; i < e; ++i)
            if (std::abs(h[i]) > 1e-8 * gmax)
                throw NumericalFailure("y^" + std::to_string(e) + " does not divide y^m F_x - x^m F_y");
        h.erase(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(e));
    }
    for (std::size_t i = 0; i < pr.finite.size(); ++i)
        for (int rep = 1; rep < pr.multiplicity[i]; ++rep) h = detail::divide_linear(h, pr.finite[i], 1e-8);

    auto value_at = [&](cplx a, cplx b) {
        return std::abs(b) > std::abs(a) ? fy(a, b) / std::pow(b, m) : fx(a, b) / std::pow(a, m);
    };
    // Roots of the quotient: leading zero coefficients are roots at (1 : 0).
    double hscale = 0.0;
    for (const cplx& c : h) hscale = std::max(hscale, std::abs(c));
    const std::size_t deg = h.size() - 1;
    std::size_t t = 0;
    while (t < deg && std::abs(h[t]) <= 1e-14 * hscale) ++t;
    for (std::size_t i = 0; i < t; ++i) out.values.push_back(value_at(1.0, 0.0));
    std::vector<cplx> p(deg - t + 1);
    for (std::size_t i = t; i <= deg; ++i) p[deg - i] = h[i];
    if (p.size() > 1) {
        for (const cplx& r : roots(UniPoly(p)).values) out.values.push_back(value_at(r, 1.0));
    }
    return out;
}

/// The n = 2 tensor with slices y f(x, y) and -x f(x, y) for f of degree m-1.
inline TensorTS wedge_to_tensor(const BinaryForm& f) {
    const int m = f.degree() + 1;
    std::vector<cplx> a(static_cast<std::size_t>(m) + 1);
    std::vector<cplx> b(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i < m; ++i) {
        a[static_cast<std::size_t>(i + 1)] = f.coeffs()[static_cast<std::size_t>(i)];
        b[static_cast<std::size_t>(i)] = -f.coeffs()[static_cast<std::size_t>(i)];
    }
    return from_n2_params(a, b);
}

/// omega_j = exp(i pi (2j+1) / (m+1)), j = 0..m: the (m+1)-th roots of -1.
inline std::vector<cplx> wedge_nodes(int m) {
    std::vector<cplx> w;
    for (int j = 0; j <= m; ++j)
        w.push_back(std::polar(1.0, std::numbers::pi * (2.0 * j + 1.0) / (m + 1.0)));
    return w;
}

/// omega_j f(1, omega_j) for j = 0..m, followed by m-1 exact zeros.
inline EigenMultiset wedge_eigenvalues(const BinaryForm& f) {
    const int m = f.degree() + 1;
    EigenMultiset out;
    for (const cplx& w : wedge_nodes(m)) out.values.push_back(w * f(1.0, w));
    out.values.insert(out.values.end(), static_cast<std::size_t>(m - 1), cplx{});
    return out;
}

struct BlockSpectrumReport {
    int p = 0;
    int q = 0;
    bool matched = false;
    /// Coefficient distance between chi(T) and prod chi(A_i)^p (lambda - alpha)^q.
    double distance = 0.0;
};

/// Finds positive exponents with chi(T) = prod chi(A_i)^p * (lambda - alpha)^q for the
/// block-diagonal tensor T of the spec (q = 0 without a scalar). Candidates are compared
/// by coefficients.
inline BlockSpectrumReport verify_block_spectrum(const BlockSpec& spec, double tol = 1e-6) {
    const TensorTS t = block_diagonal(spec);
    const UniPoly chi = charpoly(t);
    UniPoly blocks({cplx{1.0}});
    for (const TensorTS& b : spec.blocks) blocks = blocks * charpoly(b);
    const std::size_t N = eigenvalue_count(t.n(), t.m());
    const std::size_t per = static_cast<std::size_t>(blocks.degree());
    BlockSpectrumReport best;
    best.distance = std::numeric_limits<double>::infinity();
    for (std::size_t p = 1; p * per <= N; ++p) {
        const std::size_t q = N - p * per;
        if (spec.scalar ? q == 0 : q != 0) continue;
        UniPoly cand = blocks.pow(static_cast<unsigned>(p));
        if (spec.scalar) cand = cand * UniPoly({-*spec.scalar, cplx{1.0}}).pow(static_cast<unsigned>(q));
        const double d = coefficient_distance(chi, cand);
        if (d < best.distance) {
            best.distance = d;
            best.p = static_cast<int>(p);
            best.q = static_cast<int>(q);
        }
    }
    best.matched = best.distance <= tol;
    return best;
}

}  // namespace teig
