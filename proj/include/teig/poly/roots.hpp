#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "teig/error.hpp"
#include "teig/poly/unipoly.hpp"

namespace teig {

namespace detail {

/// Parlett-Reinsch balancing by powers of two; leaves eigenvalues unchanged.
inline void balance(Eigen::MatrixXcd& a) {
    const Eigen::Index n = a.rows();
    constexpr double radix = 2.0;
    bool done = false;
    while (!done) {
        done = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            double c = 0.0;
            double r = 0.0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i).real()) + std::abs(a(j, i).imag());
                r += std::abs(a(i, j).real()) + std::abs(a(i, j).imag());
            }
            if (c == 0.0 || r == 0.0) continue;
            double g = r / radix;
            double f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= radix * radix;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= radix * radix;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                a.row(i) /= f;
                a.col(i) *= f;
            }
        }
    }
}

}  // namespace detail

/// All roots of p with multiplicity: exact zero roots are split off, the rest come from
/// the eigenvalues of the balanced companion matrix followed by one Newton step per root
/// (kept only when it lowers |p|).
inline EigenMultiset roots(const UniPoly& p) {
    const int deg = p.degree();
    if (deg < 0) throw ZeroPolynomial("roots of the zero polynomial are undefined");
    EigenMultiset out;
    const auto& c = p.coeffs();
    std::size_t low = 0;
    while (low < static_cast<std::size_t>(deg) && c[low] == cplx{}) ++low;
    out.values.assign(low, cplx{});
    const int d = deg - static_cast<int>(low);
    if (d == 0) return out;

    const cplx lead = c[static_cast<std::size_t>(deg)];
    std::vector<cplx> q(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) q[static_cast<std::size_t>(k)] = c[low + static_cast<std::size_t>(k)] / lead;
    const UniPoly reduced(q);

    if (d == 1) {
        out.values.push_back(-q[0]);
        return out;
    }
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -q[static_cast<std::size_t>(i)];
    detail::balance(comp);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
    const UniPoly dq = reduced.derivative();
    for (Eigen::Index i = 0; i < d; ++i) {
        cplx z = solver.eigenvalues()(i);
        const cplx pz = reduced(z);
        const cplx dz = dq(z);
        if (dz != cplx{}) {
            const cplx z1 = z - pz / dz;
            if (std::isfinite(z1.real()) && std::isfinite(z1.imag()) && std::abs(reduced(z1)) < std::abs(pz)) z = z1;
        }
        out.values.push_back(z);
    }
    return out;
}

}  // namespace teig
