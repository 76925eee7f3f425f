#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "teig/error.hpp"
#include "teig/linalg/dense.hpp"
#include "teig/poly/roots.hpp"
#include "teig/poly/unipoly.hpp"
#include "teig/resultant/macaulay.hpp"

namespace teig {

/// Tuning of the evaluation-interpolation engine for det(lambda I - R0) / det(lambda I - R0').
struct InterpolationOptions {
    /// Points per circle beyond N + 1; the surplus DFT coefficients measure aliasing.
    std::size_t extra_points = 8;
    /// Phase shifts tried when the denominator is numerically singular at a sample.
    int max_attempts = 5;
    /// Relative determinant (|det| over the product of row norms) regarded as singular.
    double denominator_threshold = 1e-12;
    /// Sample several radii spread over the root moduli and keep, per coefficient,
    /// the value with the smallest error estimate.
    bool multi_radius = true;
    std::size_t max_radii = 12;
    /// Allowed deviation of the leading coefficient from 1 and relative aliasing level.
    double degree_tolerance = 1e-6;
    /// Coefficients within this multiple of their error estimate are set to zero.
    double truncation_factor = 8.0;
};

/// Sparse matrix B = R0(D) of a direction tensor D, with its restriction to the non-reduced block.
struct SparseDirection {
    struct Entry {
        Eigen::Index row;
        Eigen::Index col;
        cplx value;
    };
    std::vector<Entry> full;
    std::vector<Entry> reduced;
};

inline SparseDirection sparse_direction(const MacaulayPair& mp, const TensorTS& dir) {
    if (dir.n() != mp.n || dir.m() != mp.m) throw DimensionMismatch("direction shape does not match the tensor");
    std::vector<Eigen::Index> pos(mp.w, -1);
    for (std::size_t k = 0; k < mp.non_reduced.size(); ++k) pos[mp.non_reduced[k]] = static_cast<Eigen::Index>(k);
    SparseDirection s;
    for (const Placement& p : mp.placements) {
        const cplx v = dir(p.slice, p.entry);
        if (v == cplx{}) continue;
        s.full.push_back({static_cast<Eigen::Index>(p.row), static_cast<Eigen::Index>(p.col), v});
        if (pos[p.row] >= 0 && pos[p.col] >= 0) s.reduced.push_back({pos[p.row], pos[p.col], v});
    }
    return s;
}

/// Interpolated quotient polynomial and, when directions are given, the directional
/// derivatives of its coefficients.
struct PencilResult {
    /// Ascending coefficients c_0..c_N, monic.
    std::vector<cplx> coeffs;
    /// Estimated absolute error per coefficient.
    std::vector<double> errors;
    /// Row k (k = 0..N-1) holds d c_k along each direction.
    Eigen::MatrixXcd jacobian;
    /// Estimated absolute error per Jacobian row.
    std::vector<double> jacobian_errors;
    std::vector<double> radii;
    /// Largest aliased coefficient relative to the sample magnitude, over all circles.
    double alias = 0.0;
};

namespace detail {

struct CircleSample {
    double radius = 0.0;
    std::vector<cplx> coeffs;
    double noise = 0.0;
    double alias_rel = 0.0;
    Eigen::MatrixXcd jacobian;
    double jacobian_noise = 0.0;
};

/// Inverse DFT of samples v_k at theta_k = 2 pi k / K + phase: b_j = (1/K) sum v_k e^{-i j theta_k}.
inline std::vector<cplx> circle_dft(const std::vector<cplx>& v, double phase) {
    const std::size_t K = v.size();
    std::vector<cplx> b(K);
    for (std::size_t j = 0; j < K; ++j) {
        cplx acc = 0.0;
        for (std::size_t k = 0; k < K; ++k) {
            const double th = 2.0 * std::numbers::pi * static_cast<double>((j * k) % K) / static_cast<double>(K) +
                              static_cast<double>(j) * phase;
            acc += v[k] * std::polar(1.0, -th);
        }
        b[j] = acc / static_cast<double>(K);
    }
    return b;
}

inline CircleSample sample_circle(const Eigen::MatrixXcd& r0, const std::vector<std::size_t>& nr, std::size_t N,
                                  const std::vector<SparseDirection>* dirs, double radius,
                                  const InterpolationOptions& opt, bool check_denominator) {
    const auto w = r0.rows();
    const std::size_t K = N + 1 + opt.extra_points;
    const auto nrs = static_cast<Eigen::Index>(nr.size());
    const std::size_t ndir = dirs ? dirs->size() : 0;
    const double log_threshold = std::log(opt.denominator_threshold);
    constexpr double golden = 0.6180339887498949;

    std::vector<cplx> values(K);
    std::vector<std::vector<cplx>> g(ndir, std::vector<cplx>(K));
    double phase = 0.0;
    bool ok = false;
    for (int attempt = 0; attempt < opt.max_attempts && !ok; ++attempt) {
        phase = std::fmod(0.37 + golden * attempt, 1.0) * 2.0 * std::numbers::pi / static_cast<double>(K);
        ok = true;
        for (std::size_t k = 0; k < K; ++k) {
            const cplx lam = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(K) + phase);
            Eigen::MatrixXcd a = -r0;
            a.diagonal().array() += lam;
            const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
            const LogDet num = log_determinant(lu);
            LogDet den;
            Eigen::MatrixXcd a1;
            std::optional<Eigen::PartialPivLU<Eigen::MatrixXcd>> lu1;
            if (nrs > 0) {
                a1.resize(nrs, nrs);
                for (Eigen::Index i = 0; i < nrs; ++i)
                    for (Eigen::Index j = 0; j < nrs; ++j)
                        a1(i, j) = a(static_cast<Eigen::Index>(nr[static_cast<std::size_t>(i)]),
                                     static_cast<Eigen::Index>(nr[static_cast<std::size_t>(j)]));
                lu1.emplace(a1);
                den = log_determinant(*lu1);
                const double rel = log_relative_determinant(a1, den);
                if (!std::isfinite(den.log_abs) || (check_denominator && !(rel >= log_threshold))) {
                    ok = false;
                    break;
                }
            }
            const cplx chi = std::isfinite(num.log_abs) ? num.phase / den.phase * std::exp(num.log_abs - den.log_abs) : cplx{};
            values[k] = chi;
            if (ndir == 0) continue;
            const Eigen::MatrixXcd ainv = lu.inverse();
            Eigen::MatrixXcd a1inv;
            if (lu1) a1inv = lu1->inverse();
            for (std::size_t q = 0; q < ndir; ++q) {
                cplx tr = 0.0;
                for (const auto& e : (*dirs)[q].full) tr -= ainv(e.col, e.row) * e.value;
                for (const auto& e : (*dirs)[q].reduced) tr += a1inv(e.col, e.row) * e.value;
                g[q][k] = chi * tr;
            }
        }
    }
    if (!ok)
        throw DegenerateDenominator("det(lambda I - R0') is numerically zero on the circle of radius " +
                                    std::to_string(radius) + " after " + std::to_string(opt.max_attempts) + " phase shifts");

    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double work = static_cast<double>(w) + static_cast<double>(K);

    CircleSample s;
    s.radius = radius;
    const auto b = circle_dft(values, phase);
    double vmax = 0.0;
    for (const cplx& v : values) vmax = std::max(vmax, std::abs(v));
    double alias = 0.0;
    for (std::size_t j = N + 1; j < K; ++j) alias = std::max(alias, std::abs(b[j]));
    s.alias_rel = vmax > 0.0 ? alias / vmax : 0.0;
    s.noise = std::max(eps * work * vmax, alias);
    s.coeffs.resize(N + 1);
    for (std::size_t j = 0; j <= N; ++j) s.coeffs[j] = b[j] / std::pow(radius, static_cast<double>(j));

    if (ndir > 0) {
        s.jacobian.resize(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(ndir));
        double gmax = 0.0;
        double galias = 0.0;
        for (std::size_t q = 0; q < ndir; ++q) {
            for (const cplx& v : g[q]) gmax = std::max(gmax, std::abs(v));
            const auto bg = circle_dft(g[q], phase);
            for (std::size_t j = 0; j < N; ++j)
                s.jacobian(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(q)) =
                    bg[j] / std::pow(radius, static_cast<double>(j));
            for (std::size_t j = N; j < K; ++j) galias = std::max(galias, std::abs(bg[j]));
        }
        s.jacobian_noise = std::max(eps * work * gmax, galias);
    }
    return s;
}

/// Geometric grid covering the moduli of the nonzero roots, with ratio at most 2 between neighbours.
inline std::vector<double> radius_grid(const std::vector<cplx>& coeffs, double rho0, std::size_t max_radii) {
    std::vector<double> radii{rho0};
    if (max_radii <= 1) return radii;
    EigenMultiset rts;
    try {
        rts = roots(UniPoly(coeffs));
    } catch (const Error&) {
        return radii;
    }
    double rmax = 0.0;
    for (const cplx& r : rts.values)
        if (std::isfinite(std::abs(r))) rmax = std::max(rmax, std::abs(r));
    if (rmax == 0.0) return radii;
    double rmin = rmax;
    for (const cplx& r : rts.values) {
        const double a = std::abs(r);
        if (a > 1e-10 * rmax && a < rmin) rmin = a;
    }
    const double lo = rmin;
    const double hi = std::max(rmax, rho0 / 2.0) * 2.0;
    const std::size_t budget = max_radii - 1;
    std::size_t count = static_cast<std::size_t>(std::ceil(std::log2(hi / lo))) + 1;
    count = std::clamp<std::size_t>(count, 2, budget);
    for (std::size_t i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(count - 1);
        radii.push_back(lo * std::pow(hi / lo, t));
    }
    return radii;
}

}  // namespace detail

/// Interpolates chi(lambda) = det(lambda I - R0) / det(lambda I - R0'), which must be a
/// monic polynomial of degree N, from samples on circles. The first circle has radius
/// 1 + max|R0|; with multi_radius, further circles cover the root moduli found on it.
/// With directions, also interpolates d chi along each direction (Jacobi's formula).
inline PencilResult interpolate_pencil(const Eigen::MatrixXcd& r0, const std::vector<std::size_t>& non_reduced,
                                       std::size_t N, const std::vector<SparseDirection>* dirs = nullptr,
                                       const InterpolationOptions& opt = {}) {
    const double rho0 = 1.0 + (r0.size() ? r0.cwiseAbs().maxCoeff() : 0.0);
    std::vector<detail::CircleSample> samples;
    samples.push_back(detail::sample_circle(r0, non_reduced, N, dirs, rho0, opt, true));
    if (samples.front().alias_rel > opt.degree_tolerance)
        throw DegreeMismatch("samples are not those of a polynomial of degree " + std::to_string(N) +
                             " (relative aliasing " + std::to_string(samples.front().alias_rel) + ")");
    if (opt.multi_radius) {
        std::vector<cplx> first = samples.front().coeffs;
        if (std::abs(first.back()) > 0.0)
            for (cplx& c : first) c /= samples.front().coeffs.back();
        const auto radii = detail::radius_grid(first, rho0, opt.max_radii);
        // Inner circles may pass close to eigenvalues of R0'; their samples are kept only
        // through the error-estimate selection below.
        for (std::size_t i = 1; i < radii.size(); ++i) {
            try {
                samples.push_back(detail::sample_circle(r0, non_reduced, N, dirs, radii[i], opt, false));
            } catch (const DegenerateDenominator&) {
            }
        }
    }

    PencilResult res;
    res.coeffs.assign(N + 1, cplx{});
    res.errors.assign(N + 1, std::numeric_limits<double>::infinity());
    for (const auto& s : samples) {
        res.radii.push_back(s.radius);
        res.alias = std::max(res.alias, s.alias_rel);
        for (std::size_t j = 0; j <= N; ++j) {
            const double err = s.noise / std::pow(s.radius, static_cast<double>(j));
            if (err < res.errors[j]) {
                res.errors[j] = err;
                res.coeffs[j] = s.coeffs[j];
            }
        }
    }
    if (std::abs(res.coeffs[N] - 1.0) > opt.degree_tolerance)
        throw DegreeMismatch("interpolated leading coefficient " + std::to_string(std::abs(res.coeffs[N])) +
                             " differs from 1; degree is not " + std::to_string(N));
    for (std::size_t j = 0; j < N; ++j)
        if (std::abs(res.coeffs[j]) <= opt.truncation_factor * res.errors[j]) res.coeffs[j] = 0.0;
    res.coeffs[N] = 1.0;

    if (dirs && !dirs->empty()) {
        const auto nd = static_cast<Eigen::Index>(dirs->size());
        res.jacobian = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(N), nd);
        res.jacobian_errors.assign(N, std::numeric_limits<double>::infinity());
        for (const auto& s : samples) {
            for (std::size_t j = 0; j < N; ++j) {
                const double err = s.jacobian_noise / std::pow(s.radius, static_cast<double>(j));
                if (err < res.jacobian_errors[j]) {
                    res.jacobian_errors[j] = err;
                    res.jacobian.row(static_cast<Eigen::Index>(j)) = s.jacobian.row(static_cast<Eigen::Index>(j));
                }
            }
        }
    }
    return res;
}

}  // namespace teig
