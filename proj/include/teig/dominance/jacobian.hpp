#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "teig/core/tensor.hpp"
#include "teig/error.hpp"
#include "teig/linalg/dense.hpp"
#include "teig/resultant/charpoly.hpp"
#include "teig/resultant/macaulay.hpp"
#include "teig/resultant/pencil.hpp"

namespace teig {

enum class JacobianMethod {
    /// d chi = chi * (tr((lambda I - R0')^-1 B') - tr((lambda I - R0)^-1 B)), interpolated in lambda.
    analytic,
    /// [c(T + hD) - c(T - hD)] / 2h.
    central_difference,
};

inline const char* to_string(JacobianMethod m) {
    return m == JacobianMethod::analytic ? "analytic" : "central-difference";
}

struct JacobianOptions {
    JacobianMethod method = JacobianMethod::analytic;
    /// Central-difference step; default 1e-5 * (1 + max|T|).
    std::optional<double> step;
    RankPolicy rank;
    /// Rows with norm below this multiple of their error estimate count as zero.
    double zero_row_factor = 8.0;
    InterpolationOptions interpolation;
};

/// Jacobian of the coefficient map at a point.
///
/// Rows are c_{N-1}, ..., c_0; column j is the derivative along directions[j]. Rank and
/// singular values are those of the row-equilibrated matrix, in which rows that are zero
/// up to their error estimate are set to zero.
struct JacobianReport {
    Eigen::MatrixXcd matrix;
    std::vector<double> row_errors;
    std::vector<double> singular_values;
    std::size_t rank = 0;
    double tolerance = 0.0;
    double gap_ratio = std::numeric_limits<double>::infinity();
    TensorTS point = TensorTS::zero(1, 1);
    /// 0 for the analytic method.
    double step = 0.0;
    JacobianMethod method = JacobianMethod::analytic;
};

/// The n * binomial(n+m-1, m) coordinate tensors, slice by slice, entries in exponent order.
inline std::vector<TensorTS> standard_directions(int n, int m) {
    std::vector<TensorTS> out;
    const TensorTS zero = TensorTS::zero(n, m);
    for (std::size_t k = 0; k < zero.dimension(); ++k) {
        TensorTS e = zero;
        e.flat(k) = 1.0;
        out.push_back(std::move(e));
    }
    return out;
}

/// Coordinate tensors for a list of (slice, entry) positions.
inline std::vector<TensorTS> coordinate_directions(int n, int m,
                                                   const std::vector<std::pair<std::size_t, std::size_t>>& coords) {
    std::vector<TensorTS> out;
    for (auto [i, j] : coords) {
        TensorTS e = TensorTS::zero(n, m);
        e(i, j) = 1.0;
        out.push_back(std::move(e));
    }
    return out;
}

/// Rank of a Jacobian after row equilibration; rows within zero_row_factor of their
/// error estimate are zeroed.
inline RankReport jacobian_rank(const Eigen::MatrixXcd& j, const std::vector<double>& row_errors,
                                const RankPolicy& policy = {}, double zero_row_factor = 8.0) {
    Eigen::MatrixXcd e = j;
    const double width = std::sqrt(static_cast<double>(j.cols()));
    for (Eigen::Index r = 0; r < e.rows(); ++r) {
        const double nrm = e.row(r).norm();
        const double err = r < static_cast<Eigen::Index>(row_errors.size()) ? row_errors[static_cast<std::size_t>(r)] : 0.0;
        if (nrm == 0.0 || nrm <= zero_row_factor * err * width) e.row(r).setZero();
        else e.row(r) /= nrm;
    }
    return numerical_rank(e, policy);
}

inline JacobianReport coefficient_jacobian(const TensorTS& t, const std::vector<TensorTS>& directions,
                                           const JacobianOptions& opt = {}) {
    if (directions.empty()) throw DimensionMismatch("coefficient_jacobian needs at least one direction");
    for (std::size_t q = 0; q < directions.size(); ++q) {
        if (directions[q].n() != t.n() || directions[q].m() != t.m())
            throw DimensionMismatch("direction " + std::to_string(q) + " has a different shape than the tensor");
    }
    const std::size_t N = eigenvalue_count(t.n(), t.m());
    const auto nd = static_cast<Eigen::Index>(directions.size());
    JacobianReport rep;
    rep.point = t;
    rep.method = opt.method;
    rep.matrix.resize(static_cast<Eigen::Index>(N), nd);
    rep.row_errors.assign(N, 0.0);

    if (opt.method == JacobianMethod::analytic) {
        const MacaulayPair mp = macaulay_matrices(t);
        std::vector<SparseDirection> dirs;
        dirs.reserve(directions.size());
        for (const TensorTS& d : directions) dirs.push_back(sparse_direction(mp, d));
        const PencilResult r = interpolate_pencil(mp.R0, mp.non_reduced, N, &dirs, opt.interpolation);
        for (std::size_t k = 0; k < N; ++k) {
            rep.matrix.row(static_cast<Eigen::Index>(k)) = r.jacobian.row(static_cast<Eigen::Index>(N - 1 - k));
            rep.row_errors[k] = r.jacobian_errors[N - 1 - k];
        }
    } else {
        const double h = opt.step.value_or(1e-5 * (1.0 + t.max_abs()));
        if (!(h > 0.0)) throw DimensionMismatch("finite-difference step must be positive");
        rep.step = h;
        for (std::size_t q = 0; q < directions.size(); ++q) {
            CharpolyReport plus, minus;
            try {
                plus = charpoly_report(t + cplx(h) * directions[q], opt.interpolation);
                minus = charpoly_report(t + cplx(-h) * directions[q], opt.interpolation);
            } catch (const Error& e) {
                throw ProbeFailure(q, std::string(e.kind()) + ": " + e.what());
            }
            for (std::size_t k = 0; k < N; ++k) {
                const std::size_t deg = N - 1 - k;
                rep.matrix(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(q)) =
                    (plus.poly[deg] - minus.poly[deg]) / (2.0 * h);
                rep.row_errors[k] = std::max(rep.row_errors[k], (plus.errors[deg] + minus.errors[deg]) / (2.0 * h));
            }
        }
    }
    const RankReport rr = jacobian_rank(rep.matrix, rep.row_errors, opt.rank, opt.zero_row_factor);
    rep.singular_values = rr.singular_values;
    rep.rank = rr.rank;
    rep.tolerance = rr.tolerance;
    rep.gap_ratio = rr.gap_ratio;
    return rep;
}

/// Rank of K, the 2m x 2m block of the n = 2 Jacobian along a_0..a_m, b_0..b_{m-2}.
struct KRankReport {
    std::size_t rank = 0;
    bool det_nonzero = false;
    std::vector<double> singular_values;
    double gap_ratio = 0.0;
    Eigen::MatrixXcd matrix;
};

inline KRankReport k_submatrix_rank(const TensorTS& t, const JacobianOptions& opt = {}) {
    if (t.n() != 2) throw DimensionMismatch("k_submatrix_rank needs n = 2, got n = " + std::to_string(t.n()));
    const int m = t.m();
    std::vector<std::pair<std::size_t, std::size_t>> coords;
    for (int i = 0; i <= m; ++i) coords.emplace_back(0, static_cast<std::size_t>(i));
    for (int i = 0; i + 2 <= m; ++i) coords.emplace_back(1, static_cast<std::size_t>(i));
    const JacobianReport j = coefficient_jacobian(t, coordinate_directions(2, m, coords), opt);
    KRankReport r;
    r.rank = j.rank;
    r.det_nonzero = j.rank == static_cast<std::size_t>(2 * m);
    r.singular_values = j.singular_values;
    r.gap_ratio = j.gap_ratio;
    r.matrix = j.matrix;
    return r;
}

}  // namespace teig
