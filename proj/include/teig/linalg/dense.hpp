#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace teig {

using cplx = std::complex<double>;

/// det(A) = phase * exp(log_abs). A zero pivot gives log_abs = -inf.
struct LogDet {
    double log_abs = 0.0;
    cplx phase{1.0, 0.0};

    cplx value() const { return phase * std::exp(log_abs); }
};

inline LogDet log_determinant(const Eigen::PartialPivLU<Eigen::MatrixXcd>& lu) {
    LogDet r;
    const auto& lum = lu.matrixLU();
    for (Eigen::Index i = 0; i < lum.rows(); ++i) {
        const cplx d = lum(i, i);
        const double a = std::abs(d);
        if (a == 0.0) {
            r.log_abs = -std::numeric_limits<double>::infinity();
            r.phase = 0.0;
            return r;
        }
        r.log_abs += std::log(a);
        r.phase *= d / a;
    }
    if (lu.permutationP().determinant() < 0) r.phase = -r.phase;
    return r;
}

inline LogDet log_determinant(const Eigen::MatrixXcd& a) {
    if (a.rows() == 0) return {};
    return log_determinant(Eigen::PartialPivLU<Eigen::MatrixXcd>(a));
}

/// log|det A| minus the sum of log row norms; 0 for orthogonal rows, very negative near singularity.
inline double log_relative_determinant(const Eigen::MatrixXcd& a, const LogDet& det) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        const double nrm = a.row(i).norm();
        if (nrm == 0.0) return -std::numeric_limits<double>::infinity();
        s += std::log(nrm);
    }
    return det.log_abs - s;
}

struct RankReport {
    std::size_t rank = 0;
    std::vector<double> singular_values;
    double tolerance = 0.0;
    /// sigma_rank / sigma_(rank+1); infinity when rank = min(rows, cols) or the next value is zero.
    double gap_ratio = std::numeric_limits<double>::infinity();
};

/// Numerical rank policy: tolerance = max(rows, cols) * eps * sigma_1 * safety unless
/// an absolute tolerance is given.
struct RankPolicy {
    double safety = 1e3;
    std::optional<double> absolute_tolerance;
};

inline RankReport numerical_rank(const Eigen::MatrixXcd& m, const RankPolicy& policy = {}) {
    RankReport r;
    if (m.size() == 0) return r;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& s = svd.singularValues();
    r.singular_values.assign(s.data(), s.data() + s.size());
    const double sigma1 = r.singular_values.empty() ? 0.0 : r.singular_values.front();
    r.tolerance = policy.absolute_tolerance
                      ? *policy.absolute_tolerance
                      : static_cast<double>(std::max(m.rows(), m.cols())) * std::numeric_limits<double>::epsilon() *
                            sigma1 * policy.safety;
    r.rank = static_cast<std::size_t>(
        std::count_if(r.singular_values.begin(), r.singular_values.end(), [&](double x) { return x > r.tolerance; }));
    if (r.rank == 0) {
        r.gap_ratio = 0.0;
    } else if (r.rank < r.singular_values.size() && r.singular_values[r.rank] > 0.0) {
        r.gap_ratio = r.singular_values[r.rank - 1] / r.singular_values[r.rank];
    }
    return r;
}

}  // namespace teig
