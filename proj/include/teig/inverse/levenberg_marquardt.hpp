#pragma once

#include <cmath>
#include <functional>
#include <limits>

#include <Eigen/Dense>

namespace teig {

struct LMOptions {
    double initial_damping = 1e-3;
    double damping_increase = 10.0;
    double damping_decrease = 10.0;
    int max_iterations = 200;
    /// Stop when ||r|| falls below this.
    double residual_tolerance = 1e-12;
    /// Stop when ||dx|| <= step_tolerance * (1 + ||x||).
    double step_tolerance = 1e-14;
    /// Undamped Gauss-Newton steps taken after convergence, each kept only if it helps.
    int polish_steps = 3;
};

struct LMResult {
    Eigen::VectorXcd x;
    double residual = std::numeric_limits<double>::infinity();
    int iterations = 0;
    bool converged = false;
};

/// Evaluates the residual r(x) and its complex Jacobian dr/dx.
using ResidualFn = std::function<void(const Eigen::VectorXcd& x, Eigen::VectorXcd& r, Eigen::MatrixXcd& j)>;

namespace detail {

/// argmin ||J dx + r||^2 + mu ||dx||^2 via a rank-revealing QR of the stacked system
/// [J; sqrt(mu) I]; with mu = 0 this is the minimum-norm Gauss-Newton step.
inline Eigen::VectorXcd damped_step(const Eigen::MatrixXcd& j, const Eigen::VectorXcd& r, double mu) {
    const Eigen::Index rows = j.rows();
    const Eigen::Index cols = j.cols();
    Eigen::MatrixXcd a(rows + cols, cols);
    a.topRows(rows) = j;
    a.bottomRows(cols) = std::sqrt(mu) * Eigen::MatrixXcd::Identity(cols, cols);
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(rows + cols);
    rhs.head(rows) = -r;
    return a.completeOrthogonalDecomposition().solve(rhs);
}

}  // namespace detail

/// Levenberg-Marquardt for holomorphic residuals; damping grows on rejected steps and
/// shrinks on accepted ones.
inline LMResult levenberg_marquardt(const ResidualFn& f, Eigen::VectorXcd x, const LMOptions& opt = {}) {
    Eigen::VectorXcd r;
    Eigen::MatrixXcd j;
    f(x, r, j);
    double res = r.norm();
    double mu = opt.initial_damping;
    LMResult out;
    int it = 0;
    for (; it < opt.max_iterations && res >= opt.residual_tolerance; ++it) {
        if (!std::isfinite(res)) break;
        const Eigen::VectorXcd dx = detail::damped_step(j, r, mu);
        const Eigen::VectorXcd xn = x + dx;
        Eigen::VectorXcd rn;
        Eigen::MatrixXcd jn;
        bool ok = true;
        try {
            f(xn, rn, jn);
        } catch (const std::exception&) {
            ok = false;
        }
        const double resn = ok ? rn.norm() : std::numeric_limits<double>::infinity();
        if (resn < res) {
            x = xn;
            r = std::move(rn);
            j = std::move(jn);
            res = resn;
            mu /= opt.damping_decrease;
        } else {
            mu *= opt.damping_increase;
        }
        if (dx.norm() <= opt.step_tolerance * (1.0 + x.norm())) break;
    }
    for (int k = 0; k < opt.polish_steps && std::isfinite(res); ++k) {
        const Eigen::VectorXcd xn = x + detail::damped_step(j, r, 0.0);
        Eigen::VectorXcd rn;
        Eigen::MatrixXcd jn;
        try {
            f(xn, rn, jn);
        } catch (const std::exception&) {
            break;
        }
        if (!(rn.norm() < res)) break;
        x = xn;
        r = std::move(rn);
        j = std::move(jn);
        res = r.norm();
    }
    out.x = std::move(x);
    out.residual = res;
    out.iterations = it;
    out.converged = res < opt.residual_tolerance;
    return out;
}

}  // namespace teig
