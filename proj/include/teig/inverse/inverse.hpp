#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "teig/core/random.hpp"
#include "teig/core/tensor.hpp"
#include "teig/error.hpp"
#include "teig/inverse/levenberg_marquardt.hpp"
#include "teig/poly/matching.hpp"
#include "teig/poly/unipoly.hpp"
#include "teig/resultant/macaulay.hpp"
#include "teig/resultant/pencil.hpp"
#include "teig/spectra/spectra.hpp"

namespace teig {

struct InverseResult {
    /// success, infeasible or max-restarts.
    std::string status;
    /// Set for tensor problems (invert_generic, invert_on_subspace_L).
    std::optional<TensorTS> tensor;
    /// Sylvester parameters of the best candidate.
    std::vector<cplx> a;
    std::vector<cplx> b;
    /// ||c - c*||_2 for the target scaled to max|s| = 1.
    double residual = std::numeric_limits<double>::infinity();
    /// Worst matched eigenvalue distance (cluster centroids for repeated targets).
    double eig_match = std::numeric_limits<double>::infinity();
    int iterations = 0;
    int restarts_used = 0;
};

namespace detail {

/// Characteristic-polynomial fit for Sylvester matrices whose parameters (a, b) = P x
/// depend linearly on x.
struct SylvesterFit {
    int p = 0;
    int q = 0;
    Eigen::MatrixXcd param_map;
    /// Target c_0..c_{N-1}.
    Eigen::VectorXcd target;
    std::vector<SparseDirection> dirs;

    SylvesterFit(int p_, int q_, Eigen::MatrixXcd map, const UniPoly& monic_target)
        : p(p_), q(q_), param_map(std::move(map)) {
        const int n = p + q;
        target.resize(n);
        for (int k = 0; k < n; ++k) target(k) = monic_target[static_cast<std::size_t>(k)];
        for (int k = 0; k <= p; ++k) {
            SparseDirection d;
            for (int r = 0; r < q; ++r) d.full.push_back({r, r + k, 1.0});
            dirs.push_back(std::move(d));
        }
        for (int k = 0; k <= q; ++k) {
            SparseDirection d;
            for (int r = 0; r < p; ++r) d.full.push_back({q + r, r + k, 1.0});
            dirs.push_back(std::move(d));
        }
    }

    std::pair<std::vector<cplx>, std::vector<cplx>> split(const Eigen::VectorXcd& x) const {
        const Eigen::VectorXcd ab = param_map * x;
        std::vector<cplx> a(ab.data(), ab.data() + p + 1);
        std::vector<cplx> b(ab.data() + p + 1, ab.data() + ab.size());
        return {a, b};
    }

    void operator()(const Eigen::VectorXcd& x, Eigen::VectorXcd& r, Eigen::MatrixXcd& j) const {
        const auto [a, b] = split(x);
        const Eigen::MatrixXcd m = sylvester_matrix(a, b).entries;
        const auto n = static_cast<std::size_t>(p + q);
        const PencilResult pr = interpolate_pencil(m, {}, n, &dirs);
        r.resize(static_cast<Eigen::Index>(n));
        for (std::size_t k = 0; k < n; ++k) r(static_cast<Eigen::Index>(k)) = pr.coeffs[k] - target(static_cast<Eigen::Index>(k));
        j = pr.jacobian * param_map;
    }
};

inline EigenMultiset matrix_eigenvalues(const Eigen::MatrixXcd& m) {
    EigenMultiset e;
    if (m.rows() == 0) return e;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
    e.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + m.rows());
    return e;
}

inline InverseResult solve_sylvester_fit(const EigenMultiset& s, int p, int q, const Eigen::MatrixXcd& param_map,
                                         std::uint64_t seed, int restarts, const LMOptions& lm) {
    if (restarts < 1) throw DimensionMismatch("restart budget must be at least 1");
    double sigma = 0.0;
    for (const cplx& v : s.values) sigma = std::max(sigma, std::abs(v));
    const Eigen::Index dim = param_map.cols();

    auto finish = [&](InverseResult& res, const Eigen::VectorXcd& x, double residual) {
        const Eigen::VectorXcd ab = param_map * x * (sigma > 0.0 ? sigma : 1.0);
        res.a.assign(ab.data(), ab.data() + p + 1);
        res.b.assign(ab.data() + p + 1, ab.data() + ab.size());
        res.residual = residual;
        const EigenMultiset got = matrix_eigenvalues(sylvester_matrix(res.a, res.b).entries);
        const MatchReport mr = match_multisets_clustered(got, s, 1e-6);
        res.eig_match = mr.max_distance;
        return mr.matched && residual < 1e-10;
    };

    InverseResult best;
    best.status = "max-restarts";
    if (sigma == 0.0) {
        if (finish(best, Eigen::VectorXcd::Zero(dim), 0.0)) best.status = "success";
        return best;
    }
    EigenMultiset scaled = s;
    for (cplx& v : scaled.values) v /= sigma;
    const SylvesterFit fit(p, q, param_map, poly_from_roots(scaled));
    Rng rng(seed);
    for (int attempt = 0; attempt < restarts; ++attempt) {
        Eigen::VectorXcd x0(dim);
        for (Eigen::Index i = 0; i < dim; ++i) x0(i) = rng.complex_unit_square();
        LMResult lr;
        try {
            lr = levenberg_marquardt(std::cref(fit), x0, lm);
        } catch (const Error&) {
            continue;
        }
        InverseResult cand;
        cand.iterations = lr.iterations;
        cand.restarts_used = attempt;
        const bool ok = std::isfinite(lr.residual) && finish(cand, lr.x, lr.residual);
        if (ok) {
            cand.status = "success";
            return cand;
        }
        cand.status = "max-restarts";
        if (cand.residual < best.residual) best = cand;
    }
    best.restarts_used = restarts - 1;
    return best;
}

}  // namespace detail

/// Finds (a, b) of a (p, q) Sylvester matrix with eigenvalue multiset S, |S| = p + q.
inline InverseResult invert_sylvester(const EigenMultiset& s, int p, int q, std::uint64_t seed, int restarts = 20,
                                      const LMOptions& lm = {}) {
    if (p < 1 || q < 1) throw DimensionMismatch("invert_sylvester needs p, q >= 1");
    if (s.size() != static_cast<std::size_t>(p + q))
        throw DimensionMismatch("target has " + std::to_string(s.size()) + " values, expected p + q = " +
                                std::to_string(p + q));
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(p + q + 2, p + q + 2);
    return detail::solve_sylvester_fit(s, p, q, id, seed, restarts, lm);
}

/// Finds T in TS(C^2, m+1) with eigenvalue multiset S, |S| = 2m.
inline InverseResult invert_generic(const EigenMultiset& s, int m, std::uint64_t seed, int restarts = 20,
                                    const LMOptions& lm = {}) {
    if (m < 1) throw DimensionMismatch("invert_generic needs m >= 1");
    if (s.size() != static_cast<std::size_t>(2 * m))
        throw DimensionMismatch("target has " + std::to_string(s.size()) + " values, expected 2m = " + std::to_string(2 * m));
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2 * m + 2, 2 * m + 2);
    InverseResult r = detail::solve_sylvester_fit(s, m, m, id, seed, restarts, lm);
    r.tensor = from_n2_params(r.a, r.b);
    return r;
}

/// Parametrization of the subspace L of TS(C^2, 3): x = (a0, a1, a2, b2),
/// b1 = -a1 - b2, b0 = -a2.
inline Eigen::MatrixXcd subspace_l_map() {
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(6, 4);
    p(0, 0) = 1.0;   // a0
    p(1, 1) = 1.0;   // a1
    p(2, 2) = 1.0;   // a2
    p(3, 2) = -1.0;  // b0 = -a2
    p(4, 1) = -1.0;  // b1 = -a1 - b2
    p(4, 3) = -1.0;
    p(5, 3) = 1.0;   // b2
    return p;
}

/// Finds T in the subspace L (m = 2) with eigenvalue multiset S, |S| = 4.
inline InverseResult invert_on_subspace_L(const EigenMultiset& s, std::uint64_t seed, int restarts = 100,
                                          const LMOptions& lm = {}) {
    if (s.size() != 4) throw DimensionMismatch("invert_on_subspace_L needs 4 target values, got " + std::to_string(s.size()));
    InverseResult r = detail::solve_sylvester_fit(s, 2, 2, subspace_l_map(), seed, restarts, lm);
    r.tensor = from_n2_params(r.a, r.b);
    return r;
}

struct WedgeInverseResult {
    /// success or infeasible.
    std::string status;
    std::optional<BinaryForm> form;
    /// Least-squares residual of the (m+1) x m system.
    double residual = 0.0;
    /// Max matched distance between wedge_eigenvalues(f) and the full target multiset.
    double eig_match = std::numeric_limits<double>::infinity();
};

/// Solves lambda_j = sum_i a_i omega_j^(i+1), j = 0..m, for f = sum_i a_i x^(m-1-i) y^i.
/// The targets are taken in the order of wedge_nodes(m).
inline WedgeInverseResult invert_wedge(const std::vector<cplx>& lambdas) {
    if (lambdas.size() < 2) throw DimensionMismatch("invert_wedge needs m+1 >= 2 target values");
    const int m = static_cast<int>(lambdas.size()) - 1;
    const auto nodes = wedge_nodes(m);
    Eigen::MatrixXcd v(m + 1, m);
    Eigen::VectorXcd rhs(m + 1);
    for (int j = 0; j <= m; ++j) {
        rhs(j) = lambdas[static_cast<std::size_t>(j)];
        for (int i = 0; i < m; ++i) v(j, i) = std::pow(nodes[static_cast<std::size_t>(j)], i + 1);
    }
    const Eigen::VectorXcd a = v.colPivHouseholderQr().solve(rhs);
    WedgeInverseResult r;
    r.residual = (v * a - rhs).norm();
    if (!(r.residual < 1e-9 * (1.0 + rhs.norm()))) {
        r.status = "infeasible";
        return r;
    }
    BinaryForm f(std::vector<cplx>(a.data(), a.data() + m));
    EigenMultiset target{lambdas};
    target.values.insert(target.values.end(), static_cast<std::size_t>(m - 1), cplx{});
    r.eig_match = match_multisets(wedge_eigenvalues(f), target, 1e-9 * (1.0 + rhs.norm())).max_distance;
    r.form = std::move(f);
    r.status = "success";
    return r;
}

}  // namespace teig
