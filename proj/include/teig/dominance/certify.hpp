#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "teig/core/random.hpp"
#include "teig/core/tensor.hpp"
#include "teig/dominance/jacobian.hpp"
#include "teig/dominance/paper_points.hpp"
#include "teig/spectra/classify.hpp"

namespace teig {

struct CertifyOptions {
    /// Run the numerics even when the necessary condition already rules dominance out.
    bool force = false;
    bool include_paper_points = true;
    double gap_threshold = 1e6;
    JacobianOptions jacobian;
};

struct PointCertification {
    std::string label;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    double gap_ratio = 0.0;
    /// sigma_rank / tolerance.
    double margin = 0.0;
};

struct CertificationReport {
    int n = 0;
    int m = 0;
    /// certified, not-certified or refused.
    std::string status;
    std::size_t max_rank = 0;
    std::size_t target_rank = 0;
    std::vector<PointCertification> points;
};

inline PointCertification certify_point(const std::string& label, const TensorTS& t,
                                        const std::vector<TensorTS>& directions, const JacobianOptions& opt) {
    const JacobianReport j = coefficient_jacobian(t, directions, opt);
    PointCertification p;
    p.label = label;
    p.rows = static_cast<std::size_t>(j.matrix.rows());
    p.cols = static_cast<std::size_t>(j.matrix.cols());
    p.rank = j.rank;
    p.gap_ratio = j.gap_ratio;
    p.margin = j.rank > 0 && j.tolerance > 0.0 ? j.singular_values[j.rank - 1] / j.tolerance
                                               : std::numeric_limits<double>::infinity();
    return p;
}

/// Full Jacobian rank of the coefficient map at some evaluated point, with a clear
/// spectral gap, certifies dominance. Points: `trials` random tensors followed by the
/// fixed points defined for (n, m).
inline CertificationReport certify_dominance(int n, int m, int trials, std::uint64_t seed,
                                             const CertifyOptions& opt = {}) {
    if (trials < 1) throw DimensionMismatch("certify_dominance needs trials >= 1");
    const Classification c = classify(n, m);
    CertificationReport rep;
    rep.n = n;
    rep.m = m;
    rep.target_rank = static_cast<std::size_t>(c.num_eigenvalues);
    if (!c.dominant && !opt.force) {
        rep.status = "refused";
        return rep;
    }
    const auto dirs = standard_directions(n, m);
    Rng rng(seed);
    for (int k = 0; k < trials; ++k) {
        const TensorTS t = random_tensor(n, m, rng.next_u64());
        rep.points.push_back(certify_point("random-" + std::to_string(k), t, dirs, opt.jacobian));
    }
    if (opt.include_paper_points) {
        for (const std::string& label : paper_points_for(n, m)) {
            const PaperPoint p = paper_point(label);
            rep.points.push_back(certify_point(label, p.tensor,
                                               coordinate_directions(n, m, p.free_coordinates), opt.jacobian));
        }
    }
    bool certified = false;
    for (const auto& p : rep.points) {
        rep.max_rank = std::max(rep.max_rank, p.rank);
        if (p.rank == rep.target_rank && p.gap_ratio > opt.gap_threshold) certified = true;
    }
    rep.status = certified ? "certified" : "not-certified";
    return rep;
}

}  // namespace teig
