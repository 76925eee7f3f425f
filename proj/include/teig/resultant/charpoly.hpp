#pragma once

#include <vector>

#include "teig/core/tensor.hpp"
#include "teig/poly/unipoly.hpp"
#include "teig/resultant/macaulay.hpp"
#include "teig/resultant/pencil.hpp"

namespace teig {

/// Characteristic polynomial together with the engine's diagnostics.
struct CharpolyReport {
    UniPoly poly;
    std::vector<double> errors;
    std::vector<double> radii;
    double alias = 0.0;
};

inline CharpolyReport charpoly_report(const TensorTS& t, const InterpolationOptions& opt = {}) {
    const MacaulayPair mp = macaulay_matrices(t);
    const std::size_t N = eigenvalue_count(t.n(), t.m());
    PencilResult r = interpolate_pencil(mp.R0, mp.non_reduced, N, nullptr, opt);
    return {UniPoly(std::move(r.coeffs)), std::move(r.errors), std::move(r.radii), r.alias};
}

/// chi(lambda) = det(lambda I - T), monic of degree n m^(n-1).
inline UniPoly charpoly(const TensorTS& t, const InterpolationOptions& opt = {}) {
    return charpoly_report(t, opt).poly;
}

/// Non-leading coefficients of chi, highest degree first: (c_{N-1}, ..., c_0).
inline std::vector<cplx> coefficient_map(const TensorTS& t, const InterpolationOptions& opt = {}) {
    const UniPoly p = charpoly(t, opt);
    const auto& c = p.coeffs();
    return std::vector<cplx>(c.rbegin() + 1, c.rend());
}

/// Characteristic polynomial det(lambda I - M) of a square matrix via the same engine.
inline UniPoly matrix_charpoly(const Eigen::MatrixXcd& m, const InterpolationOptions& opt = {}) {
    PencilResult r = interpolate_pencil(m, {}, static_cast<std::size_t>(m.rows()), nullptr, opt);
    return UniPoly(std::move(r.coeffs));
}

}  // namespace teig
