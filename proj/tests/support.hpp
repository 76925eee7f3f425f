#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "teig/teig.hpp"

namespace teig::testing {

inline std::vector<cplx> random_vector(Rng& rng, std::size_t n) {
    std::vector<cplx> v(n);
    for (cplx& c : v) c = rng.complex_unit_square();
    return v;
}

inline EigenMultiset random_multiset(Rng& rng, std::size_t n) {
    EigenMultiset s;
    for (std::size_t i = 0; i < n; ++i) s.values.push_back(rng.complex_unit_disk());
    return s;
}

/// Dense eigensolver on the Sylvester matrix of an n = 2 tensor.
inline EigenMultiset sylvester_eigenvalues(const TensorTS& t) {
    const auto [a, b] = to_n2_params(t);
    const Eigen::MatrixXcd s = sylvester_matrix(a, b).entries;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(s, false);
    EigenMultiset e;
    e.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + s.rows());
    return e;
}

inline UniPoly power_of_linear(cplx root, unsigned k) { return UniPoly({-root, cplx{1.0}}).pow(k); }

}  // namespace teig::testing
