#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

#include "teig/core/monomial.hpp"
#include "teig/error.hpp"

namespace teig {

/// Whether the eigenvalue map on TS(C^n, m+1) is dominant.
struct Classification {
    int n = 0;
    int m = 0;
    bool dominant = false;
    /// scalar-case, matrix-case, n-equals-2, exceptional-pair or dimension-deficient.
    std::string reason;
    std::uint64_t dim_ts = 0;
    std::uint64_t num_eigenvalues = 0;
    /// binomial(n+m-1, m) < m^(n-1): the tensor space is too small to reach every multiset.
    bool size_inequality = false;
};

inline Classification classify(int n, int m) {
    if (n < 1 || m < 1) throw DimensionMismatch("classify needs n >= 1 and m >= 1");
    Classification c;
    c.n = n;
    c.m = m;
    const std::uint64_t slice = binomial(n + m - 1, m);
    const std::uint64_t mpow = ipow(static_cast<std::uint64_t>(m), static_cast<unsigned>(n - 1));
    c.dim_ts = static_cast<std::uint64_t>(n) * slice;
    c.num_eigenvalues = static_cast<std::uint64_t>(n) * mpow;
    c.size_inequality = slice < mpow;
    if (n == 1) {
        c.dominant = true;
        c.reason = "scalar-case";
    } else if (m == 1) {
        c.dominant = true;
        c.reason = "matrix-case";
    } else if (n == 2) {
        c.dominant = true;
        c.reason = "n-equals-2";
    } else if ((n == 3 && m == 2) || (n == 4 && m == 2) || (n == 3 && m == 3)) {
        c.dominant = true;
        c.reason = "exceptional-pair";
    } else {
        c.dominant = false;
        c.reason = "dimension-deficient";
    }
    return c;
}

/// min{ n binomial(n+m-1, m), n m^(n-1) }; a conjectured value, not a theorem.
inline std::uint64_t expected_image_dim(int n, int m) {
    const Classification c = classify(n, m);
    return std::min(c.dim_ts, c.num_eigenvalues);
}

}  // namespace teig
