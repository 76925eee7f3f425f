#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace teig {

/// Exponent vector alpha of a monomial x^alpha.
using Exponent = std::vector<int>;

/// binomial(n, k) in 64-bit arithmetic; throws on overflow.
inline std::uint64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        // r * num / i is always integral; divide by gcd first to delay overflow.
        const std::uint64_t g = std::gcd(r, static_cast<std::uint64_t>(i));
        const std::uint64_t rr = r / g;
        const std::uint64_t ii = static_cast<std::uint64_t>(i) / g;
        if (rr > std::numeric_limits<std::uint64_t>::max() / num) throw std::overflow_error("binomial overflow");
        r = rr * num / ii;
    }
    return r;
}

/// base^exp in 64-bit arithmetic; throws on overflow.
inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) throw std::overflow_error("ipow overflow");
        r *= base;
    }
    return r;
}

/// Number of monomials of degree d in n variables.
inline std::size_t monomial_count(int n, int d) {
    return static_cast<std::size_t>(binomial(n + d - 1, d));
}

/// All exponent vectors of total degree d in n variables, descending lexicographic order.
/// For n = 2, d = 2: [2,0], [1,1], [0,2].
inline std::vector<Exponent> monomials(int n, int d) {
    std::vector<Exponent> out;
    out.reserve(monomial_count(n, d));
    Exponent cur(static_cast<std::size_t>(n), 0);
    // Recursive fill: position k takes values from the remaining degree down to 0.
    auto rec = [&](auto&& self, int k, int rem) -> void {
        if (k == n - 1) {
            cur[static_cast<std::size_t>(k)] = rem;
            out.push_back(cur);
            return;
        }
        for (int a = rem; a >= 0; --a) {
            cur[static_cast<std::size_t>(k)] = a;
            self(self, k + 1, rem - a);
        }
    };
    if (n > 0) rec(rec, 0, d);
    return out;
}

/// Number of index words (i_1..i_m) with exponent profile alpha: m! / prod(alpha_j!).
inline std::uint64_t multinomial(const Exponent& alpha) {
    std::uint64_t r = 1;
    int total = 0;
    for (int a : alpha) {
        total += a;
        r *= binomial(total, a);
    }
    return r;
}

/// Lookup from exponent vector to its position in a monomial list.
class MonomialIndex {
public:
    MonomialIndex() = default;
    explicit MonomialIndex(const std::vector<Exponent>& basis) {
        for (std::size_t i = 0; i < basis.size(); ++i) index_.emplace(basis[i], i);
    }

    /// Position of alpha, or npos when alpha is not in the basis.
    std::size_t find(const Exponent& alpha) const {
        auto it = index_.find(alpha);
        return it == index_.end() ? npos : it->second;
    }

    std::size_t at(const Exponent& alpha) const {
        const std::size_t i = find(alpha);
        if (i == npos) throw std::out_of_range("monomial not in basis");
        return i;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::map<Exponent, std::size_t> index_;
};

}  // namespace teig
