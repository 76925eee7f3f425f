#include <array>
#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace teig;
using teig::testing::power_of_linear;
using teig::testing::sylvester_eigenvalues;

namespace {

// 15 x 15 matrix of the (3,2) system: rows f_i * g for g in
// T1 = {x1^2, x1x2, x2^2, x1x3, x2x3, x3^2}, T2 = {x1x2, x1x3, x2^2, x2x3, x3^2},
// T3 = {x1x2, x1x3, x2x3, x3^2}; token "ij" is a_ij, the coefficient of the j-th
// monomial of (x1^2, x1x2, x2^2, x1x3, x2x3, x3^2) in slice i.
constexpr std::array<const char*, 15> reference_m{
    "11 12 13 14 15 16  0  0  0  0  0  0  0  0  0",
    " 0 11 12  0 14  0 13 15  0  0  0 16  0  0  0",
    " 0  0 11  0  0  0 12 14 13 15 16  0  0  0  0",
    " 0  0  0 11 12 14  0 13  0  0  0 15 16  0  0",
    " 0  0  0  0 11  0  0 12  0 13 15 14  0 16  0",
    " 0  0  0  0  0 11  0  0  0  0 13 12 14 15 16",
    " 0 21 22  0 24  0 23 25  0  0  0 26  0  0  0",
    " 0  0  0 21 22 24  0 23  0  0  0 25 26  0  0",
    " 0  0 21  0  0  0 22 24 23 25 26  0  0  0  0",
    " 0  0  0  0 21  0  0 22  0 23 25 24  0 26  0",
    " 0  0  0  0  0 21  0  0  0  0 23 22 24 25 26",
    " 0 31 32  0 34  0 33 35  0  0  0 36  0  0  0",
    " 0  0  0 31 32 34  0 33  0  0  0 35 36  0  0",
    " 0  0  0  0 31  0  0 32  0 33 35 34  0 36  0",
    " 0  0  0  0  0 31  0  0  0  0 33 32 34 35 36",
};

// Reduced 12 x 12 matrix for the family a21 = a31 = a13 = a33 = 0.
constexpr std::array<const char*, 12> reference_m_reduced{
    "11  0  0  0 12 14 15 16  0  0  0  0",
    " 0 11 12 14  0  0  0  0 15 16  0  0",
    " 0  0 11  0  0 12  0 15 14  0 16  0",
    " 0  0  0 11  0  0  0  0 12 14 15 16",
    "22  0 24  0 23 25  0  0 26  0  0  0",
    " 0  0 22 24  0 23  0  0 25 26  0  0",
    " 0  0  0  0  0 22 23 25 24  0 26  0",
    " 0  0  0  0  0  0  0 23 22 24 25 26",
    "32  0 34  0  0 35  0  0 36  0  0  0",
    " 0  0 32 34  0  0  0  0 35 36  0  0",
    " 0  0  0  0  0 32  0 35 34  0 36  0",
    " 0  0  0  0  0  0  0  0 32 34 35 36",
};

const std::array<Exponent, 6> family_monomials{{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}}};

std::vector<int> tokens(const char* row) {
    std::istringstream in(row);
    std::vector<int> out;
    for (int v; in >> v;) out.push_back(v);
    return out;
}

/// Tensor with a_ij = values(i, j) at the monomial positions of family_monomials.
TensorTS family_tensor(const std::array<std::array<cplx, 6>, 3>& a) {
    TensorTS t = TensorTS::zero(3, 2);
    const MonomialIndex idx(monomials(3, 2));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 6; ++j) t(i, idx.at(family_monomials[j])) = a[i][j];
    return t;
}

Eigen::MatrixXcd from_tokens(std::span<const char* const> rows, const std::array<std::array<cplx, 6>, 3>& a) {
    const auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        const auto t = tokens(rows[static_cast<std::size_t>(r)]);
        for (Eigen::Index c = 0; c < n; ++c) {
            const int v = t[static_cast<std::size_t>(c)];
            if (v != 0) m(r, c) = a[static_cast<std::size_t>(v / 10 - 1)][static_cast<std::size_t>(v % 10 - 1)];
        }
    }
    return m;
}

Exponent mul(const Exponent& a, const Exponent& b) {
    Exponent r = a;
    for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
    return r;
}

EigenMultiset dense_eigenvalues(const Eigen::MatrixXcd& m) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
    return {std::vector<cplx>(solver.eigenvalues().data(), solver.eigenvalues().data() + m.rows())};
}

}  // namespace

TEST(Sylvester, DegreeTwoLayout) {
    const std::vector<cplx> a{1, 2, 3};
    const std::vector<cplx> b{4, 5, 6};
    Eigen::MatrixXcd expected(4, 4);
    expected << 1, 2, 3, 0, 0, 1, 2, 3, 4, 5, 6, 0, 0, 4, 5, 6;
    EXPECT_EQ(sylvester_matrix(a, b).entries, expected);
}

TEST(Sylvester, UnequalDegrees) {
    const auto s = sylvester_matrix(std::vector<cplx>{1, 2}, std::vector<cplx>{3, 4, 5});
    Eigen::MatrixXcd expected(3, 3);
    expected << 1, 2, 0, 0, 1, 2, 3, 4, 5;
    EXPECT_EQ(s.entries, expected);
    EXPECT_EQ(s.p, 1);
    EXPECT_EQ(s.q, 2);
}

TEST(Sylvester, CoprimeLinearForms) {
    const auto s = sylvester_matrix(std::vector<cplx>{1, 0}, std::vector<cplx>{0, 1});
    EXPECT_NEAR(std::abs(s.entries.determinant()), 1.0, 1e-15);
}

TEST(Macaulay, BasisForThreeByTwo) {
    const MacaulayPair mp = macaulay_basis(3, 2);
    EXPECT_EQ(mp.d, 4);
    EXPECT_EQ(mp.w, 15u);
    std::array<int, 3> sizes{};
    for (int c : mp.partition) ++sizes[static_cast<std::size_t>(c)];
    EXPECT_EQ(sizes, (std::array<int, 3>{6, 5, 4}));
    std::vector<Exponent> nonreduced;
    for (std::size_t r : mp.non_reduced) nonreduced.push_back(mp.basis[r]);
    EXPECT_EQ(nonreduced, (std::vector<Exponent>{{2, 2, 0}, {2, 0, 2}, {0, 2, 2}}));
}

TEST(Macaulay, BasisSizes) {
    const MacaulayPair mp = macaulay_basis(3, 3);
    EXPECT_EQ(mp.d, 7);
    EXPECT_EQ(mp.w, 36u);
    for (int n = 2; n <= 4; ++n) {
        for (int m = 1; m <= 4; ++m) {
            const MacaulayPair b = macaulay_basis(n, m);
            std::size_t reduced = 0;
            for (bool r : b.reduced) reduced += r ? 1 : 0;
            EXPECT_EQ(b.w, binomial(n * m - n + 1 + n - 1, n * m - n + 1));
            EXPECT_EQ(reduced + b.non_reduced.size(), b.w);
            // The reduced monomials index a square block of size n m^(n-1).
            EXPECT_EQ(reduced, eigenvalue_count(n, m)) << n << " " << m;
        }
    }
}

TEST(Macaulay, LambdaStructureIsIdentity) {
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= (n <= 3 ? 5 : 3); ++m) EXPECT_TRUE(lambda_structure_is_identity(macaulay_basis(n, m))) << n << m;
}

TEST(Macaulay, MatchesReferenceMatrix) {
    std::array<std::array<cplx, 6>, 3> a{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 6; ++j) a[i][j] = cplx(10.0 * static_cast<double>(i + 1) + static_cast<double>(j + 1), 0.5);
    const MacaulayPair mp = macaulay_matrices(family_tensor(a));
    const MonomialIndex idx(mp.basis);

    const std::array<std::vector<std::size_t>, 3> row_monomials{{{0, 1, 2, 3, 4, 5}, {1, 3, 2, 4, 5}, {1, 3, 4, 5}}};
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < 3; ++i) {
        Exponent lead{0, 0, 0};
        lead[i] = 2;
        for (std::size_t g : row_monomials[i]) rows.push_back(idx.at(mul(lead, family_monomials[g])));
    }
    const std::vector<Exponent> col_monomials{{4, 0, 0}, {3, 1, 0}, {2, 2, 0}, {3, 0, 1}, {2, 1, 1},
                                              {2, 0, 2}, {1, 3, 0}, {1, 2, 1}, {0, 4, 0}, {0, 3, 1},
                                              {0, 2, 2}, {1, 1, 2}, {1, 0, 3}, {0, 1, 3}, {0, 0, 4}};
    const Eigen::MatrixXcd expected = from_tokens(reference_m, a);
    for (Eigen::Index r = 0; r < 15; ++r)
        for (Eigen::Index c = 0; c < 15; ++c)
            EXPECT_EQ(mp.R0(static_cast<Eigen::Index>(rows[static_cast<std::size_t>(r)]),
                            static_cast<Eigen::Index>(idx.at(col_monomials[static_cast<std::size_t>(c)]))),
                      expected(r, c))
                << "row " << r << " col " << c;
}

TEST(Macaulay, ReducedFamilyCharpolyMatchesReferenceMatrix) {
    Rng rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        std::array<std::array<cplx, 6>, 3> a{};
        for (auto& row : a)
            for (cplx& v : row) v = rng.complex_unit_square();
        a[1][0] = a[2][0] = a[0][2] = a[2][2] = 0.0;
        const UniPoly chi = charpoly(family_tensor(a));
        const UniPoly ref = poly_from_roots(dense_eigenvalues(from_tokens(reference_m_reduced, a)));
        EXPECT_LT(coefficient_distance(chi, ref), 1e-10);
    }
}

TEST(Macaulay, IdentityTensorGivesIdentity) {
    for (auto [n, m] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{3, 3}, std::pair{4, 2}}) {
        const MacaulayPair mp = macaulay_matrices(TensorTS::identity(n, m));
        EXPECT_EQ(mp.R0, Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(mp.w), static_cast<Eigen::Index>(mp.w)));
    }
}

TEST(Macaulay, RowSumsAtAllOnes) {
    Rng rng(6);
    for (auto [n, m] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{3, 3}, std::pair{4, 2}}) {
        const TensorTS t = random_tensor(n, m, rng.next_u64());
        const MacaulayPair mp = macaulay_matrices(t);
        const Eigen::VectorXcd sums = mp.R0 * Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(mp.w));
        const auto f = teig::apply(t, std::vector<cplx>(static_cast<std::size_t>(n), cplx{1.0}));
        for (std::size_t r = 0; r < mp.w; ++r)
            EXPECT_LT(std::abs(sums(static_cast<Eigen::Index>(r)) - f[static_cast<std::size_t>(mp.partition[r])]), 1e-13);
    }
}

TEST(Macaulay, BinaryCaseIsSylvester) {
    Rng rng(12);
    for (int m = 1; m <= 6; ++m) {
        const TensorTS t = random_tensor(2, m, rng.next_u64());
        const auto [a, b] = to_n2_params(t);
        EXPECT_EQ(macaulay_matrices(t).R0, sylvester_matrix(a, b).entries) << m;
        EXPECT_TRUE(macaulay_matrices(t).non_reduced.empty());
    }
}

TEST(Charpoly, IdentityTensor) {
    const UniPoly chi = charpoly(TensorTS::identity(3, 2));
    EXPECT_EQ(chi.degree(), 12);
    EXPECT_LT(coefficient_distance(chi, power_of_linear(1.0, 12)), 1e-10);
    const auto c = coefficient_map(TensorTS::identity(3, 2));
    ASSERT_EQ(c.size(), 12u);
    EXPECT_NEAR(c[0].real(), -12.0, 1e-10);
}

TEST(Charpoly, DiagonalBinary) {
    const UniPoly chi = charpoly(make_tensor_ts(2, 2, {{2, 0, 0}, {0, 0, 5}}));
    EXPECT_LT(coefficient_distance(chi, poly_from_roots({{2.0, 2.0, 5.0, 5.0}})), 1e-12);
}

TEST(Charpoly, TraceCoefficientForBinary) {
    TensorTS t = TensorTS::zero(2, 3);
    t(0, 0) = 1.0;
    t(1, 3) = 2.0;
    EXPECT_NEAR(std::abs(charpoly(t)[5] - cplx(-9.0)), 0.0, 1e-12);
}

TEST(Charpoly, ZeroTensor) {
    for (auto [n, m] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{3, 3}}) {
        const auto c = coefficient_map(TensorTS::zero(n, m));
        ASSERT_EQ(c.size(), eigenvalue_count(n, m));
        for (const cplx& v : c) EXPECT_EQ(v, cplx(0.0));
    }
}

TEST(Charpoly, ScalarAndMatrixCases) {
    const TensorTS s = make_tensor_ts(1, 4, {{cplx{0.3, -2.0}}});
    const UniPoly c = charpoly(s);
    ASSERT_EQ(c.degree(), 1);
    EXPECT_LT(std::abs(c[0] - cplx(-0.3, 2.0)), 1e-14);
    EXPECT_EQ(c.leading(), cplx(1.0));
    Rng rng(2);
    for (int n = 2; n <= 6; ++n) {
        const TensorTS t = random_tensor(n, 1, rng.next_u64());
        Eigen::MatrixXcd a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = t(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        EXPECT_LT(coefficient_distance(charpoly(t), poly_from_roots(dense_eigenvalues(a))), 1e-12);
    }
}

TEST(Charpoly, FirstCoefficientAtFamilyPoint) {
    const PaperPoint p = paper_point("p32");
    const auto c = coefficient_map(p.tensor);
    EXPECT_NEAR(std::abs(c[0] - cplx(-88.0)), 0.0, 1e-8);
}

TEST(Charpoly, DegreeForRandomTensors) {
    Rng rng(50);
    for (auto [n, m] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 2}, std::pair{3, 3}, std::pair{4, 2}}) {
        for (int k = 0; k < 50; ++k) {
            const UniPoly chi = charpoly(random_tensor(n, m, rng.next_u64()));
            ASSERT_EQ(chi.degree(), static_cast<int>(eigenvalue_count(n, m))) << n << " " << m;
            EXPECT_EQ(chi.leading(), cplx(1.0));
        }
    }
}

TEST(Charpoly, BinaryMatchesDenseEigensolver) {
    Rng rng(77);
    for (int m = 1; m <= 5; ++m) {
        for (int k = 0; k < 10; ++k) {
            const TensorTS t = random_tensor(2, m, rng.next_u64());
            const auto mr = match_multisets(eigenvalues(t), sylvester_eigenvalues(t), 1e-7);
            EXPECT_TRUE(mr.matched) << "m " << m << " distance " << mr.max_distance;
        }
    }
}

TEST(Charpoly, EigenvaluesMakeMacaulayMatrixSingular) {
    Rng rng(41);
    for (auto [n, m] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{3, 3}}) {
        for (int k = 0; k < 3; ++k) {
            const TensorTS t = random_tensor(n, m, rng.next_u64());
            const MacaulayPair mp = macaulay_matrices(t);
            const auto id = Eigen::MatrixXcd::Identity(mp.R0.rows(), mp.R0.cols());
            for (const cplx& lambda : eigenvalues(t).values) {
                Eigen::JacobiSVD<Eigen::MatrixXcd> svd(mp.R0 - lambda * id);
                const auto& s = svd.singularValues();
                EXPECT_LT(s(s.size() - 1), 1e-6 * s(0)) << n << " " << m << " " << lambda;
            }
        }
    }
}

TEST(Charpoly, ConjugationEquivariance) {
    Rng rng(3);
    for (auto [n, m] : {std::pair{2, 4}, std::pair{3, 2}, std::pair{3, 3}}) {
        const TensorTS t = random_tensor(n, m, rng.next_u64());
        EXPECT_LT(coefficient_distance(charpoly(t.conj()), charpoly(t).conj()), 1e-9);
    }
}

TEST(Charpoly, CoefficientsAreHomogeneous) {
    const TensorTS t = random_tensor(3, 2, 1);
    const cplx s(0.7, -1.3);
    const UniPoly a = charpoly(t);
    const UniPoly b = charpoly(s * t);
    const int N = 12;
    for (int k = 0; k < N; ++k) {
        const cplx expected = std::pow(s, N - k) * a[static_cast<std::size_t>(k)];
        EXPECT_LT(std::abs(b[static_cast<std::size_t>(k)] - expected), 1e-9 * (1.0 + std::abs(expected))) << k;
    }
}

TEST(Charpoly, MatrixCharpolyMatchesEigenvalues) {
    Rng rng(19);
    for (int n : {1, 3, 8, 20}) {
        Eigen::MatrixXcd a(n, n);
        for (auto& c : a.reshaped()) c = rng.complex_unit_square();
        EXPECT_LT(coefficient_distance(matrix_charpoly(a), poly_from_roots(dense_eigenvalues(a))), 1e-11) << n;
    }
}

TEST(Charpoly, ErrorEstimatesAreSmall) {
    const CharpolyReport r = charpoly_report(random_tensor(3, 3, 4));
    ASSERT_EQ(r.errors.size(), 28u);
    double scale = 0.0;
    for (const cplx& c : r.poly.coeffs()) scale = std::max(scale, std::abs(c));
    for (double e : r.errors) EXPECT_LT(e, 1e-10 * scale);
}

TEST(Charpoly, SmallBlocksWithRepeatedSpectra) {
    BlockSpec spec;
    spec.blocks = {make_tensor_ts(2, 2, {{1, 0, 0}, {0, 0, 2}}), make_tensor_ts(2, 2, {{3, 0, 0}, {0, 0, 4}})};
    const UniPoly chi = charpoly(block_diagonal(spec));
    const UniPoly ref = power_of_linear(1.0, 8) * power_of_linear(2.0, 8) * power_of_linear(3.0, 8) * power_of_linear(4.0, 8);
    EXPECT_LT(coefficient_distance(chi, ref), 1e-6);
}
