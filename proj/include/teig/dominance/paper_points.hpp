#pragma once

#include <array>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "teig/core/monomial.hpp"
#include "teig/core/tensor.hpp"
#include "teig/error.hpp"

namespace teig {

/// A fixed evaluation point used by the dominance checks.
struct PaperPoint {
    std::string label;
    TensorTS tensor;
    /// (slice, entry) coordinates held at zero; only the p32 family restricts.
    std::vector<std::pair<std::size_t, std::size_t>> restriction;
    /// Coordinates varied by the Jacobian, in column order.
    std::vector<std::pair<std::size_t, std::size_t>> free_coordinates;
    /// Remarks on entries with more than one plausible value.
    std::string note;
};

namespace detail {

struct PointListing {
    std::string_view label;
    int n;
    int m;
    std::string_view entries;
    std::string_view note;
};

// Symmetric entries t_{i i_1..i_m}: first digit is the slice, the rest an index word.
inline constexpr std::array<PointListing, 4> symmetric_listings{{
    {"p33", 3, 3,
     "1111=1 1112=-1/3 1122=2/3 1222=-2 1113=1 1123=-1/2 1223=4/3 1133=-4/3 1233=5/3 1333=-5 "
     "2111=6 2112=-2 2122=7/3 2222=-7 2113=8/3 2123=-4/3 2223=3 2133=-3 2233=1/3 2333=2 "
     "3111=3 3112=4/3 3122=5/3 3222=6 3113=0 3123=-1/6 3223=-2/3 3133=-1 3233=-4/3 3333=-5",
     "t3333 taken as -5"},
    {"p42", 4, 2,
     "111=1 112=-1/2 122=2 113=-1 123=3/2 133=-3 114=2 124=-2 134=5/2 144=-5 "
     "211=6 212=-3 222=7 213=-7/2 223=4 233=-8 214=9/2 224=-9/2 234=1/2 244=2 "
     "311=3 312=2 322=5 313=3 323=0 333=-1 314=-1 324=-3/2 334=-2 344=-5 "
     "411=1 412=1 422=3/2 413=2 423=5/2 433=6 414=7/2 424=4 434=9/2 444=10",
     "t344 taken as -5"},
    {"p34a", 3, 4,
     "11111=0 11112=3/4 11122=5/6 11222=1/4 12222=0 11113=-5/4 11123=-1/6 11223=-1/6 12223=5/4 "
     "11133=-1/2 11233=-1/3 12233=-1/6 11333=-1 12333=1/2 13333=4 "
     "21111=3 21112=5/4 21122=-1/2 21222=1 22222=-2 21113=1 21123=1/6 21223=-5/12 22223=-1 "
     "21133=-1/6 21233=0 22233=-1/3 21333=1 22333=-5/4 23333=-1 "
     "31111=-3 31112=-5/4 31122=-1/3 31222=-1/2 32222=0 31113=3/4 31123=1/6 31223=1/3 32223=2/3 "
     "31133=-2/3 31233=-1/6 32233=1/3 31333=1 32333=-1 33333=0",
     ""},
    {"p34b", 3, 4,
     "11111=7 11112=-3/2 11122=-4/3 11222=-9/4 12222=8 11113=7/4 11123=3/4 11223=7/12 12223=-7/6 "
     "11133=5/6 11233=-1/12 12233=5/6 11333=1 12333=9/4 13333=0 "
     "21111=10 21112=-1 21122=0 21222=5/4 22222=-1 21113=7/4 21123=7/12 21223=0 22223=-7/6 "
     "21133=-7/6 21233=-1/4 22233=5/6 21333=-5/2 22333=1 23333=6 "
     "31111=8 31112=-3/2 31122=-1/3 31222=-5/4 32222=4 31113=9/4 31123=3/4 31223=-1/3 32223=-4/3 "
     "31133=1/6 31233=5/6 32233=-1 31333=3/2 32333=5/2 33333=6",
     ""},
}};

inline double parse_fraction(std::string_view s) {
    const auto slash = s.find('/');
    const std::string num(s.substr(0, slash));
    double v = std::strtod(num.c_str(), nullptr);
    if (slash != std::string_view::npos) v /= std::strtod(std::string(s.substr(slash + 1)).c_str(), nullptr);
    return v;
}

/// Builds the slice coefficients: coefficient of x^alpha = multinomial(alpha) * t.
inline TensorTS tensor_from_listing(const PointListing& p) {
    TensorTS t = TensorTS::zero(p.n, p.m);
    const MonomialIndex index(monomials(p.n, p.m));
    std::istringstream in{std::string(p.entries)};
    std::string tok;
    while (in >> tok) {
        const auto eq = tok.find('=');
        const std::string key = tok.substr(0, eq);
        const double value = parse_fraction(std::string_view(tok).substr(eq + 1));
        Exponent alpha(static_cast<std::size_t>(p.n), 0);
        for (std::size_t k = 1; k < key.size(); ++k) ++alpha[static_cast<std::size_t>(key[k] - '1')];
        const auto slice = static_cast<std::size_t>(key[0] - '1');
        t(slice, index.at(alpha)) = static_cast<double>(multinomial(alpha)) * value;
    }
    return t;
}

/// Slice entry of the monomial a_{ij} in the (3,2) family, where j = 1..6 runs over
/// x1^2, x1x2, x2^2, x1x3, x2x3, x3^2.
inline std::size_t family32_entry(int j) {
    static constexpr std::array<std::size_t, 6> map{0, 1, 3, 2, 4, 5};
    return map.at(static_cast<std::size_t>(j - 1));
}

}  // namespace detail

inline std::vector<std::string> paper_point_labels() { return {"p32", "p33", "p42", "p34a", "p34b"}; }

inline PaperPoint paper_point(const std::string& label) {
    if (label == "p32") {
        PaperPoint p{label, TensorTS::zero(3, 2), {}, {}, "restricted family a21 = a31 = a13 = a33 = 0"};
        struct A {
            int i, j, v;
        };
        static constexpr std::array<A, 14> values{{{1, 1, 1}, {1, 2, 2}, {1, 4, 3}, {1, 5, 4}, {1, 6, 5},
                                                   {2, 2, 6}, {2, 3, 7}, {2, 4, 8}, {2, 5, 9}, {2, 6, 10},
                                                   {3, 2, 11}, {3, 4, 12}, {3, 5, 13}, {3, 6, 14}}};
        for (const A& a : values) {
            const auto slice = static_cast<std::size_t>(a.i - 1);
            const std::size_t entry = detail::family32_entry(a.j);
            p.tensor(slice, entry) = a.v;
            p.free_coordinates.emplace_back(slice, entry);
        }
        for (auto [i, j] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{1, 3}, std::pair{3, 3}})
            p.restriction.emplace_back(static_cast<std::size_t>(i - 1), detail::family32_entry(j));
        return p;
    }
    for (const auto& listing : detail::symmetric_listings) {
        if (listing.label != label) continue;
        PaperPoint p{label, detail::tensor_from_listing(listing), {}, {}, std::string(listing.note)};
        for (std::size_t i = 0; i < static_cast<std::size_t>(listing.n); ++i)
            for (std::size_t j = 0; j < p.tensor.slice_length(); ++j) p.free_coordinates.emplace_back(i, j);
        return p;
    }
    throw UnknownLabel("unknown point label '" + label + "'; expected one of p32, p33, p42, p34a, p34b");
}

/// Labels of the fixed points defined for (n, m).
inline std::vector<std::string> paper_points_for(int n, int m) {
    if (n == 3 && m == 2) return {"p32"};
    if (n == 3 && m == 3) return {"p33"};
    if (n == 4 && m == 2) return {"p42"};
    if (n == 3 && m == 4) return {"p34a", "p34b"};
    return {};
}

/// Reference 12 x 14 integer Jacobian of the (3,2) family at p32: rows c_11..c_0, columns in the
/// order of PaperPoint::free_coordinates.
inline const std::array<std::array<long long, 14>, 12>& golden_jacobian_p32() {
    static constexpr std::array<std::array<long long, 14>, 12> g{{
        {-4, 0, 0, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, -4},
        {348, -12, -24, 0, 0, -4, 324, 0, -26, 0, 0, -6, -18, 296},
        {-11948, 528, 1575, -336, -420, 123, -10190, -158, 1685, -382, -223, 156, 652, -8362},
        {229449, -6573, -42450, 9606, 14460, -435, 178549, 4943, -43158, 16014, 5650, -1511, -6084, 129887},
        {-2841839, 8007, 669288, -123924, -254385, -40559, -1983021, -54113, 607211, -282327, -46378, -27079, -23151,
         -1258172},
        {24015886, 693225, -6820251, 716979, 2947131, 838271, 14685692, 150466, -5348868, 2845660, -150997, 963371,
         1047467, 7850991},
        {-141005226, -8897502, 46520475, -55500, -23636976, -7517499, -74200394, 170837, 31218785, -18669471, 5370313,
         -11890233, -11634444, -30119950},
        {577067743, 52779339, -214721160, -19191762, 128734014, 37178105, 258147039, -16953189, -122285430, 82279634,
         -38993472, 78057193, 68998306, 58177003},
        {-1615274021, -168212115, 650003046, 85305210, -443297901, -110199791, -603940123, 64320415, 313612725,
         -232274827, 133470656, -288207851, -225232919, -1425840},
        {2874026450, 286931673, -1165235823, -145117011, 852500403, 194375103, 876534196, -125125090, -487990298,
         384765126, -232073969, 569148965, 386696721, -187322475},
        {-2794768018, -259796358, 1046384496, 111968790, -778096974, -179135234, -672256468, 121312760, 392623914,
         -320537057, 201649792, -531624753, -319797178, 252532328},
        {1066887388, 96499788, -356759172, -33512052, 261090648, 64501920, 202844400, -45364410, -122396540, 101857630,
         -69231372, 183581748, 99950648, -98555702},
    }};
    return g;
}

/// The reference entry at (row 6, column 7), zero-based, is missing its last digit: it
/// reads 170837 where the exact value is 1708376.
inline constexpr std::pair<std::size_t, std::size_t> golden_jacobian_p32_misprint{6, 7};

}  // namespace teig
