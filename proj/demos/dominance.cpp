// Jacobian rank of the coefficient map for small (n, m).

#include <cstdio>

#include "teig/teig.hpp"

using namespace teig;

int main() {
    for (auto [n, m] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{3, 3}, std::pair{3, 4}}) {
        const Classification c = classify(n, m);
        CertifyOptions opt;
        opt.force = true;
        const CertificationReport rep = certify_dominance(n, m, 1, 11, opt);
        std::printf("(%d,%d) %s: %s, target rank %zu\n", n, m, c.reason.c_str(), rep.status.c_str(), rep.target_rank);
        for (const auto& p : rep.points)
            std::printf("  %-9s %3zux%-3zu rank %3zu  gap %.2e\n", p.label.c_str(), p.rows, p.cols, p.rank, p.gap_ratio);
    }
}
