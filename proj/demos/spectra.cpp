// Eigenvalues of a few structured tensors, computed two ways.

#include <cstdio>

#include "teig/teig.hpp"

using namespace teig;

namespace {

void print(const char* title, const EigenMultiset& s) {
    std::printf("%s\n", title);
    for (const cplx& v : s.values) std::printf("  % .6f %+.6fi\n", v.real(), v.imag());
}

}  // namespace

int main() {
    const BinaryForm f({1.0, 0.0, -2.0, 0.5});
    print("symmetric tensor of x^3 - 2xy^2 + 0.5y^3, from the form:", sym_eigenvalues(f));
    EigenMultiset t = eigenvalues(sym_to_tensor(f));
    for (cplx& v : t.values) v *= 3.0;
    print("same, from the resultant (scaled by m+1):", t);

    const BinaryForm g({1.0, cplx{0.0, 1.0}});
    print("wedge tensor of x + iy, closed form:", wedge_eigenvalues(g));
    print("same, from the resultant:", eigenvalues(wedge_to_tensor(g)));

    const TensorTS r = random_tensor(3, 2, 7);
    const CharpolyReport rep = charpoly_report(r);
    std::printf("random (3,2) tensor: charpoly degree %d\n", rep.poly.degree());
    print("eigenvalues:", roots(rep.poly));
}
