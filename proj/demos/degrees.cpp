// Degrees of LPB(d, n) for small n and d, computed from the Segre class of
// E_d on G(3, n+1), plus the n = 3 closed form recovered by interpolation.
#include "lpb/lpb.hpp"

#include <iostream>

int main()
{
    for (int n = 3; n <= 5; ++n) {
        const lpb::GrassContext ctx = lpb::GrassContext::for_projections(n);
        std::cout << "G(3," << n + 1 << "): dim " << ctx.dimension() << ", Plucker degree "
                  << lpb::plucker_degree(ctx) << "\n";
        for (int d = 2; d <= 5; ++d) {
            const auto inv = lpb::lpb_invariants(d, n);
            std::cout << "  d=" << d << "  dim " << inv.dim_lpb << "  degree " << lpb::degree_lpb(d, n) << "\n";
        }
    }
    std::cout << "deg LPB(d,3) = " << lpb::closed_form(3).to_string() << "\n";
}
