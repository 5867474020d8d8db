// Walks one kernel element through the calculus: harmonic factors, the
// tensor, the image of a few monomials under the truncated map and the
// resulting rank profile.

#include <iostream>

#include "mtc/series.hpp"
#include "mtc/wendl.hpp"

using namespace mtc;

int main() {
    std::cout << "harmonic bases:\n";
    for (int d = 0; d <= 3; ++d) {
        std::cout << "  degree " << d << ":";
        for (auto& h : harmonic_basis(d)) std::cout << "  " << h.str();
        std::cout << "\n";
    }

    auto basis = petri_kernel_basis(2);
    std::cout << "\ndegree-2 Petri kernel has dimension " << basis.size() << "\n";
    const auto& b = basis[1];
    std::cout << "working element B = " << b.tensor.str() << "\n";
    std::cout << "petri_map(B) = " << petri_map(b.tensor).str() << "\n\n";

    for (auto a : {Monomial2{0, 0}, Monomial2{1, 0}, Monomial2{0, 1}})
        std::cout << "L_B(" << to_string(a) << ") = " << wendl_apply(b.tensor, a).str() << "\n";

    std::cout << "\nrank profile of the truncation:\n";
    auto profile = wendl_rank_profile(b.tensor, 12);
    for (int l = 0; l <= 12; ++l)
        std::cout << "  l = " << l << ": rank " << profile[static_cast<std::size_t>(l)] << " of "
                  << (l + 1) * (l + 2) / 2 << " columns (bound " << (l + 1) / 2 << ")\n";

    auto selectors = nonzero_series_selectors(b);
    std::cout << "\nnonzero coefficient series selectors:";
    for (auto [alpha, beta] : selectors) std::cout << " (" << alpha << "," << beta << ")";
    std::cout << "\n";
    if (!selectors.empty()) {
        auto s = coefficient_series(b, selectors[0].first, selectors[0].second);
        std::cout << "series values at m = 0..4:";
        for (long long m = 0; m <= 4; ++m) std::cout << "  " << to_string(s.evaluate(m));
        std::cout << "\n";
    }
    return 0;
}
