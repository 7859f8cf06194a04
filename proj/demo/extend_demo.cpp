// Builds the two-seed extension alpha = 5/2, seeds I:1 and II:1, then prints
// g, its regularity certificate and the first exceptional polynomials.
#include <iostream>

#include "xlag/xlag.hpp"

int main() {
    using namespace xlag;
    const ExtensionSpec spec(Rational(5, 2), Rational(1), {1}, {1});
    const GReport r = compute_g(spec);
    const RegularityCertificate cert = certify(r);

    std::cout << spec.describe() << "\n";
    std::cout << "g(z) = " << r.g.to_string() << "\n";
    std::cout << "degree " << r.mu_predicted << ", g(0) = " << r.const_computed.to_string()
              << ", positive roots " << cert.root_count_positive_axis << "\n";

    const EOPFamily fam = solve_eop(spec, r, 3);
    for (std::size_t nu = 0; nu < fam.polys.size(); ++nu)
        std::cout << "y_" << nu << "(z) = " << fam.polys[nu].to_string() << "\n";

    const ExtendedPotential v = build_potential(spec, r);
    const auto levels = numeric_spectrum(v, 3, default_grid(v, 3));
    const auto expected = expected_levels(v, 3);
    for (std::size_t i = 0; i < levels.size(); ++i)
        std::cout << "E_" << i << ": numeric " << levels[i] << ", exact " << expected[i] << "\n";
}
