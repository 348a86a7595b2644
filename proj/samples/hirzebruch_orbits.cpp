// Prints the unipotent orbits of the Hirzebruch surfaces F_1, ..., F_4.
#include "uniorb/uniorb.hpp"

#include <iostream>

int main() {
    for (int d = 1; d <= 4; ++d) {
        uniorb::Analysis a = uniorb::analyze(uniorb::build(uniorb::Hirzebruch{d}));
        std::cout << "F_" << d << ": " << a.verdict.count << " orbits\n";
        for (const auto& orbit : a.orbits)
            std::cout << "  dim " << orbit.dimension << ", A = " << uniorb::to_string(orbit.basic.rays) << ", "
                      << orbit.t_orbit_cones.size() << " torus orbits\n";
    }
}
