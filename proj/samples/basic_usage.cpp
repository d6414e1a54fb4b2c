// Counts a few damaged hexagons three ways and prints one tiling as SVG.

#include "hexatile/formulas.hpp"
#include "hexatile/identities.hpp"
#include "hexatile/lgv.hpp"
#include "hexatile/oracle.hpp"
#include "hexatile/qfit.hpp"
#include "hexatile/render.hpp"
#include "hexatile/schur.hpp"

#include <fstream>
#include <iostream>

using namespace hexatile;

int main()
{
    // the (4,5,3)-hexagon with an even intrusion of length 2 at position 4
    const HexSpec spec = even_spec(4, 5, 3, 2, 4);
    std::cout << spec.describe() << "\n"
              << "  determinant   " << count(spec).value << "\n"
              << "  condensation  " << even_count_by_condensation(4, 5, 3, 2, 4) << "\n"
              << "  det F * M     " << count_via_F(4, 5, 3, 2, 4) << "\n";

    // odd intrusions may give a negative determinant
    const SignedCount odd = odd_count(4, 5, 3, 3, 3);
    std::cout << odd_spec(4, 5, 3, 3, 3).describe() << "  det " << odd.value << ", tilings " << odd.tilings << "\n";

    std::cout << "byun_even(1,2,2,1) = " << byun_even(1, 2, 2, 1) << "\n";
    std::cout << "Q for d=2: " << q_known_poly(2).to_string() << "\n";

    const HexSpec small = even_spec(2, 2, 2, 1, 1);
    if (auto family = first_tiling(small)) {
        std::ofstream("basic_usage.svg") << render_svg(small, family);
        std::cout << "wrote basic_usage.svg\n";
    }
}
