// Minimal tour: evaluate a named polynomial at roots of unity, count
// fixed points directly, and run one registry verification.

#include "cspkit/csp.hpp"

#include <iostream>

using namespace cspkit;

int main() {
    // the ear-refined triangulation polynomial at (8, 3)
    IntPoly f = tri_ear_q(8, 3);
    std::cout << "Tri_q(8,3) = " << f.to_string() << "\n";
    std::cout << "f(1) = " << f.eval_at_one().str()
              << ", |TRI_ear(8,3)| = " << cardinality({FamilyId::TRI_EAR, {.n = 8, .k = 3}}).str()
              << "\n\n";

    // fixed points of each rotation power against the evaluations
    FamilySpec spec{FamilyId::TRI_EAR, {.n = 8, .k = 3}};
    ActionSpec rot{ActionId::ROT, 8};
    for (long d = 1; d <= 8; ++d) {
        if (8 % d != 0) continue;
        auto v = eval_at_root(f, 8, d);
        std::cout << "d=" << d << ": fixed=" << count_fixed(spec, rot, d).str() << " eval="
                  << (v.integral ? v.value.str() : std::string("non-integral")) << "\n";
    }

    // the same check through the registry
    auto rep = verify_triple(triple_by_id("T2"), {.n = 8, .k = 3});
    std::cout << "\nT2 at (8,3): " << (rep.pass ? "pass" : "FAIL") << "\n";

    // orbit structure under the twist action
    auto profile = orbit_profile({ActionId::TWIST, 8}, {FamilyId::NCC, {.n = 5}});
    std::cout << "twist orbits on the size-5 configuration family:";
    for (long s : profile) std::cout << " " << s;
    std::cout << "\n";
    return 0;
}
