// Builds both fans of the degree-4 del Pezzo example and prints their
// certifications, then constructs a plane meeting the four special planes.

#include <iostream>

#include "toric/toric.hpp"

int main() {
    using namespace toric;
    const DelPezzo4 dp = delpezzo4();
    const GaleDual g = gale_dual(dp.degrees);

    for (const Multidegree& d : {dp.ample_class, dp.anticanonical}) {
        IrrelevantOptions opt;
        opt.check_stability = true;
        const IrrelevantResult r = irrelevant_radical(dp.degrees, d, opt);
        const Fan f = fan_from_irrelevant(g, r.ideal);
        std::cout << "degree " << to_string(d) << ": " << f.num_maximal_cones() << " maximal cones"
                  << ", simplicial " << bool(is_simplicial(f)) << ", complete " << bool(is_complete(f))
                  << ", projective " << is_projective(f).projective << "\n";
    }

    const TransversalResult t = find_transversal_plane(special_planes(), 1, 100);
    std::cout << "transversal plane after " << t.attempts << " attempt(s):\n";
    for (const IntVec& row : t.plane.integer_basis()) std::cout << "  " << to_string(row) << "\n";
}
