#ifndef STRATACONES_FIXTURES_HPP
#define STRATACONES_FIXTURES_HPP

#include <string>
#include <utility>
#include <vector>

#include "stratacones/perm.hpp"
#include "stratacones/plane.hpp"

namespace strata {

// Built-in point configurations:
//   gamma0  six pairwise intersection points of four general lines (char 0),
//           labeled so the collinear triples are {145},{136},{235},{246};
//   h1..h3  gamma0 plus one of the three diagonal intersection points;
//   fano    the seven points of the projective plane over F_2.
// The env var STRATA_CONES_FIXTURES names a directory whose <name>.json
// files override the built-ins.
std::vector<std::string> fixture_names();
std::pair<Field, std::vector<PlanePoint>> fixture_points(const std::string& name);
PointConfig fixture_config(const std::string& name); // 7-point fixtures only

// The unique irreducible hypertree on {1..6} in the gamma0 labeling.
Hypertree gamma0_hypertree();

struct ClassifyResult {
    long orbit_size = 0;
    long stabilizer_order = 0;
    std::vector<Perm> stabilizer;
};

// S7-orbit of the seed special-hypertree-surface class for the given
// characteristic (0 or 2). Verifies internally that the three char-0 seeds
// are related by the expected permutations and that the known stabilizer
// subgroups fix the class; throws std::logic_error if any check fails.
ClassifyResult classify_special_surfaces(int characteristic);

} // namespace strata

#endif // STRATACONES_FIXTURES_HPP
