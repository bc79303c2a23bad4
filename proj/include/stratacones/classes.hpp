#ifndef STRATACONES_CLASSES_HPP
#define STRATACONES_CLASSES_HPP

#include <map>
#include <optional>
#include <vector>

#include "stratacones/boundary.hpp"
#include "stratacones/intersect.hpp"
#include "stratacones/perm.hpp"
#include "stratacones/rational.hpp"

namespace strata {

// Numerical equivalence class of a 2-cycle, recorded as its intersection
// numbers against the 420 canonical class representatives. The pairing is
// nondegenerate on the span of the strata, so coords determine the class;
// origin keeps the formal stratum sum the class was built from, when known.
struct CycleClass {
    std::vector<long> coords; // length 420, coords[i] = pairing with rep i
    std::optional<std::map<Stratum, long>> origin;

    bool operator==(const CycleClass& o) const { return coords == o.coords; }
    bool operator!=(const CycleClass& o) const { return coords != o.coords; }
    bool is_zero() const;
};

// True iff s and t are numerically equivalent. Combinatorial form: equal, or
// both of type (2,1,4) in the size-normalized orientation with the same
// 3-element side I union J (equivalently the same 4-element side K).
bool classes_equal_criterion(const Stratum& s, const Stratum& t);

// One representative per equivalence class (420 entries), each the smallest
// canonical stratum of its class, listed in enumeration order. This list
// indexes CycleClass::coords.
const std::vector<Stratum>& enumerate_class_reps();

// Index into enumerate_class_reps() of the class containing s.
int class_index(const Stratum& s);

CycleClass stratum_class(const Stratum& s);

CycleClass combination_class(const std::map<Stratum, long>& terms);

// Exact ratio r with u = r * v, or nullopt when not proportional.
// r = 0 exactly when u = 0.
std::optional<Rat> proportional(const CycleClass& u, const CycleClass& v);

// Induced action on class vectors: (g * v)[r] = v[class of g^{-1}(rep_r)].
CycleClass act(const Perm& g, const CycleClass& v);

// Index permutation of the class action: p[r] = class_index(g(rep_r)).
// act(g, v)[p[r]] = v[r], and covectors transport by f'[p[r]] = f[r].
std::vector<int> class_permutation(const Perm& g);

} // namespace strata

#endif // STRATACONES_CLASSES_HPP
