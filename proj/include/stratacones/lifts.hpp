#ifndef STRATACONES_LIFTS_HPP
#define STRATACONES_LIFTS_HPP

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "stratacones/boundary.hpp"
#include "stratacones/classes.hpp"
#include "stratacones/labels.hpp"

namespace strata {

// Boundary divisor class on a 6-pointed space whose marking labels form a
// 6-element subset of {1..7}. Canonical side: the one containing the
// smallest ground label.
struct SixLabelDivisor {
    LabelSet ground;
    LabelSet rep;

    static SixLabelDivisor of_side(LabelSet ground, LabelSet side);
    LabelSet other_side() const { return ground - rep; }

    bool operator==(const SixLabelDivisor& o) const = default;
    auto operator<=>(const SixLabelDivisor& o) const = default;
};

// Keel-Vermeire divisor on a 6-label ground set. The divisor depends only on
// the perfect matching {{m,q},{i,j},{k,l}}; the stored presentation is the
// lexicographically least (m,q,i,j) among the identifications
// d^KV_{mq,ij} = d^KV_{ij,mq} = d^KV_{qm,ij} = d^KV_{mq,ji} = d^KV_{mq,kl}.
struct KVDivisor {
    LabelSet ground;
    int m = 0, q = 0, i = 0, j = 0;

    static KVDivisor of_matching(LabelSet ground, int m, int q, int i, int j);
    // The matching pair containing label x: returns x's partner.
    int partner(int x) const;
    // The two leftover labels {k,l} of the stored presentation, k < l.
    std::pair<int, int> kl() const;

    bool operator==(const KVDivisor& o) const = default;
    auto operator<=>(const KVDivisor& o) const = default;
};

std::vector<KVDivisor> enumerate_kv(LabelSet ground);

// Formal six-term expansion of the presentation (m,q,i,j):
//   d_im + d_jm + d_kq + d_lq + 2 d_ijm - d_mq.
// Different presentations of the same KV divisor give different formal sums
// (equal only up to rational equivalence), so the presentation is explicit.
std::map<SixLabelDivisor, long> kv_expansion(LabelSet ground, int m, int q, int i, int j);
std::map<SixLabelDivisor, long> kv_expansion(const KVDivisor& kv);

// Lift of a boundary divisor on the 6-pointed space along the boundary
// divisor D_ab, attaching a rational tail with labels {x,a,b} at the slot
// x = min(a,b). Ground set of S must be ([7] minus {a,b}) union {x}.
Stratum lift_divisor(const SixLabelDivisor& S, int a, int b);

// One Keel-Vermeire lift: the divisor kv on the 6-label space inside D_ab,
// written in the presentation whose q-slot is the attaching label
// x = min(a,b). m is x's matching partner; {i,j} is the matching pair
// containing the smallest of the four remaining labels.
struct KVLift {
    int a = 0, b = 0;
    KVDivisor kv;
    int m = 0, i = 0, j = 0;
};

// All 315 = 21 x 15 lifts, ordered by (a,b) then by canonical KV divisor.
const std::vector<KVLift>& enumerate_kv_lifts();

// The six-term stratum sum
//   s_{im,jkl,ab} + s_{jm,ikl,ab} + s_{ijlm,k,ab} + s_{ijkm,l,ab}
//   + 2 s_{ijm,kl,ab} - s_{ijkl,m,ab}.
std::map<Stratum, long> kv_lift_terms(const KVLift& lift);

CycleClass kv_lift(const KVLift& lift);
CycleClass kv_lift(int a, int b, const KVDivisor& kv);

// Forgetful pushforward of a 2-stratum along the map dropping label y:
// nonzero iff forgetting y contracts a component of the generic fiber curve.
std::optional<SixLabelDivisor> pushforward_stratum(int y, const Stratum& s);

// Linear extension to formal sums; zero terms drop, coefficients cancel.
std::map<SixLabelDivisor, long> pushforward_combination(int y, const std::map<Stratum, long>& terms);

} // namespace strata

#endif // STRATACONES_LIFTS_HPP
