#ifndef STRATACONES_BOUNDARY_HPP
#define STRATACONES_BOUNDARY_HPP

#include <array>
#include <compare>
#include <vector>

#include "stratacones/labels.hpp"
#include "stratacones/perm.hpp"

namespace strata {

// Boundary divisor class D_I = D_{I^c}. Canonical representative: the side
// containing label 1 (total and complement-stable, unlike size-based rules).
struct DivisorClass {
    LabelSet rep;

    static DivisorClass of_side(LabelSet side);

    [[nodiscard]] LabelSet other_side() const { return rep.complement(kAllSeven); }
    [[nodiscard]] LabelSet side_with(int label) const {
        return rep.contains(label) ? rep : other_side();
    }

    friend bool operator==(DivisorClass a, DivisorClass b) { return a.rep == b.rep; }
    friend auto operator<=>(DivisorClass a, DivisorClass b) { return a.rep <=> b.rep; }
};

[[nodiscard]] bool star(DivisorClass a, DivisorClass b);

// The 56 divisor classes, ascending by representative mask.
[[nodiscard]] const std::vector<DivisorClass>& enumerate_divisors();

// Boundary 2-stratum s_{I,J,K}: a 2-nodal degeneration with markings split
// I | J | K, 2 <= |I|,|K| <= 4 and 1 <= |J| <= 3. (I,J,K) and (K,J,I) name
// the same stratum; the canonical orientation has I.m < K.m.
struct Stratum {
    LabelSet I, J, K;

    static Stratum make(LabelSet i, LabelSet j, LabelSet k);

    // Builds the stratum with the two given disjoint partition sides;
    // the middle part is whatever remains.
    static Stratum from_sides(LabelSet side1, LabelSet side2);

    [[nodiscard]] DivisorClass div_i() const { return DivisorClass::of_side(I); }
    [[nodiscard]] DivisorClass div_k() const { return DivisorClass::of_side(K); }

    // Orientation with |I| <= |K| (ties keep mask order), used by statements
    // phrased in terms of sizes.
    [[nodiscard]] Stratum size_normalized() const;
    [[nodiscard]] std::array<int, 3> type() const;

    friend bool operator==(const Stratum& a, const Stratum& b) {
        return a.I == b.I && a.K == b.K;
    }
    friend auto operator<=>(const Stratum& a, const Stratum& b) {
        if (auto c = a.I <=> b.I; c != 0) return c;
        return a.K <=> b.K;
    }
};

// The 490 strata sorted by (I.m, K.m).
[[nodiscard]] const std::vector<Stratum>& enumerate_strata();
[[nodiscard]] int stratum_index(const Stratum& s);

[[nodiscard]] DivisorClass act(const Perm& p, DivisorClass d);
[[nodiscard]] Stratum act(const Perm& p, const Stratum& s);

} // namespace strata

#endif
