#ifndef STRATACONES_INTERSECT_HPP
#define STRATACONES_INTERSECT_HPP

#include <map>
#include <vector>

#include "stratacones/boundary.hpp"

namespace strata {

// Formal integer combination of boundary divisor classes. Zero coefficients
// are never stored.
struct DivisorCombination {
    std::map<DivisorClass, long> terms;

    void add(DivisorClass d, long c) {
        if (c == 0) return;
        auto [it, inserted] = terms.emplace(d, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    [[nodiscard]] long coeff(DivisorClass d) const {
        auto it = terms.find(d);
        return it == terms.end() ? 0 : it->second;
    }
    [[nodiscard]] std::size_t size() const { return terms.size(); }
    friend bool operator==(const DivisorCombination& a, const DivisorCombination& b) {
        return a.terms == b.terms;
    }
};

[[nodiscard]] bool stratum_star(const Stratum& s, const Stratum& t);

// Product normal form for two distinct star-related strata: the four divisor
// classes {div_i(s), div_k(s), div_i(t), div_k(t)} rewritten so that
// I1 and I2 are disjoint set representatives with |I1| <= |I2|, and a
// coinciding class pair (there is at most one) sits at positions 3,4.
struct NormalForm {
    LabelSet I1, I2, I3, I4;
    bool repeated; // I3 and I4 name the same divisor class
};

[[nodiscard]] NormalForm normal_form(const Stratum& s, const Stratum& t);

// Intersection number of two boundary 2-strata. Total: handles the
// self-intersection table, the non-star zero case, and the normal-form
// case table in one decision tree.
[[nodiscard]] int pair(const Stratum& s, const Stratum& t);

// The boundary relation pulled back from the four-point cross ratio:
// (sum over classes with i,j on one side and k,l on the other) minus
// (sum with i,k against j,l). Numerically trivial; 16 terms on 7 labels.
[[nodiscard]] DivisorCombination keel_relation(int i, int j, int k, int l);

// Four-fold product of boundary divisor classes, evaluated by grouping the
// multiset into two stratum-shaped factor pairs. Zero as soon as any pair
// fails **; throws "unsupported-configuration" when no grouping exists.
[[nodiscard]] int quad_product(DivisorClass d1, DivisorClass d2, DivisorClass d3, DivisorClass d4);

// Independent route to pair(s,s): substitute a Keel relation for one copy
// of div_i and expand with quad_product. Never reuses the closed-form
// self-intersection table.
[[nodiscard]] int self_intersection_oracle(const Stratum& s);

[[nodiscard]] std::vector<std::vector<long>> gram_matrix(const std::vector<Stratum>& strata);

} // namespace strata

#endif
