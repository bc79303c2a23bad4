#include "stratacones/intersect.hpp"

#include <optional>
#include <stdexcept>

namespace strata {
namespace {

// For two distinct star-related divisor classes there is exactly one way to
// pick one side from each so that the sides are disjoint.
std::pair<LabelSet, LabelSet> disjoint_sides(DivisorClass a, DivisorClass b) {
    LabelSet u = a.rep, v = b.rep;
    if (u.disjoint(v)) return {u, v};
    LabelSet uc = u.complement(kAllSeven), vc = v.complement(kAllSeven);
    if (uc.disjoint(v)) return {uc, v};
    if (u.disjoint(vc)) return {u, vc};
    if (uc.disjoint(vc)) return {uc, vc};
    throw std::logic_error("disjoint_sides: classes do not satisfy **");
}

std::optional<Stratum> try_stratum(DivisorClass a, DivisorClass b) {
    if (a == b || !star(a, b)) return std::nullopt;
    auto [x, y] = disjoint_sides(a, b);
    LabelSet rest = (x | y).complement(kAllSeven);
    if (rest.empty() || rest.size() > 3) return std::nullopt;
    if (x.size() < 2 || x.size() > 4 || y.size() < 2 || y.size() > 4) return std::nullopt;
    return Stratum::from_sides(x, y);
}

int self_pair(const Stratum& s) {
    auto t = s.type();
    if (t[0] == 2 && t[1] == 1) return 0;
    if (t[1] == 3) return 2;
    return 1;
}

} // namespace

bool stratum_star(const Stratum& s, const Stratum& t) {
    return star(s.I, t.I) && star(s.I, t.K) && star(s.K, t.I) && star(s.K, t.K);
}

NormalForm normal_form(const Stratum& s, const Stratum& t) {
    if (s == t) throw std::invalid_argument("normal_form: strata must be distinct");
    if (!stratum_star(s, t)) throw std::invalid_argument("normal_form: strata must satisfy **");

    const DivisorClass ds[4] = {s.div_i(), s.div_k(), t.div_i(), t.div_k()};

    // Within a stratum the two classes differ, and s != t rules out sharing
    // both, so at most one cross pair of the four classes can coincide.
    int ra = -1, rb = -1;
    for (int a = 0; a < 2 && ra < 0; ++a)
        for (int b = 2; b < 4; ++b)
            if (ds[a] == ds[b]) { ra = a; rb = b; break; }

    if (ra >= 0) {
        DivisorClass u = ds[1 - ra], v = ds[rb == 2 ? 3 : 2];
        auto [x, y] = disjoint_sides(u, v);
        if (x.size() > y.size() || (x.size() == y.size() && x.m > y.m)) std::swap(x, y);
        LabelSet r = ds[ra].rep;
        return NormalForm{x, y, r, r, true};
    }

    // All four distinct: I and K of s are already disjoint representatives.
    LabelSet x = s.I, y = s.K;
    if (x.size() > y.size() || (x.size() == y.size() && x.m > y.m)) std::swap(x, y);
    LabelSet z = ds[2].rep, w = ds[3].rep;
    if (z.m > w.m) std::swap(z, w);
    return NormalForm{x, y, z, w, false};
}

int pair(const Stratum& s, const Stratum& t) {
    if (s == t) return self_pair(s);
    if (!stratum_star(s, t)) return 0;
    NormalForm nf = normal_form(s, t);
    if (nf.repeated)
        return (nf.I1.size() == 2 && (nf.I2.size() == 2 || nf.I2.size() == 4)) ? -1 : 0;
    return 1;
}

DivisorCombination keel_relation(int i, int j, int k, int l) {
    LabelSet q = LabelSet::of({i, j, k, l});
    if (q.size() != 4) throw std::invalid_argument("keel_relation: labels must be distinct");
    DivisorCombination rel;
    for (const DivisorClass& d : enumerate_divisors()) {
        LabelSet a = d.rep, b = d.other_side();
        if ((a.contains(i) && a.contains(j) && b.contains(k) && b.contains(l)) ||
            (b.contains(i) && b.contains(j) && a.contains(k) && a.contains(l)))
            rel.add(d, 1);
        else if ((a.contains(i) && a.contains(k) && b.contains(j) && b.contains(l)) ||
                 (b.contains(i) && b.contains(k) && a.contains(j) && a.contains(l)))
            rel.add(d, -1);
    }
    return rel;
}

int quad_product(DivisorClass d1, DivisorClass d2, DivisorClass d3, DivisorClass d4) {
    const DivisorClass d[4] = {d1, d2, d3, d4};
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (!star(d[a], d[b])) return 0;

    const int grouping[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& g : grouping) {
        auto s1 = try_stratum(d[g[0]], d[g[1]]);
        if (!s1) continue;
        auto s2 = try_stratum(d[g[2]], d[g[3]]);
        if (!s2) continue;
        return pair(*s1, *s2);
    }
    throw std::invalid_argument("unsupported-configuration: product does not split into two strata");
}

int self_intersection_oracle(const Stratum& s) {
    auto labels_i = s.I.labels();
    int i = labels_i[0], j = labels_i[1];
    int k = s.J.min_label();
    int l = s.K.min_label();

    DivisorCombination rel = keel_relation(i, j, k, l);
    DivisorClass di = s.div_i(), dk = s.div_k();
    if (rel.coeff(di) != 1)
        throw std::logic_error("self_intersection_oracle: relation does not isolate div_i");

    long total = 0;
    for (const auto& [d, c] : rel.terms) {
        if (d == di) continue;
        total += -c * quad_product(d, dk, di, dk);
    }
    return static_cast<int>(total);
}

std::vector<std::vector<long>> gram_matrix(const std::vector<Stratum>& strata) {
    std::size_t n = strata.size();
    std::vector<std::vector<long>> g(n, std::vector<long>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            long v = pair(strata[a], strata[b]);
            g[a][b] = v;
            g[b][a] = v;
        }
    return g;
}

} // namespace strata
