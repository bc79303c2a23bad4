#include "stratacones/lifts.hpp"

#include <algorithm>
#include <stdexcept>

namespace strata {

SixLabelDivisor SixLabelDivisor::of_side(LabelSet ground, LabelSet side) {
    if (ground.size() != 6)
        throw std::invalid_argument("SixLabelDivisor: ground set must have 6 labels");
    if (!side.subset_of(ground))
        throw std::invalid_argument("SixLabelDivisor: side not contained in ground set");
    if (side.size() < 2 || side.size() > 4)
        throw std::invalid_argument("SixLabelDivisor: side must have 2..4 labels");
    SixLabelDivisor d;
    d.ground = ground;
    d.rep = side.contains(ground.min_label()) ? side : ground - side;
    return d;
}

namespace {

int matching_partner(int x, int m, int q, int i, int j, int k, int l) {
    if (x == m) return q;
    if (x == q) return m;
    if (x == i) return j;
    if (x == j) return i;
    if (x == k) return l;
    if (x == l) return k;
    throw std::invalid_argument("label not in ground set");
}

} // namespace

KVDivisor KVDivisor::of_matching(LabelSet ground, int m, int q, int i, int j) {
    if (ground.size() != 6)
        throw std::invalid_argument("KVDivisor: ground set must have 6 labels");
    const LabelSet named = LabelSet::of({m, q, i, j});
    if (named.size() != 4 || !named.subset_of(ground))
        throw std::invalid_argument("KVDivisor: m,q,i,j must be 4 distinct ground labels");
    const LabelSet rest = ground - named;
    const int k = rest.min_label();
    const int l = (rest - LabelSet::single(k)).min_label();

    KVDivisor d;
    d.ground = ground;
    // Lexicographically least presentation of the matching {{m,q},{i,j},{k,l}}:
    // m is the smallest ground label, then i the smallest label outside {m,q}.
    d.m = ground.min_label();
    d.q = matching_partner(d.m, m, q, i, j, k, l);
    const LabelSet rest4 = ground - LabelSet::of({d.m, d.q});
    d.i = rest4.min_label();
    d.j = matching_partner(d.i, m, q, i, j, k, l);
    return d;
}

int KVDivisor::partner(int x) const {
    const auto [k, l] = kl();
    return matching_partner(x, m, q, i, j, k, l);
}

std::pair<int, int> KVDivisor::kl() const {
    const LabelSet rest = ground - LabelSet::of({m, q, i, j});
    const int k = rest.min_label();
    const int l = (rest - LabelSet::single(k)).min_label();
    return {k, l};
}

std::vector<KVDivisor> enumerate_kv(LabelSet ground) {
    if (ground.size() != 6)
        throw std::invalid_argument("enumerate_kv: ground set must have 6 labels");
    std::vector<KVDivisor> out;
    const auto labels = ground.labels();
    const int m = labels[0];
    for (int qi = 1; qi < 6; ++qi) {
        const int q = labels[static_cast<std::size_t>(qi)];
        std::vector<int> rest;
        for (int t = 1; t < 6; ++t)
            if (t != qi) rest.push_back(labels[static_cast<std::size_t>(t)]);
        const int i = rest[0];
        for (int ji = 1; ji < 4; ++ji)
            out.push_back(KVDivisor::of_matching(ground, m, q, i, rest[static_cast<std::size_t>(ji)]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<SixLabelDivisor, long> kv_expansion(LabelSet ground, int m, int q, int i, int j) {
    const KVDivisor check = KVDivisor::of_matching(ground, m, q, i, j); // validates labels
    (void)check;
    const LabelSet rest = ground - LabelSet::of({m, q, i, j});
    const int k = rest.min_label();
    const int l = (rest - LabelSet::single(k)).min_label();
    std::map<SixLabelDivisor, long> terms;
    terms[SixLabelDivisor::of_side(ground, LabelSet::of({i, m}))] += 1;
    terms[SixLabelDivisor::of_side(ground, LabelSet::of({j, m}))] += 1;
    terms[SixLabelDivisor::of_side(ground, LabelSet::of({k, q}))] += 1;
    terms[SixLabelDivisor::of_side(ground, LabelSet::of({l, q}))] += 1;
    terms[SixLabelDivisor::of_side(ground, LabelSet::of({i, j, m}))] += 2;
    terms[SixLabelDivisor::of_side(ground, LabelSet::of({m, q}))] -= 1;
    return terms;
}

std::map<SixLabelDivisor, long> kv_expansion(const KVDivisor& kv) {
    return kv_expansion(kv.ground, kv.m, kv.q, kv.i, kv.j);
}

Stratum lift_divisor(const SixLabelDivisor& S, int a, int b) {
    if (a == b || a < 1 || a > 7 || b < 1 || b > 7)
        throw std::invalid_argument("lift_divisor: a, b must be distinct labels in 1..7");
    const int x = std::min(a, b);
    const LabelSet expected = kAllSeven - LabelSet::single(std::max(a, b));
    if (S.ground != expected)
        throw std::invalid_argument("lift_divisor: ground set does not match (a,b)");
    const LabelSet ab = LabelSet::of({a, b});
    const LabelSet xs = LabelSet::single(x);
    if (S.rep.contains(x))
        return Stratum::make(S.ground - S.rep, S.rep - xs, ab);
    return Stratum::make(S.rep, S.ground - S.rep - xs, ab);
}

const std::vector<KVLift>& enumerate_kv_lifts() {
    static const std::vector<KVLift> lifts = [] {
        std::vector<KVLift> out;
        for (int a = 1; a <= 7; ++a) {
            for (int b = a + 1; b <= 7; ++b) {
                const int x = a; // x = min(a,b)
                const LabelSet ground = kAllSeven - LabelSet::single(b);
                for (const KVDivisor& kv : enumerate_kv(ground)) {
                    KVLift lift;
                    lift.a = a;
                    lift.b = b;
                    lift.kv = kv;
                    lift.m = kv.partner(x);
                    const LabelSet rest4 = ground - LabelSet::of({x, lift.m});
                    lift.i = rest4.min_label();
                    lift.j = kv.partner(lift.i);
                    out.push_back(lift);
                }
            }
        }
        return out;
    }();
    return lifts;
}

std::map<Stratum, long> kv_lift_terms(const KVLift& lift) {
    const int x = std::min(lift.a, lift.b);
    std::map<Stratum, long> terms;
    for (const auto& [div, coeff] : kv_expansion(lift.kv.ground, lift.m, x, lift.i, lift.j))
        terms[lift_divisor(div, lift.a, lift.b)] += coeff;
    return terms;
}

CycleClass kv_lift(const KVLift& lift) { return combination_class(kv_lift_terms(lift)); }

CycleClass kv_lift(int a, int b, const KVDivisor& kv) {
    const int x = std::min(a, b);
    KVLift lift;
    lift.a = a;
    lift.b = b;
    lift.kv = kv;
    lift.m = kv.partner(x);
    const LabelSet rest4 = kv.ground - LabelSet::of({x, lift.m});
    lift.i = rest4.min_label();
    lift.j = kv.partner(lift.i);
    return strata::kv_lift(lift);
}

std::optional<SixLabelDivisor> pushforward_stratum(int y, const Stratum& s) {
    if (y < 1 || y > 7) throw std::invalid_argument("pushforward_stratum: label out of range");
    const LabelSet ys = LabelSet::single(y);
    const LabelSet ground = kAllSeven - ys;
    if (s.I.contains(y) && s.I.size() == 2)
        return SixLabelDivisor::of_side(ground, (s.I - ys) | s.J);
    if (s.K.contains(y) && s.K.size() == 2)
        return SixLabelDivisor::of_side(ground, (s.K - ys) | s.J);
    if (s.J.contains(y) && s.J.size() == 1)
        return SixLabelDivisor::of_side(ground, s.I);
    return std::nullopt;
}

std::map<SixLabelDivisor, long> pushforward_combination(int y, const std::map<Stratum, long>& terms) {
    std::map<SixLabelDivisor, long> out;
    for (const auto& [s, coeff] : terms) {
        if (coeff == 0) continue;
        if (auto d = pushforward_stratum(y, s)) {
            auto it = out.find(*d);
            if (it == out.end()) {
                out.emplace(*d, coeff);
            } else {
                it->second += coeff;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

} // namespace strata
