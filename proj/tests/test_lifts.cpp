#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "stratacones/lifts.hpp"

using namespace strata;

namespace {

const LabelSet kSix = LabelSet::of({1, 2, 3, 4, 5, 6});

Stratum S(std::initializer_list<int> I, std::initializer_list<int> J,
          std::initializer_list<int> K) {
    return Stratum::make(LabelSet::of(I), LabelSet::of(J), LabelSet::of(K));
}

} // namespace

TEST_CASE("six-label divisors canonicalize on the smallest ground label") {
    const SixLabelDivisor d = SixLabelDivisor::of_side(kSix, LabelSet::of({5, 6}));
    CHECK(d.rep == LabelSet::of({1, 2, 3, 4}));
    CHECK(d.other_side() == LabelSet::of({5, 6}));
    CHECK(d == SixLabelDivisor::of_side(kSix, LabelSet::of({1, 2, 3, 4})));
    CHECK_THROWS_AS(SixLabelDivisor::of_side(LabelSet::of({1, 2, 3}), LabelSet::of({1, 2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(SixLabelDivisor::of_side(kSix, LabelSet::of({1, 7})),
                    std::invalid_argument);
    CHECK_THROWS_AS(SixLabelDivisor::of_side(kSix, LabelSet::of({1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(SixLabelDivisor::of_side(kSix, LabelSet::of({1, 2, 3, 4, 5})),
                    std::invalid_argument);
}

TEST_CASE("matching divisors: presentations collapse, 15 per ground set") {
    const KVDivisor kv = KVDivisor::of_matching(kSix, 5, 6, 1, 2);
    CHECK(kv.m == 1);
    CHECK(kv.q == 2);
    CHECK(kv.i == 3);
    CHECK(kv.j == 4);
    // All presentations of the matching {16,25,34} name one object.
    const KVDivisor base = KVDivisor::of_matching(kSix, 1, 6, 2, 5);
    CHECK(KVDivisor::of_matching(kSix, 6, 1, 2, 5) == base);
    CHECK(KVDivisor::of_matching(kSix, 1, 6, 5, 2) == base);
    CHECK(KVDivisor::of_matching(kSix, 2, 5, 1, 6) == base);
    CHECK(KVDivisor::of_matching(kSix, 1, 6, 3, 4) == base);
    CHECK(KVDivisor::of_matching(kSix, 3, 4, 2, 5) == base);
    CHECK(base != kv);

    CHECK(base.partner(1) == 6);
    CHECK(base.partner(6) == 1);
    CHECK(base.partner(3) == 4);
    CHECK(kv.kl() == std::pair<int, int>{5, 6});
    CHECK_THROWS_AS(base.partner(7), std::invalid_argument);

    const auto all = enumerate_kv(kSix);
    CHECK(all.size() == 15);
    CHECK(std::set<KVDivisor>(all.begin(), all.end()).size() == 15);
    const auto other = enumerate_kv(LabelSet::of({1, 2, 3, 4, 5, 7}));
    CHECK(other.size() == 15);

    CHECK_THROWS_AS(KVDivisor::of_matching(kSix, 1, 1, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(KVDivisor::of_matching(kSix, 1, 2, 3, 7), std::invalid_argument);
    CHECK_THROWS_AS(KVDivisor::of_matching(LabelSet::of({1, 2, 3, 4}), 1, 2, 3, 4),
                    std::invalid_argument);
}

TEST_CASE("six-term expansion follows the presentation, not just the divisor") {
    // Presentation (m,q,i,j) = (5,6,1,2), so {k,l} = {3,4}:
    //   d_15 + d_25 + d_36 + d_46 + 2 d_125 - d_56.
    const auto e = kv_expansion(kSix, 5, 6, 1, 2);
    const auto D = [&](std::initializer_list<int> side) {
        return SixLabelDivisor::of_side(kSix, LabelSet::of(side));
    };
    CHECK(e.size() == 6);
    CHECK(e.at(D({1, 5})) == 1);
    CHECK(e.at(D({2, 5})) == 1);
    CHECK(e.at(D({3, 6})) == 1);
    CHECK(e.at(D({4, 6})) == 1);
    CHECK(e.at(D({1, 2, 5})) == 2);
    CHECK(e.at(D({5, 6})) == -1);

    // The canonical-presentation overload expands (1,2,3,4) instead.
    const auto canon = kv_expansion(KVDivisor::of_matching(kSix, 5, 6, 1, 2));
    CHECK(canon == kv_expansion(kSix, 1, 2, 3, 4));
    CHECK(canon != e);
}

TEST_CASE("divisor lift attaches a tail at the smaller free label") {
    const SixLabelDivisor d = SixLabelDivisor::of_side(kSix, LabelSet::of({1, 5}));
    CHECK(lift_divisor(d, 6, 7) == S({1, 5}, {2, 3, 4}, {6, 7}));
    CHECK(lift_divisor(d, 7, 6) == S({1, 5}, {2, 3, 4}, {6, 7}));
    const SixLabelDivisor t = SixLabelDivisor::of_side(kSix, LabelSet::of({1, 2, 5}));
    CHECK(lift_divisor(t, 6, 7) == S({1, 2, 5}, {3, 4}, {6, 7}));
    // (1,7) shares the ground set {1..6}; the attaching slot moves to 1.
    CHECK(lift_divisor(d, 1, 7) == S({2, 3, 4, 6}, {5}, {1, 7}));
    CHECK_THROWS_AS(lift_divisor(d, 1, 2), std::invalid_argument); // ground mismatch
    CHECK_THROWS_AS(lift_divisor(d, 6, 6), std::invalid_argument);
}

TEST_CASE("315 lifts, consistently presented") {
    const auto& lifts = enumerate_kv_lifts();
    REQUIRE(lifts.size() == 315);
    std::set<std::tuple<int, int, KVDivisor>> seen;
    for (const KVLift& lf : lifts) {
        CHECK(lf.a < lf.b);
        const int x = lf.a < lf.b ? lf.a : lf.b;
        CHECK(lf.m == lf.kv.partner(x));
        CHECK(lf.kv.partner(lf.i) == lf.j);
        // {i,j} is the matching pair holding the smallest label outside {m,x}.
        LabelSet rest = lf.kv.ground - LabelSet::of({lf.m, x});
        CHECK(lf.i == rest.min_label());
        seen.emplace(lf.a, lf.b, lf.kv);
    }
    CHECK(seen.size() == 315);
}

TEST_CASE("worked lift: tail 67, partner 5, pair 12") {
    const KVDivisor kv = KVDivisor::of_matching(kSix, 5, 6, 1, 2);
    const KVLift* lift = nullptr;
    for (const KVLift& lf : enumerate_kv_lifts())
        if (lf.a == 6 && lf.b == 7 && lf.kv == kv) lift = &lf;
    REQUIRE(lift != nullptr);
    CHECK(lift->m == 5);
    CHECK(lift->i == 1);
    CHECK(lift->j == 2);

    const auto terms = kv_lift_terms(*lift);
    const std::map<Stratum, long> expect = {
        {S({1, 5}, {2, 3, 4}, {6, 7}), 1},  {S({2, 5}, {1, 3, 4}, {6, 7}), 1},
        {S({1, 2, 4, 5}, {3}, {6, 7}), 1},  {S({1, 2, 3, 5}, {4}, {6, 7}), 1},
        {S({1, 2, 5}, {3, 4}, {6, 7}), 2},  {S({1, 2, 3, 4}, {5}, {6, 7}), -1},
    };
    CHECK(terms == expect);

    const CycleClass c = kv_lift(*lift);
    CHECK(c == kv_lift(6, 7, kv));
    CHECK(c == combination_class(expect));
    CHECK(!c.is_zero());
}

TEST_CASE("the 315 lift classes are pairwise distinct") {
    std::set<std::vector<long>> classes;
    for (const KVLift& lf : enumerate_kv_lifts()) classes.insert(kv_lift(lf).coords);
    CHECK(classes.size() == 315);
}

TEST_CASE("forgetful pushforward of single strata") {
    // Tail with three special points contracts; its label lands on the node.
    const Stratum s = S({1, 5}, {2, 3, 4}, {6, 7});
    const auto p5 = pushforward_stratum(5, s);
    REQUIRE(p5.has_value());
    CHECK(*p5 == SixLabelDivisor::of_side(LabelSet::of({1, 2, 3, 4, 6, 7}),
                                          LabelSet::of({6, 7})));
    // A one-label middle component contracts too.
    const auto p5mid = pushforward_stratum(5, S({1, 2, 3, 4}, {5}, {6, 7}));
    REQUIRE(p5mid.has_value());
    CHECK(*p5mid == SixLabelDivisor::of_side(LabelSet::of({1, 2, 3, 4, 6, 7}),
                                             LabelSet::of({6, 7})));
    // A component that stays stable drops the image dimension: zero.
    CHECK(!pushforward_stratum(3, S({1, 2, 5}, {3, 4}, {6, 7})).has_value());
    CHECK(!pushforward_stratum(5, S({1, 2, 5}, {3, 4}, {6, 7})).has_value());
    CHECK_THROWS_AS(pushforward_stratum(0, s), std::invalid_argument);
    CHECK_THROWS_AS(pushforward_stratum(8, s), std::invalid_argument);
}

TEST_CASE("worked lift pushforwards: all seven forgotten labels") {
    const KVDivisor kv = KVDivisor::of_matching(kSix, 5, 6, 1, 2);
    const KVLift* lift = nullptr;
    for (const KVLift& lf : enumerate_kv_lifts())
        if (lf.a == 6 && lf.b == 7 && lf.kv == kv) lift = &lf;
    REQUIRE(lift != nullptr);
    const auto terms = kv_lift_terms(*lift);

    // Forgetting a tail label leaves the matching divisor with the partner swapped in.
    CHECK(pushforward_combination(6, terms) ==
          kv_expansion(LabelSet::of({1, 2, 3, 4, 5, 7}), 5, 7, 1, 2));
    CHECK(pushforward_combination(7, terms) == kv_expansion(kSix, 5, 6, 1, 2));
    // Forgetting any other label collapses the sum to the plain tail divisor.
    for (int y : {1, 2, 3, 4, 5}) {
        const LabelSet ground = kAllSeven - LabelSet::single(y);
        const std::map<SixLabelDivisor, long> expect = {
            {SixLabelDivisor::of_side(ground, LabelSet::of({6, 7})), 1}};
        CHECK(pushforward_combination(y, terms) == expect);
    }
}
