#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "stratacones/fixtures.hpp"
#include "stratacones/plane.hpp"

using namespace strata;

namespace {

const Field kQ = Field::rationals();

PlanePoint P(const Field& f, long x, long y, long z) {
    return PlanePoint::make(f, Rat(x), Rat(y), Rat(z));
}

std::vector<std::array<Rat, 3>> coords(std::initializer_list<std::array<long, 3>> rows) {
    std::vector<std::array<Rat, 3>> out;
    for (const auto& r : rows) out.push_back({Rat(r[0]), Rat(r[1]), Rat(r[2])});
    return out;
}

} // namespace

TEST_CASE("fields: characteristic 0 or a small prime") {
    CHECK(Field::rationals().characteristic == 0);
    CHECK(Field::prime(2).characteristic == 2);
    CHECK(Field::prime(251).characteristic == 251);
    CHECK_THROWS_WITH_AS(Field::prime(4),
                         "field characteristic must be 0 or a prime <= 251",
                         std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(257), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(0), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(-3), std::invalid_argument);
}

TEST_CASE("point normalization makes projective equality plain equality") {
    // Characteristic 0: coprime integers, first nonzero entry positive.
    CHECK(P(kQ, 2, 4, 6) == P(kQ, 1, 2, 3));
    CHECK(P(kQ, -2, 4, -6).c == std::array<Int, 3>{1, -2, 3});
    CHECK(P(kQ, 0, -5, 10).c == std::array<Int, 3>{0, 1, -2});
    const PlanePoint frac = PlanePoint::make(kQ, Rat(1, 2), Rat(1, 3), Rat(0));
    CHECK(frac.c == std::array<Int, 3>{3, 2, 0});

    // Characteristic p: residues with leading entry 1.
    const Field f5 = Field::prime(5);
    CHECK(P(f5, 2, 4, 6).c == std::array<Int, 3>{1, 2, 3});
    CHECK(P(f5, 0, 3, 4).c == std::array<Int, 3>{0, 1, 3});
    CHECK_THROWS_WITH_AS(P(kQ, 0, 0, 0), "projective point cannot be (0:0:0)",
                         std::invalid_argument);
    CHECK_THROWS_AS(P(f5, 5, 10, 15), std::invalid_argument);
    CHECK_THROWS_AS(PlanePoint::make(f5, Rat(1, 5), Rat(0), Rat(1)),
                    std::invalid_argument); // denominator divisible by 5
}

TEST_CASE("collinearity") {
    CHECK(collinear(P(kQ, 1, 0, 0), P(kQ, 0, 1, 0), P(kQ, 1, 1, 0)));
    CHECK(!collinear(P(kQ, 1, 0, 0), P(kQ, 0, 1, 0), P(kQ, 0, 0, 1)));
    CHECK(collinear(P(kQ, 1, 2, 3), P(kQ, 1, 2, 3), P(kQ, 0, 0, 1))); // repeats collinear
    const Field f2 = Field::prime(2);
    CHECK(collinear(P(f2, 1, 0, 0), P(f2, 0, 1, 0), P(f2, 1, 1, 0)));
    CHECK_THROWS_AS(collinear(P(kQ, 1, 0, 0), P(f2, 0, 1, 0), P(f2, 1, 1, 0)),
                    std::invalid_argument);
}

TEST_CASE("configuration validation") {
    CHECK_THROWS_WITH_AS(
        PointConfig::make(kQ, coords({{1, 0, 0}, {0, 1, 0}})),
        "point configuration requires exactly 7 points", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        PointConfig::make(kQ, coords({{1, 0, 0}, {2, 0, 0}, {0, 0, 1}, {1, 1, 1},
                                      {1, 2, 3}, {1, 4, 9}, {2, 3, 5}})),
        "points not distinct", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        PointConfig::make(kQ, coords({{1, 0, 0}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0},
                                      {1, 4, 0}, {1, 5, 0}, {0, 1, 0}})),
        "points all collinear", std::invalid_argument);
}

TEST_CASE("line arrangements: maximal collinear sets, sorted, each once") {
    const PointConfig h1 = fixture_config("h1");
    const auto lines = line_arrangement(h1);
    REQUIRE(lines.size() == 9);
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) CHECK(lines[i] < lines[i + 1]);
    std::vector<LabelSet> triples, pairs;
    for (const auto& L : lines)
        (L.members.size() == 3 ? triples : pairs).push_back(L.members);
    REQUIRE(triples.size() == 6);
    REQUIRE(pairs.size() == 3);
    const std::vector<LabelSet> expect_triples = {
        LabelSet::of({2, 3, 5}), LabelSet::of({1, 4, 5}), LabelSet::of({1, 3, 6}),
        LabelSet::of({2, 4, 6}), LabelSet::of({1, 2, 7}), LabelSet::of({5, 6, 7})};
    for (const auto& t : expect_triples)
        CHECK(std::find(triples.begin(), triples.end(), t) != triples.end());
    const std::vector<LabelSet> expect_pairs = {
        LabelSet::of({3, 4}), LabelSet::of({3, 7}), LabelSet::of({4, 7})};
    for (const auto& p : expect_pairs)
        CHECK(std::find(pairs.begin(), pairs.end(), p) != pairs.end());

    // A generic configuration spans only 2-point lines.
    const PointConfig generic = PointConfig::make(
        kQ, coords({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3},
                    {1, 4, 9}, {2, 3, 5}}));
    CHECK(line_arrangement(generic).size() == 21);

    // Subconfiguration variant on explicit labels.
    const auto [f, pts] = fixture_points("gamma0");
    CHECK(f.characteristic == 0);
    const auto sub = line_arrangement_of(pts, {1, 2, 3, 4, 5, 6});
    int sub_triples = 0;
    for (const auto& L : sub)
        if (L.members.size() == 3) ++sub_triples;
    CHECK(sub_triples == 4);
}

TEST_CASE("common conics detected exactly") {
    CHECK(!on_common_conic(fixture_config("h1")));
    CHECK(!on_common_conic(fixture_config("h2")));
    CHECK(!on_common_conic(fixture_config("h3")));
    std::vector<std::array<Rat, 3>> conic;
    for (long t = 0; t <= 6; ++t) conic.push_back({Rat(t * t), Rat(t), Rat(1)});
    CHECK(on_common_conic(PointConfig::make(kQ, conic)));
    // Reducible conic: two lines carrying 4 + 3 points.
    CHECK(on_common_conic(PointConfig::make(
        kQ, coords({{1, 0, 0}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0},
                    {0, 0, 1}, {0, 1, 1}, {0, 1, 2}}))));
}

TEST_CASE("blow-up pairing") {
    PicardVector h;
    h.h = 1;
    PicardVector e1;
    e1.e[0] = 1;
    PicardVector e2;
    e2.e[1] = 1;
    CHECK(picard_pair(h, h) == 1);
    CHECK(picard_pair(h, e1) == 0);
    CHECK(picard_pair(e1, e1) == -1);
    CHECK(picard_pair(e1, e2) == 0);
    PicardVector line;
    line.h = 1;
    line.e[0] = -1;
    line.e[1] = -1;
    CHECK(picard_pair(line, line) == -1);
    CHECK(picard_pair(line, e1) == 1);
    CHECK(PicardVector{}.is_zero());
    CHECK(!line.is_zero());
}

TEST_CASE("pullbacks of boundary divisors along the embedding") {
    const PointConfig h1 = fixture_config("h1");
    const auto pull = [&](std::initializer_list<int> side) {
        return pullback_divisor(h1, DivisorClass::of_side(LabelSet::of(side)));
    };
    PicardVector full_line;
    full_line.h = 1;
    full_line.e[0] = full_line.e[3] = full_line.e[4] = -1;
    CHECK(pull({1, 4, 5}) == full_line);
    CHECK(pull({2, 3, 6, 7}) == full_line); // complementary side, same divisor

    PicardVector e5;
    e5.e[4] = 1;
    CHECK(pull({1, 4}) == e5); // line {145} with 5 removed

    PicardVector two_line;
    two_line.h = 1;
    two_line.e[2] = two_line.e[3] = -1;
    CHECK(pull({3, 4}) == two_line); // maximal 2-point line

    PicardVector e7;
    e7.e[6] = 1;
    CHECK(pull({1, 2}) == e7); // line {127} with 7 removed

    CHECK(pull({1, 2, 3}).is_zero()); // not a line, not a punctured line

    // No valid embedding: pullback refuses.
    std::vector<std::array<Rat, 3>> conic;
    for (long t = 0; t <= 6; ++t) conic.push_back({Rat(t * t), Rat(t), Rat(1)});
    const PointConfig on_conic = PointConfig::make(kQ, conic);
    CHECK_THROWS_WITH_AS(
        pullback_divisor(on_conic, DivisorClass::of_side(LabelSet::of({1, 2}))),
        "points lie on a common conic: blow-up is not embedded", std::invalid_argument);
}

TEST_CASE("surface classes via the projection formula") {
    const PointConfig h1 = fixture_config("h1");
    const CycleClass c = surface_class(h1);
    REQUIRE(c.coords.size() == 420);
    CHECK(!c.is_zero());
    // Entry check: sides {1,2} and {5,6,7} pull back to E_7 and H-E5-E6-E7.
    const Stratum spot = Stratum::make(LabelSet::of({1, 2}), LabelSet::of({3, 4}),
                                       LabelSet::of({5, 6, 7}));
    CHECK(c.coords[static_cast<std::size_t>(class_index(spot))] == 1);
    const auto entry = [&](const Stratum& s) {
        return picard_pair(pullback_divisor(h1, DivisorClass::of_side(s.I)),
                           pullback_divisor(h1, DivisorClass::of_side(s.K)));
    };
    for (std::size_t r = 0; r < 420; r += 17) {
        const Stratum& rep = enumerate_class_reps()[r];
        CHECK(c.coords[r] == entry(rep));
    }
}

TEST_CASE("hypertree axioms") {
    const Hypertree g = gamma0_hypertree();
    CHECK(g.ground == LabelSet::of({1, 2, 3, 4, 5, 6}));
    REQUIRE(g.parts.size() == 4);
    const auto res = hypertree_check(g);
    CHECK(res.valid);
    CHECK(res.irreducible);

    Hypertree bad = g;
    bad.parts[0] = LabelSet::of({1, 4}); // part too small
    CHECK(!hypertree_check(bad).valid);

    bad = g;
    bad.parts.pop_back(); // label 4 now covered once; normalization off too
    CHECK(!hypertree_check(bad).valid);

    bad = g;
    bad.parts[1] = bad.parts[0]; // duplicate part
    CHECK(!hypertree_check(bad).valid);

    bad = g;
    bad.parts.push_back(LabelSet::of({3, 4, 7}));
    bad.ground = kAllSeven; // 5 triples on 7 labels: sum 5 = 7 - 2 holds
    CHECK(!hypertree_check(bad).valid); // but label 7 is covered only once

    bad = g;
    bad.parts[0] = LabelSet::of({1, 4, 5, 6}); // normalization sum now 5 != 4
    CHECK(!hypertree_check(bad).valid);

    CHECK(!hypertree_check(Hypertree{LabelSet::of({1, 2, 3}), {}}).valid);
}

TEST_CASE("planar realizations") {
    const auto [f, pts] = fixture_points("gamma0");
    CHECK(f.characteristic == 0);
    REQUIRE(pts.size() == 6);
    const Hypertree g = gamma0_hypertree();
    CHECK(planar_realization_check(pts, g));

    // Same points against a relabeled (wrong) hypertree: fails.
    Hypertree wrong = g;
    wrong.parts[0] = LabelSet::of({1, 2, 3});
    wrong.parts[1] = LabelSet::of({1, 4, 5});
    wrong.parts[2] = LabelSet::of({2, 4, 6});
    wrong.parts[3] = LabelSet::of({3, 5, 6});
    CHECK(!planar_realization_check(pts, wrong));

    CHECK_THROWS_AS(planar_realization_check({pts[0], pts[1]}, g), std::invalid_argument);
}

TEST_CASE("special labels of the stock configurations") {
    CHECK(special_labels(fixture_config("h1")) == LabelSet::of({3, 4, 7}));
    CHECK(special_labels(fixture_config("h2")) == LabelSet::of({5, 6, 7}));
    CHECK(special_labels(fixture_config("h3")) == LabelSet::of({1, 2, 7}));
    CHECK(special_labels(fixture_config("fano")) == kAllSeven);
    const PointConfig generic = PointConfig::make(
        kQ, coords({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3},
                    {1, 4, 9}, {2, 3, 5}}));
    CHECK(special_labels(generic).empty());
}
