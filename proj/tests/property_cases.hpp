#ifndef STRATACONES_TESTS_PROPERTY_CASES_HPP
#define STRATACONES_TESTS_PROPERTY_CASES_HPP

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <vector>

#include "stratacones/classes.hpp"
#include "stratacones/cone.hpp"
#include "stratacones/fixtures.hpp"
#include "stratacones/intersect.hpp"
#include "stratacones/json_io.hpp"
#include "stratacones/lifts.hpp"
#include "stratacones/plane.hpp"

// Randomized property suites shared by the standalone property runner and
// the acceptance gate. Each function runs `cases` independent trials and
// returns the number of failures; failures carry a reproducible description.

namespace strata::tests {

struct PropertyReport {
    long cases = 0;
    long failures = 0;
    std::string first_failure;

    void fail(const std::string& what) {
        if (failures == 0) first_failure = what;
        ++failures;
    }
};

inline Perm random_perm(std::mt19937& rng) {
    std::array<int, 7> img{1, 2, 3, 4, 5, 6, 7};
    std::shuffle(img.begin(), img.end(), rng);
    return Perm::from_images(img);
}

inline Stratum random_stratum(std::mt19937& rng) {
    static const std::array<std::array<int, 2>, 6> shapes{
        {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}}};
    std::array<int, 7> labels{1, 2, 3, 4, 5, 6, 7};
    std::shuffle(labels.begin(), labels.end(), rng);
    const auto [ni, nk] = shapes[std::uniform_int_distribution<std::size_t>(0, 5)(rng)];
    LabelSet i, j, k;
    int pos = 0;
    for (int c = 0; c < ni; ++c) i = i | LabelSet::single(labels[static_cast<std::size_t>(pos++)]);
    for (int c = 0; c < nk; ++c) k = k | LabelSet::single(labels[static_cast<std::size_t>(pos++)]);
    while (pos < 7) j = j | LabelSet::single(labels[static_cast<std::size_t>(pos++)]);
    return Stratum::make(i, j, k);
}

// S7-equivariance of the intersection pairing:
// pair(g s, g t) == pair(s, t) for random strata and permutations.
inline PropertyReport prop_pair_equivariance(long cases, unsigned seed) {
    PropertyReport rep;
    std::mt19937 rng(seed);
    for (long n = 0; n < cases; ++n) {
        ++rep.cases;
        const Stratum s = random_stratum(rng);
        const Stratum t = random_stratum(rng);
        const Perm g = random_perm(rng);
        if (pair(act(g, s), act(g, t)) != pair(s, t))
            rep.fail("pair not equivariant: s=" + s.I.str() + "|" + s.J.str() + "|" + s.K.str() +
                     " t=" + t.I.str() + "|" + t.J.str() + "|" + t.K.str() +
                     " g=" + cycle_string(g));
    }
    return rep;
}

namespace detail {

inline PointConfig transform(const PointConfig& c, std::mt19937& rng) {
    const int p = c.field.characteristic;
    for (;;) {
        std::array<std::array<long, 3>, 3> m{};
        for (auto& row : m)
            for (auto& x : row)
                x = p == 0 ? std::uniform_int_distribution<long>(-3, 3)(rng)
                           : std::uniform_int_distribution<long>(0, p - 1)(rng);
        const long det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (p == 0 ? det == 0 : det % p == 0) continue;
        std::vector<std::array<Rat, 3>> coords;
        for (const auto& pt : c.points) {
            std::array<Rat, 3> out{Rat(0), Rat(0), Rat(0)};
            for (int r = 0; r < 3; ++r)
                for (int s = 0; s < 3; ++s)
                    out[static_cast<std::size_t>(r)] +=
                        Rat(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)]) *
                        Rat(pt.c[static_cast<std::size_t>(s)]);
            coords.push_back(out);
        }
        return PointConfig::make(c.field, coords);
    }
}

inline PointConfig relabel(const PointConfig& c, const Perm& g) {
    std::vector<std::array<Rat, 3>> coords(7);
    for (int label = 1; label <= 7; ++label) {
        const auto& src = c.at(g.inverse()(label));
        coords[static_cast<std::size_t>(label - 1)] = {Rat(src.c[0]), Rat(src.c[1]),
                                                       Rat(src.c[2])};
    }
    return PointConfig::make(c.field, coords);
}

} // namespace detail

// Projective invariance and relabeling equivariance of surface_class:
// applying a random invertible projective transformation leaves the class
// unchanged; permuting the labels acts through the class action.
inline PropertyReport prop_surface_projective_invariance(long cases, unsigned seed) {
    PropertyReport rep;
    std::mt19937 rng(seed);
    const std::array<std::string, 4> names{"h1", "h2", "h3", "fano"};
    std::vector<PointConfig> seeds;
    std::vector<CycleClass> seed_classes;
    for (const auto& n : names) {
        seeds.push_back(fixture_config(n));
        seed_classes.push_back(surface_class(seeds.back()));
    }
    for (long n = 0; n < cases; ++n) {
        ++rep.cases;
        const std::size_t which = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
        const PointConfig& cfg = seeds[which];
        if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
            if (surface_class(detail::transform(cfg, rng)) != seed_classes[which])
                rep.fail("surface_class changed under projective transform of " + names[which]);
        } else {
            const Perm g = random_perm(rng);
            if (surface_class(detail::relabel(cfg, g)) != act(g, seed_classes[which]))
                rep.fail("surface_class not equivariant under relabeling " + cycle_string(g) +
                         " of " + names[which]);
        }
    }
    return rep;
}

// Certificate and coefficient round-trips on small random cones: members
// recombine exactly; non-members yield certificates that survive JSON
// round-trips and fail when negated or zeroed.
inline PropertyReport prop_certificate_roundtrip(long cases, unsigned seed) {
    PropertyReport rep;
    std::mt19937 rng(seed);
    const auto& lifts = enumerate_kv_lifts();
    for (long n = 0; n < cases; ++n) {
        ++rep.cases;
        const int ngen = std::uniform_int_distribution<int>(2, 6)(rng);
        std::vector<CycleClass> gens;
        for (int g = 0; g < ngen; ++g) gens.push_back(stratum_class(random_stratum(rng)));
        const ConeSpec cone = ConeSpec::custom("custom", gens);

        CycleClass target;
        if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
            target.coords.assign(gens[0].coords.size(), 0);
            for (const auto& g : gens) {
                const long c = std::uniform_int_distribution<long>(0, 3)(rng);
                for (std::size_t x = 0; x < target.coords.size(); ++x)
                    target.coords[x] += c * g.coords[x];
            }
        } else if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
            target = kv_lift(lifts[std::uniform_int_distribution<std::size_t>(
                0, lifts.size() - 1)(rng)]);
        } else {
            target = stratum_class(random_stratum(rng));
        }

        const MembershipResult res = membership(target, cone);
        if (res.member()) {
            std::vector<Rat> acc(target.coords.size(), Rat(0));
            for (const auto& [g, c] : *res.coefficients) {
                if (c < 0) {
                    rep.fail("negative coefficient");
                    break;
                }
                for (std::size_t x = 0; x < acc.size(); ++x)
                    acc[x] += c * Rat(cone.generators[static_cast<std::size_t>(g)].coords[x]);
            }
            for (std::size_t x = 0; x < acc.size(); ++x)
                if (acc[x] != Rat(target.coords[x])) {
                    rep.fail("member coefficients do not recombine to the target");
                    break;
                }
        } else {
            if (!res.certificate) {
                rep.fail("non-member without certificate");
                continue;
            }
            if (!verify_certificate(target, cone, *res.certificate)) {
                rep.fail("fresh certificate failed verification");
                continue;
            }
            const FarkasCertificate back =
                certificate_from_json(certificate_to_json(*res.certificate));
            if (back.functional != res.certificate->functional || back.cone != res.certificate->cone) {
                rep.fail("certificate JSON round-trip changed the certificate");
                continue;
            }
            if (!verify_certificate(target, cone, back)) {
                rep.fail("certificate failed verification after JSON round-trip");
                continue;
            }
            FarkasCertificate negated = back;
            for (auto& x : negated.functional) x = -x;
            if (verify_certificate(target, cone, negated))
                rep.fail("negated certificate verified");
            FarkasCertificate zero = back;
            for (auto& x : zero.functional) x = 0;
            if (verify_certificate(target, cone, zero))
                rep.fail("zero certificate verified");
        }
    }
    return rep;
}

// Canonicalization idempotence across the combinatorial types, plus
// action round-trips and cycle-notation parsing.
inline PropertyReport prop_canonicalization_idempotence(long cases, unsigned seed) {
    PropertyReport rep;
    std::mt19937 rng(seed);
    for (long n = 0; n < cases; ++n) {
        ++rep.cases;
        const Stratum s = random_stratum(rng);
        const Perm g = random_perm(rng);

        if (Stratum::make(s.K, s.J, s.I) != s) {
            rep.fail("stratum orientation canonicalization not idempotent");
            continue;
        }
        if (Stratum::from_sides(s.K, s.I) != s || Stratum::from_sides(s.I, s.K) != s) {
            rep.fail("from_sides disagrees with make");
            continue;
        }
        if (act(g.inverse(), act(g, s)) != s) {
            rep.fail("stratum action does not invert");
            continue;
        }
        const DivisorClass d = DivisorClass::of_side(s.I);
        if (DivisorClass::of_side(d.other_side()) != d) {
            rep.fail("divisor side canonicalization not idempotent");
            continue;
        }
        if (parse_cycles(cycle_string(g)) != g) {
            rep.fail("cycle notation round-trip failed for " + cycle_string(g));
            continue;
        }

        // KV presentations: all identifications collapse to one canonical form.
        std::array<int, 7> labels{1, 2, 3, 4, 5, 6, 7};
        std::shuffle(labels.begin(), labels.end(), rng);
        LabelSet ground;
        for (int x = 0; x < 6; ++x) ground = ground | LabelSet::single(labels[static_cast<std::size_t>(x)]);
        const int m = labels[0], q = labels[1], i = labels[2], j = labels[3];
        const int k = labels[4], l = labels[5];
        const KVDivisor kv = KVDivisor::of_matching(ground, m, q, i, j);
        if (KVDivisor::of_matching(ground, q, m, i, j) != kv ||
            KVDivisor::of_matching(ground, m, q, j, i) != kv ||
            KVDivisor::of_matching(ground, i, j, m, q) != kv ||
            KVDivisor::of_matching(ground, m, q, k, l) != kv) {
            rep.fail("KV presentation identifications do not collapse");
            continue;
        }

        // Projective point normalization absorbs scaling.
        const long num = std::uniform_int_distribution<long>(1, 40)(rng);
        const long den = std::uniform_int_distribution<long>(1, 40)(rng);
        const Rat scale(num, den);
        const Rat x0(std::uniform_int_distribution<long>(-9, 9)(rng));
        const Rat x1(std::uniform_int_distribution<long>(-9, 9)(rng));
        const Rat x2 = (x0 == 0 && x1 == 0) ? Rat(1) : Rat(std::uniform_int_distribution<long>(-9, 9)(rng));
        const auto f = Field::rationals();
        if (PlanePoint::make(f, x0 * scale, x1 * scale, x2 * scale) !=
            PlanePoint::make(f, x0, x1, x2))
            rep.fail("plane point normalization not scale invariant");
    }
    return rep;
}

} // namespace strata::tests

#endif // STRATACONES_TESTS_PROPERTY_CASES_HPP
