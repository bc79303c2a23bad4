#ifndef STRATACONES_PLANE_HPP
#define STRATACONES_PLANE_HPP

#include <array>
#include <vector>

#include "stratacones/boundary.hpp"
#include "stratacones/classes.hpp"
#include "stratacones/labels.hpp"
#include "stratacones/rational.hpp"

namespace strata {

// Coefficient field for point configurations: the rationals (characteristic
// 0) or a prime field F_p with p <= 251.
struct Field {
    int characteristic = 0;

    static Field rationals() { return Field{0}; }
    static Field prime(int p);

    bool operator==(const Field&) const = default;
};

// Point of the projective plane, stored as a normalized homogeneous integer
// triple so that projective equality is plain equality:
//   char 0: coprime integers, first nonzero entry positive;
//   char p: residues in [0,p), first nonzero entry equal to 1.
struct PlanePoint {
    Field field;
    std::array<Int, 3> c{};

    static PlanePoint make(Field f, const Rat& x, const Rat& y, const Rat& z);

    bool operator==(const PlanePoint&) const = default;
};

bool collinear(const PlanePoint& p, const PlanePoint& q, const PlanePoint& r);

// Seven labeled points, pairwise distinct and not all collinear.
struct PointConfig {
    Field field;
    std::vector<PlanePoint> points; // points[i] carries label i+1

    static PointConfig make(Field f, const std::vector<std::array<Rat, 3>>& coords);

    const PlanePoint& at(int label) const { return points[static_cast<std::size_t>(label - 1)]; }
};

// Maximal set of configuration labels lying on one line.
struct IncidenceLine {
    LabelSet members;

    bool operator==(const IncidenceLine&) const = default;
    auto operator<=>(const IncidenceLine&) const = default;
};

// All maximal collinear label sets of size >= 2, each line once, sorted.
std::vector<IncidenceLine> line_arrangement(const PointConfig& c);

// Same computation for an arbitrary labeled point list (labels from {1..7},
// pairwise distinct points). Used on 6-point subconfigurations.
std::vector<IncidenceLine> line_arrangement_of(const std::vector<PlanePoint>& pts,
                                               const std::vector<int>& labels);

// True iff some nonzero conic (possibly reducible) passes through all seven
// points: the 7x6 matrix of conic monomials has rank <= 5.
bool on_common_conic(const PointConfig& c);

// Divisor on the blow-up of the plane at the 7 points, in the basis
// H, E_1..E_7 with H^2 = 1, H.E_i = 0, E_i.E_j = -[i=j].
struct PicardVector {
    long h = 0;
    std::array<long, 7> e{};

    bool is_zero() const;
    bool operator==(const PicardVector&) const = default;
};

long picard_pair(const PicardVector& u, const PicardVector& v);

// Pullback of a boundary divisor class along the embedding of the blown-up
// plane: the strict transform H - sum_{i in S} E_i when a side S of d is a
// full incidence line, E_k when a side is a line with exactly the point k
// removed, zero otherwise. Requires a valid embedding (no common conic).
PicardVector pullback_divisor(const PointConfig& c, DivisorClass d);

// Intersection vector of the embedded surface against the 420 class
// representatives via the projection formula: entry i is
// picard_pair(pullback(delta_I), pullback(delta_K)) for rep i = s_{I,J,K}.
CycleClass surface_class(const PointConfig& c);

// Collection of >= 3-element label sets on a ground set.
struct Hypertree {
    LabelSet ground;
    std::vector<LabelSet> parts;
};

struct HypertreeCheck {
    bool valid = false;
    bool irreducible = false;
};

// The four hypertree axioms: part size >= 3, every ground label in >= 2
// parts, convexity for every proper subcollection of >= 2 parts, and the
// normalization identity. Irreducible iff valid with all convexity
// inequalities strict.
HypertreeCheck hypertree_check(const Hypertree& t);

// True iff for every label subset S with |S| >= 3, the points of S are
// collinear exactly when S is contained in some part. Points are listed in
// increasing ground-label order.
bool planar_realization_check(const std::vector<PlanePoint>& points, const Hypertree& t);

// Labels y such that deleting p_y leaves a planar realization of an
// irreducible hypertree on the remaining six labels; the configuration is a
// special hypertree surface iff at least three labels qualify.
LabelSet special_labels(const PointConfig& c);

} // namespace strata

#endif // STRATACONES_PLANE_HPP
