#include "stratacones/plane.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "stratacones/matrix.hpp"

namespace strata {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void validate_field(const Field& f) {
    if (f.characteristic == 0) return;
    if (!is_prime(f.characteristic) || f.characteristic > 251)
        throw std::invalid_argument("field characteristic must be 0 or a prime <= 251");
}

long mod_inverse(long a, long p) {
    long t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        const long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::invalid_argument("residue not invertible");
    return t < 0 ? t + p : t;
}

long residue_of(const Int& x, long p) {
    return static_cast<long>(mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p)));
}

} // namespace

Field Field::prime(int p) {
    Field f{p};
    validate_field(f);
    if (p == 0) throw std::invalid_argument("prime field requires nonzero characteristic");
    return f;
}

PlanePoint PlanePoint::make(Field f, const Rat& x, const Rat& y, const Rat& z) {
    validate_field(f);
    PlanePoint pt;
    pt.field = f;
    const std::array<Rat, 3> in{x, y, z};
    if (f.characteristic == 0) {
        Int scale = 1;
        for (const Rat& v : in) scale = lcm(scale, v.get_den());
        for (int k = 0; k < 3; ++k) {
            Rat v = in[static_cast<std::size_t>(k)] * Rat(scale);
            v.canonicalize();
            pt.c[static_cast<std::size_t>(k)] = v.get_num();
        }
        Int g = gcd(gcd(pt.c[0], pt.c[1]), pt.c[2]);
        if (g == 0) throw std::invalid_argument("projective point cannot be (0:0:0)");
        for (auto& v : pt.c) v /= g;
        for (const auto& v : pt.c) {
            if (v == 0) continue;
            if (v < 0)
                for (auto& w : pt.c) w = -w;
            break;
        }
    } else {
        const long p = f.characteristic;
        for (int k = 0; k < 3; ++k) {
            const Rat& v = in[static_cast<std::size_t>(k)];
            const long den = residue_of(v.get_den(), p);
            if (den == 0) throw std::invalid_argument("coordinate denominator divisible by field characteristic");
            const long num = residue_of(v.get_num(), p);
            pt.c[static_cast<std::size_t>(k)] = Int((num * mod_inverse(den, p)) % p);
        }
        long lead = 0;
        for (const auto& v : pt.c)
            if (v != 0) { lead = v.get_si(); break; }
        if (lead == 0) throw std::invalid_argument("projective point cannot be (0:0:0)");
        const long inv = mod_inverse(lead, p);
        for (auto& v : pt.c) v = Int((v.get_si() * inv) % p);
    }
    return pt;
}

bool collinear(const PlanePoint& p, const PlanePoint& q, const PlanePoint& r) {
    if (!(p.field == q.field) || !(p.field == r.field))
        throw std::invalid_argument("collinear: points over different fields");
    const Int det = p.c[0] * (q.c[1] * r.c[2] - q.c[2] * r.c[1]) -
                    p.c[1] * (q.c[0] * r.c[2] - q.c[2] * r.c[0]) +
                    p.c[2] * (q.c[0] * r.c[1] - q.c[1] * r.c[0]);
    if (p.field.characteristic == 0) return det == 0;
    return det % p.field.characteristic == 0;
}

PointConfig PointConfig::make(Field f, const std::vector<std::array<Rat, 3>>& coords) {
    validate_field(f);
    if (coords.size() != 7)
        throw std::invalid_argument("point configuration requires exactly 7 points");
    PointConfig c;
    c.field = f;
    for (const auto& t : coords)
        c.points.push_back(PlanePoint::make(f, t[0], t[1], t[2]));
    for (std::size_t i = 0; i < c.points.size(); ++i)
        for (std::size_t j = i + 1; j < c.points.size(); ++j)
            if (c.points[i] == c.points[j])
                throw std::invalid_argument("points not distinct");
    bool all_on_line = true;
    for (std::size_t k = 2; k < c.points.size() && all_on_line; ++k)
        all_on_line = collinear(c.points[0], c.points[1], c.points[k]);
    if (all_on_line) throw std::invalid_argument("points all collinear");
    return c;
}

std::vector<IncidenceLine> line_arrangement_of(const std::vector<PlanePoint>& pts,
                                               const std::vector<int>& labels) {
    if (pts.size() != labels.size() || pts.size() < 2)
        throw std::invalid_argument("line_arrangement_of: need matching points and labels");
    std::set<std::uint32_t> masks;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i] == pts[j]) throw std::invalid_argument("points not distinct");
            LabelSet line{};
            for (std::size_t k = 0; k < pts.size(); ++k)
                if (k == i || k == j || collinear(pts[i], pts[j], pts[k]))
                    line = line | LabelSet::single(labels[k]);
            masks.insert(line.m);
        }
    }
    std::vector<IncidenceLine> out;
    for (const auto m : masks) out.push_back(IncidenceLine{LabelSet{m}});
    return out;
}

std::vector<IncidenceLine> line_arrangement(const PointConfig& c) {
    std::vector<int> labels{1, 2, 3, 4, 5, 6, 7};
    return line_arrangement_of(c.points, labels);
}

namespace {

long rank_mod_p(std::vector<std::array<long, 6>> rows, long p) {
    long r = 0;
    for (int c = 0; c < 6 && r < static_cast<long>(rows.size()); ++c) {
        std::size_t piv = static_cast<std::size_t>(rows.size());
        for (std::size_t i = static_cast<std::size_t>(r); i < rows.size(); ++i)
            if (rows[i][static_cast<std::size_t>(c)] % p != 0) { piv = i; break; }
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[static_cast<std::size_t>(r)]);
        const long inv = mod_inverse(((rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] % p) + p) % p, p);
        for (std::size_t i = static_cast<std::size_t>(r) + 1; i < rows.size(); ++i) {
            const long f = ((rows[i][static_cast<std::size_t>(c)] % p) * inv) % p;
            if (f == 0) continue;
            for (int j = c; j < 6; ++j) {
                auto& v = rows[i][static_cast<std::size_t>(j)];
                v = ((v - f * rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]) % p + p) % p;
            }
        }
        ++r;
    }
    return r;
}

} // namespace

bool on_common_conic(const PointConfig& c) {
    // Conic monomials x^2, xy, y^2, xz, yz, z^2 evaluated at each point.
    std::vector<std::array<Int, 6>> rows;
    for (const auto& pt : c.points) {
        const Int &x = pt.c[0], &y = pt.c[1], &z = pt.c[2];
        rows.push_back({x * x, x * y, y * y, x * z, y * z, z * z});
    }
    if (c.field.characteristic == 0) {
        RatMatrix m(7, 6);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 6; ++j)
                m.at(i, j) = Rat(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        return rank(m) <= 5;
    }
    const long p = c.field.characteristic;
    std::vector<std::array<long, 6>> small;
    for (const auto& row : rows) {
        std::array<long, 6> s{};
        for (int j = 0; j < 6; ++j)
            s[static_cast<std::size_t>(j)] = residue_of(row[static_cast<std::size_t>(j)], p);
        small.push_back(s);
    }
    return rank_mod_p(small, p) <= 5;
}

bool PicardVector::is_zero() const {
    if (h != 0) return false;
    return std::all_of(e.begin(), e.end(), [](long v) { return v == 0; });
}

long picard_pair(const PicardVector& u, const PicardVector& v) {
    long s = u.h * v.h;
    for (int i = 0; i < 7; ++i)
        s -= u.e[static_cast<std::size_t>(i)] * v.e[static_cast<std::size_t>(i)];
    return s;
}

namespace {

void require_embedding(const PointConfig& c) {
    if (on_common_conic(c))
        throw std::invalid_argument("points lie on a common conic: blow-up is not embedded");
}

PicardVector pullback_one_side(const std::vector<IncidenceLine>& lines, LabelSet side) {
    for (const auto& line : lines) {
        if (line.members == side) {
            PicardVector v;
            v.h = 1;
            for (int i : side.labels()) v.e[static_cast<std::size_t>(i - 1)] = -1;
            return v;
        }
    }
    for (const auto& line : lines) {
        if (line.members.size() < 3) continue;
        if (side.subset_of(line.members) && (line.members - side).size() == 1) {
            PicardVector v;
            v.e[static_cast<std::size_t>((line.members - side).min_label() - 1)] = 1;
            return v;
        }
    }
    return PicardVector{};
}

PicardVector pullback_class(const std::vector<IncidenceLine>& lines, LabelSet side) {
    PicardVector v = pullback_one_side(lines, side);
    if (!v.is_zero()) return v;
    return pullback_one_side(lines, kAllSeven - side);
}

} // namespace

PicardVector pullback_divisor(const PointConfig& c, DivisorClass d) {
    require_embedding(c);
    return pullback_class(line_arrangement(c), d.rep);
}

CycleClass surface_class(const PointConfig& c) {
    require_embedding(c);
    const auto lines = line_arrangement(c);
    const auto& reps = enumerate_class_reps();
    CycleClass out;
    out.coords.resize(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
        out.coords[i] = picard_pair(pullback_class(lines, reps[i].I), pullback_class(lines, reps[i].K));
    return out;
}

HypertreeCheck hypertree_check(const Hypertree& t) {
    HypertreeCheck result;
    const int d = static_cast<int>(t.parts.size());
    if (d == 0) return result;
    for (const auto& part : t.parts)
        if (!part.subset_of(t.ground) || part.size() < 3) return result;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
            if (t.parts[static_cast<std::size_t>(a)] == t.parts[static_cast<std::size_t>(b)]) return result;
    for (int i : t.ground.labels()) {
        int count = 0;
        for (const auto& part : t.parts)
            if (part.contains(i)) ++count;
        if (count < 2) return result;
    }
    // Normalization first: it bounds the part count (each part contributes
    // at least 1), keeping the convexity subset walk small.
    int total = 0;
    for (const auto& part : t.parts) total += part.size() - 2;
    if (total != t.ground.size() - 2) return result;
    bool all_strict = true;
    for (std::uint32_t sel = 1; sel + 1 < (1u << d); ++sel) {
        if (std::popcount(sel) < 2) continue;
        LabelSet u{};
        int sum = 0;
        for (int j = 0; j < d; ++j) {
            if (!(sel & (1u << j))) continue;
            u = u | t.parts[static_cast<std::size_t>(j)];
            sum += t.parts[static_cast<std::size_t>(j)].size() - 2;
        }
        if (u.size() < sum) return result;
        if (u.size() == sum) all_strict = false;
    }
    result.valid = true;
    result.irreducible = all_strict;
    return result;
}

bool planar_realization_check(const std::vector<PlanePoint>& points, const Hypertree& t) {
    const auto labels = t.ground.labels();
    if (points.size() != labels.size())
        throw std::invalid_argument("planar_realization_check: point count must match ground size");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw std::invalid_argument("points not distinct");

    const auto point_of = [&](int label) -> const PlanePoint& {
        const auto it = std::find(labels.begin(), labels.end(), label);
        return points[static_cast<std::size_t>(it - labels.begin())];
    };

    // Walk all label subsets S of the ground set with |S| >= 3.
    for (std::uint32_t sub = t.ground.m;; sub = (sub - 1) & t.ground.m) {
        if (sub == 0) break;
        const LabelSet S{sub};
        if (S.size() >= 3) {
            const auto ls = S.labels();
            bool coll = true;
            for (std::size_t k = 2; k < ls.size() && coll; ++k)
                coll = collinear(point_of(ls[0]), point_of(ls[1]), point_of(ls[k]));
            bool in_part = false;
            for (const auto& part : t.parts)
                if (S.subset_of(part)) { in_part = true; break; }
            if (coll != in_part) return false;
        }
    }
    return true;
}

LabelSet special_labels(const PointConfig& c) {
    require_embedding(c);
    LabelSet out{};
    for (int y = 1; y <= 7; ++y) {
        std::vector<PlanePoint> pts;
        std::vector<int> labels;
        for (int i = 1; i <= 7; ++i) {
            if (i == y) continue;
            pts.push_back(c.at(i));
            labels.push_back(i);
        }
        Hypertree t;
        t.ground = kAllSeven - LabelSet::single(y);
        for (const auto& line : line_arrangement_of(pts, labels))
            if (line.members.size() >= 3) t.parts.push_back(line.members);
        const auto hc = hypertree_check(t);
        if (hc.valid && hc.irreducible) out = out | LabelSet::single(y);
    }
    return out;
}

} // namespace strata
