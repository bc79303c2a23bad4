#include "stratacones/cone.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "stratacones/lifts.hpp"
#include "stratacones/matrix.hpp"

namespace strata {

namespace {

const std::vector<std::vector<long>>& rep_vectors() {
    static const std::vector<std::vector<long>> rows = [] {
        std::vector<std::vector<long>> r;
        for (const auto& rep : enumerate_class_reps())
            r.push_back(stratum_class(rep).coords);
        return r;
    }();
    return rows;
}

struct BasisData {
    std::vector<int> idx;                        // rep indices of the basis
    std::vector<std::vector<long>> class_rows;   // full 420-coordinate vectors
    std::vector<std::vector<Rat>> gram_bb_rows;  // restriction to basis coords
};

const BasisData& basis_data() {
    static const BasisData data = [] {
        BasisData d;
        d.idx = select_basis(rep_vectors());
        for (const int b : d.idx)
            d.class_rows.push_back(rep_vectors()[static_cast<std::size_t>(b)]);
        for (const auto& row : d.class_rows) {
            std::vector<Rat> restricted;
            restricted.reserve(d.idx.size());
            for (const int b : d.idx) restricted.emplace_back(row[static_cast<std::size_t>(b)]);
            d.gram_bb_rows.push_back(std::move(restricted));
        }
        return d;
    }();
    return data;
}

void check_generators(const ConeSpec& cone) {
    const std::size_t dim = enumerate_class_reps().size();
    for (const auto& g : cone.generators) {
        if (g.coords.size() != dim)
            throw std::invalid_argument("cone generator has wrong coordinate length");
        if (g.is_zero())
            throw std::invalid_argument("cone generators must be nonzero");
    }
}

} // namespace

const ConeSpec& ConeSpec::v2() {
    static const ConeSpec cone = [] {
        ConeSpec c;
        c.name = "V2";
        for (const auto& rep : enumerate_class_reps())
            c.generators.push_back(stratum_class(rep));
        check_generators(c);
        return c;
    }();
    return cone;
}

const ConeSpec& ConeSpec::v2kv() {
    static const ConeSpec cone = [] {
        ConeSpec c = v2();
        c.name = "V2KV";
        for (const auto& lift : enumerate_kv_lifts())
            c.generators.push_back(kv_lift(lift));
        check_generators(c);
        return c;
    }();
    return cone;
}

ConeSpec ConeSpec::v2kvct(const std::vector<CycleClass>& surfaces) {
    ConeSpec c = v2kv();
    c.name = "V2KVCT";
    for (const auto& s : surfaces) c.generators.push_back(s);
    check_generators(c);
    return c;
}

ConeSpec ConeSpec::custom(std::string name, std::vector<CycleClass> generators) {
    ConeSpec c;
    c.name = std::move(name);
    c.generators = std::move(generators);
    check_generators(c);
    return c;
}

const std::vector<int>& gram_basis() { return basis_data().idx; }

std::optional<std::vector<Rat>> reduce_to_basis(const CycleClass& v) {
    const auto& d = basis_data();
    if (v.coords.size() != rep_vectors().size())
        throw std::invalid_argument("reduce_to_basis: wrong coordinate length");
    std::vector<Rat> v_restricted;
    v_restricted.reserve(d.idx.size());
    for (const int b : d.idx) v_restricted.emplace_back(v.coords[static_cast<std::size_t>(b)]);
    const auto x = solve_coordinates(v_restricted, d.gram_bb_rows);
    if (!x) return std::nullopt;
    // The restricted solve is exact on basis coordinates by construction;
    // the full-length residual detects vectors outside the class lattice.
    for (std::size_t j = 0; j < v.coords.size(); ++j) {
        Rat acc(0);
        for (std::size_t i = 0; i < x->size(); ++i)
            acc += (*x)[i] * Rat(d.class_rows[i][j]);
        if (acc != Rat(v.coords[j])) return std::nullopt;
    }
    return x;
}

namespace {

// Phase-1 simplex on the equality system
//   sum_j lambda_j gen_j[basis coords] = v[basis coords],  lambda >= 0.
//
// The tableau is kept fraction-free: every entry is the true rational value
// scaled by delta, the previous pivot element (a basis minor), and each
// pivot divides exactly by the prior delta. This avoids the per-operation
// gcd cost that makes a plain rational tableau blow up at this size.
//
// Pivoting: Dantzig entering over structural columns (artificials never
// re-enter) with the lexicographic ratio test for leaving. These systems
// are highly degenerate (most right-hand sides are zero), which makes
// Bland's rule crawl through thousands of stalled pivots; the lexicographic
// rule carries the same termination guarantee without that behaviour.
struct Phase1 {
    int n;                            // constraint rows
    int m;                            // structural columns
    std::vector<std::vector<Int>> t;  // n rows x (m + n + 1), scaled by delta
    std::vector<Int> z;               // reduced costs, m + n, scaled by delta
    Int delta = 1;                    // previous pivot (signed, never zero)
    std::vector<int> basis;           // basic variable per row
    std::vector<int> flip;            // +1/-1 row scaling making rhs >= 0

    Phase1(const std::vector<const std::vector<long>*>& columns, const std::vector<long>& rhs)
        : n(static_cast<int>(rhs.size())), m(static_cast<int>(columns.size())) {
        flip.resize(static_cast<std::size_t>(n));
        t.assign(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(m + n + 1)));
        for (int i = 0; i < n; ++i) {
            flip[static_cast<std::size_t>(i)] = rhs[static_cast<std::size_t>(i)] < 0 ? -1 : 1;
            auto& row = t[static_cast<std::size_t>(i)];
            for (int j = 0; j < m; ++j)
                row[static_cast<std::size_t>(j)] =
                    flip[static_cast<std::size_t>(i)] * (*columns[static_cast<std::size_t>(j)])[static_cast<std::size_t>(i)];
            row[static_cast<std::size_t>(m + i)] = 1;
            row[static_cast<std::size_t>(m + n)] = flip[static_cast<std::size_t>(i)] * rhs[static_cast<std::size_t>(i)];
        }
        basis.resize(static_cast<std::size_t>(n));
        z.assign(static_cast<std::size_t>(m + n), Int(0));
        for (int i = 0; i < n; ++i) basis[static_cast<std::size_t>(i)] = m + i;
        for (int j = 0; j < m; ++j) {
            Int s = 0;
            for (int i = 0; i < n; ++i) s += t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            z[static_cast<std::size_t>(j)] = -s;
        }
    }

    int scale_sign() const { return sgn(delta) < 0 ? -1 : 1; }

    Rat objective() const {
        Int s = 0;
        for (int i = 0; i < n; ++i)
            if (basis[static_cast<std::size_t>(i)] >= m)
                s += t[static_cast<std::size_t>(i)][static_cast<std::size_t>(m + n)];
        Rat r(s, delta);
        r.canonicalize();
        return r;
    }

    Rat true_rhs(int i) const {
        Rat r(t[static_cast<std::size_t>(i)][static_cast<std::size_t>(m + n)], delta);
        r.canonicalize();
        return r;
    }

    void pivot(int r, int q) {
        const auto& prow = t[static_cast<std::size_t>(r)];
        const Int piv = prow[static_cast<std::size_t>(q)];
        Int num, rem;
        for (int i = 0; i < n; ++i) {
            if (i == r) continue;
            auto& row = t[static_cast<std::size_t>(i)];
            const Int f = row[static_cast<std::size_t>(q)];
            for (int j = 0; j <= m + n; ++j) {
                num = piv * row[static_cast<std::size_t>(j)] - f * prow[static_cast<std::size_t>(j)];
                mpz_tdiv_qr(row[static_cast<std::size_t>(j)].get_mpz_t(), rem.get_mpz_t(),
                            num.get_mpz_t(), delta.get_mpz_t());
                if (rem != 0) throw std::logic_error("phase-1 simplex: inexact scaled pivot");
            }
        }
        const Int zq = z[static_cast<std::size_t>(q)];
        for (int j = 0; j < m + n; ++j) {
            num = piv * z[static_cast<std::size_t>(j)] - zq * prow[static_cast<std::size_t>(j)];
            mpz_tdiv_qr(z[static_cast<std::size_t>(j)].get_mpz_t(), rem.get_mpz_t(),
                        num.get_mpz_t(), delta.get_mpz_t());
            if (rem != 0) throw std::logic_error("phase-1 simplex: inexact scaled pivot");
        }
        delta = piv;
        basis[static_cast<std::size_t>(r)] = q;
    }

    // Lexicographic comparison of rows i and k as leaving candidates for
    // entering column q: compares the true ratio vectors row/row[q] over the
    // column order (rhs, artificial block). The artificial block holds a
    // nonsingular matrix, so no two rows tie on every column. The shared
    // delta scale and the positive true sign of both pivot entries reduce
    // each step to one integer cross-multiplication.
    bool lex_less(int i, int k, int q) const {
        const auto& ri = t[static_cast<std::size_t>(i)];
        const auto& rk = t[static_cast<std::size_t>(k)];
        const Int bi = abs(ri[static_cast<std::size_t>(q)]);
        const Int bk = abs(rk[static_cast<std::size_t>(q)]);
        const int s = scale_sign();
        const auto oriented = [&](const Int& x) { return s < 0 ? Int(-x) : x; };
        {
            const int cmp = sgn(oriented(ri[static_cast<std::size_t>(m + n)]) * bk -
                                oriented(rk[static_cast<std::size_t>(m + n)]) * bi);
            if (cmp != 0) return cmp < 0;
        }
        for (int c = m; c < m + n; ++c) {
            const int cmp = sgn(oriented(ri[static_cast<std::size_t>(c)]) * bk -
                                oriented(rk[static_cast<std::size_t>(c)]) * bi);
            if (cmp != 0) return cmp < 0;
        }
        return false;
    }

    void solve() {
#ifdef STRATA_LP_STATS
        long pivots = 0;
#endif
        for (;;) {
            const int s = scale_sign();
            // Dantzig: most negative true reduced cost among structural
            // columns; all share the delta scale, so integer compares work.
            int q = -1;
            for (int j = 0; j < m; ++j) {
                if (s * sgn(z[static_cast<std::size_t>(j)]) >= 0) continue;
                if (q < 0) { q = j; continue; }
                const bool better = s > 0 ? z[static_cast<std::size_t>(j)] < z[static_cast<std::size_t>(q)]
                                          : z[static_cast<std::size_t>(j)] > z[static_cast<std::size_t>(q)];
                if (better) q = j;
            }
            if (q < 0) return;
            int lr = -1;
            for (int i = 0; i < n; ++i) {
                const Int& a = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(q)];
                if (s * sgn(a) <= 0) continue; // true column entry must be positive
                if (lr < 0 || lex_less(i, lr, q)) lr = i;
            }
            if (lr < 0) throw std::logic_error("phase-1 simplex: unbounded descent");
            pivot(lr, q);
#ifdef STRATA_LP_STATS
            if (++pivots % 25 == 0 || true) {
                std::fprintf(stderr, "  [lp] pivot=%ld q=%d lr=%d delta_bits=%zu obj=%s\n",
                             pivots, q, lr, mpz_sizeinbase(delta.get_mpz_t(), 2),
                             objective().get_str().c_str());
                std::fflush(stderr);
            }
#endif
        }
    }
};

std::vector<Rat> primitive_scale(const std::vector<Rat>& f) {
    Int scale = 1;
    for (const Rat& x : f) scale = lcm(scale, x.get_den());
    std::vector<Int> ints;
    ints.reserve(f.size());
    Int g = 0;
    for (const Rat& x : f) {
        Rat v = x * Rat(scale);
        v.canonicalize();
        ints.push_back(v.get_num());
        g = gcd(g, ints.back());
    }
    std::vector<Rat> out;
    out.reserve(f.size());
    for (const Int& x : ints) out.emplace_back(g == 0 ? x : Int(x / g));
    return out;
}

} // namespace

MembershipResult membership(const CycleClass& v, const ConeSpec& cone) {
    check_generators(cone);
    const auto& d = basis_data();
    if (!reduce_to_basis(v))
        throw std::invalid_argument("inconsistent-input: target is not a numerical class vector");
    MembershipResult result;
    if (v.is_zero()) {
        result.coefficients = std::map<int, Rat>{};
        return result;
    }

    // Fast path: a positive multiple of a single generator needs no LP.
    for (std::size_t j = 0; j < cone.generators.size(); ++j) {
        const auto r = proportional(v, cone.generators[j]);
        if (r && *r > 0) {
            result.coefficients = std::map<int, Rat>{{static_cast<int>(j), *r}};
            return result;
        }
    }

    const int n = static_cast<int>(d.idx.size());
    const int m = static_cast<int>(cone.generators.size());
    std::vector<std::vector<long>> columns(static_cast<std::size_t>(m),
                                           std::vector<long>(static_cast<std::size_t>(n)));
    std::vector<const std::vector<long>*> column_ptrs;
    for (int j = 0; j < m; ++j) {
        for (int k = 0; k < n; ++k)
            columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                cone.generators[static_cast<std::size_t>(j)].coords[static_cast<std::size_t>(d.idx[static_cast<std::size_t>(k)])];
        column_ptrs.push_back(&columns[static_cast<std::size_t>(j)]);
    }
    std::vector<long> rhs(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        rhs[static_cast<std::size_t>(k)] = v.coords[static_cast<std::size_t>(d.idx[static_cast<std::size_t>(k)])];

    Phase1 lp(column_ptrs, rhs);
    lp.solve();

    if (lp.objective() == 0) {
        std::map<int, Rat> coeffs;
        for (int i = 0; i < n; ++i) {
            const int var = lp.basis[static_cast<std::size_t>(i)];
            const Rat value = lp.true_rhs(i);
            if (var < m && value != 0) coeffs[var] = value;
        }
        // Soundness: the combination must reproduce v on all 420 coordinates.
        for (std::size_t j = 0; j < v.coords.size(); ++j) {
            Rat acc(0);
            for (const auto& [g, c] : coeffs)
                acc += c * Rat(cone.generators[static_cast<std::size_t>(g)].coords[j]);
            if (acc != Rat(v.coords[j]))
                throw std::logic_error("membership: feasible combination failed exact recheck");
        }
        result.coefficients = std::move(coeffs);
        return result;
    }

    // Infeasible: recover the dual from the final basis alone, solving
    // B^T y = c_B exactly, then undo the row flips and lift to 420 coords.
    std::vector<std::vector<Rat>> b_rows(static_cast<std::size_t>(n),
                                         std::vector<Rat>(static_cast<std::size_t>(n)));
    std::vector<Rat> c_b(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int var = lp.basis[static_cast<std::size_t>(i)];
        c_b[static_cast<std::size_t>(i)] = var >= m ? 1 : 0;
        for (int k = 0; k < n; ++k) {
            if (var < m)
                b_rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
                    Rat(lp.flip[static_cast<std::size_t>(k)] * columns[static_cast<std::size_t>(var)][static_cast<std::size_t>(k)]);
            else
                b_rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = Rat(var - m == k ? 1 : 0);
        }
    }
    const auto y = solve_coordinates(c_b, b_rows);
    if (!y) throw std::logic_error("membership: singular final basis");

    std::vector<Rat> functional(v.coords.size(), Rat(0));
    for (int k = 0; k < n; ++k)
        functional[static_cast<std::size_t>(d.idx[static_cast<std::size_t>(k)])] =
            -Rat(lp.flip[static_cast<std::size_t>(k)]) * (*y)[static_cast<std::size_t>(k)];

    FarkasCertificate cert;
    cert.functional = primitive_scale(functional);
    cert.cone = cone.name;
    if (!verify_certificate(v, cone, cert))
        throw std::logic_error("membership: emitted certificate failed verification");
    result.certificate = std::move(cert);
    return result;
}

bool verify_certificate(const CycleClass& v, const ConeSpec& cone, const FarkasCertificate& cert) {
    if (cert.functional.size() != v.coords.size()) return false;
    const auto dot = [&](const CycleClass& w) {
        Rat acc(0);
        for (std::size_t j = 0; j < w.coords.size(); ++j)
            if (w.coords[j] != 0) acc += cert.functional[j] * Rat(w.coords[j]);
        return acc;
    };
    for (const auto& g : cone.generators) {
        if (g.coords.size() != cert.functional.size()) return false;
        if (dot(g) < 0) return false;
    }
    return dot(v) < 0;
}

MembershipResult extremal_result(int g, const ConeSpec& cone) {
    if (g < 0 || g >= static_cast<int>(cone.generators.size()))
        throw std::out_of_range("extremal_result: generator index out of range");
    const CycleClass& target = cone.generators[static_cast<std::size_t>(g)];
    ConeSpec rest;
    rest.name = cone.name;
    for (int j = 0; j < static_cast<int>(cone.generators.size()); ++j) {
        if (j == g) continue;
        const auto r = proportional(cone.generators[static_cast<std::size_t>(j)], target);
        if (r && *r > 0) continue;
        rest.generators.push_back(cone.generators[static_cast<std::size_t>(j)]);
    }
    return membership(target, rest);
}

bool extremal_in_cone(int g, const ConeSpec& cone) { return !extremal_result(g, cone).member(); }

bool verify_extremality(int g, const ConeSpec& cone, const FarkasCertificate& cert) {
    if (g < 0 || g >= static_cast<int>(cone.generators.size())) return false;
    const CycleClass& target = cone.generators[static_cast<std::size_t>(g)];
    if (cert.functional.size() != target.coords.size()) return false;
    const auto dot = [&](const CycleClass& w) {
        Rat acc(0);
        for (std::size_t j = 0; j < w.coords.size(); ++j)
            if (w.coords[j] != 0) acc += cert.functional[j] * Rat(w.coords[j]);
        return acc;
    };
    for (int j = 0; j < static_cast<int>(cone.generators.size()); ++j) {
        const CycleClass& other = cone.generators[static_cast<std::size_t>(j)];
        if (other.coords.size() != cert.functional.size()) return false;
        if (j == g) continue;
        const auto r = proportional(other, target);
        if (r && *r > 0) continue;
        if (dot(other) < 0) return false;
    }
    return dot(target) < 0;
}

FarkasCertificate transport_certificate(const Perm& g, const FarkasCertificate& cert) {
    const auto p = class_permutation(g);
    if (cert.functional.size() != p.size())
        throw std::invalid_argument("transport_certificate: functional length mismatch");
    FarkasCertificate out;
    out.cone = cert.cone;
    out.functional.assign(cert.functional.size(), Rat(0));
    for (std::size_t r = 0; r < p.size(); ++r)
        out.functional[static_cast<std::size_t>(p[r])] = cert.functional[r];
    return out;
}

} // namespace strata
