#include "stratacones/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace strata {

RatMatrix RatMatrix::from_long(const std::vector<std::vector<long>>& rows_in) {
    int r = static_cast<int>(rows_in.size());
    int c = r == 0 ? 0 : static_cast<int>(rows_in[0].size());
    RatMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows_in[static_cast<std::size_t>(i)].size()) != c)
            throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; ++j)
            m.at(i, j) = Rat(rows_in[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return m;
}

bool RatMatrix::symmetric() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < cols; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

long rank(const RatMatrix& m) {
    int rows = m.rows, cols = m.cols;
    std::vector<std::vector<Int>> w(static_cast<std::size_t>(rows), std::vector<Int>(static_cast<std::size_t>(cols)));
    for (int i = 0; i < rows; ++i) {
        Int scale = 1;
        for (int j = 0; j < cols; ++j)
            scale = lcm(scale, m.at(i, j).get_den());
        for (int j = 0; j < cols; ++j) {
            Rat v = m.at(i, j) * Rat(scale);
            v.canonicalize();
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v.get_num();
        }
    }

    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (w[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(w[static_cast<std::size_t>(piv)], w[static_cast<std::size_t>(r)]);
        const auto& pr = w[static_cast<std::size_t>(r)];
        for (int i = r + 1; i < rows; ++i) {
            auto& row = w[static_cast<std::size_t>(i)];
            for (int j = c + 1; j < cols; ++j) {
                Int t = pr[static_cast<std::size_t>(c)] * row[static_cast<std::size_t>(j)] -
                        row[static_cast<std::size_t>(c)] * pr[static_cast<std::size_t>(j)];
                mpz_divexact(row[static_cast<std::size_t>(j)].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            row[static_cast<std::size_t>(c)] = 0;
        }
        prev = pr[static_cast<std::size_t>(c)];
        ++r;
    }
    return r;
}

namespace {

void sym_swap(std::vector<std::vector<Rat>>& a, int x, int y) {
    if (x == y) return;
    std::swap(a[static_cast<std::size_t>(x)], a[static_cast<std::size_t>(y)]);
    for (auto& row : a) std::swap(row[static_cast<std::size_t>(x)], row[static_cast<std::size_t>(y)]);
}

} // namespace

std::pair<long, long> signature(const RatMatrix& m) {
    if (!m.symmetric()) throw std::invalid_argument("signature: matrix not symmetric");
    int n = m.rows;
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);

    long pos = 0, neg = 0;
    int k = 0;
    while (k < n) {
        int diag = -1;
        for (int j = k; j < n; ++j)
            if (a[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] != 0) { diag = j; break; }

        if (diag >= 0) {
            sym_swap(a, k, diag);
            const Rat d = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
            (sgn(d) > 0 ? pos : neg) += 1;
            for (int i = k + 1; i < n; ++i) {
                if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] == 0) continue;
                const Rat f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] / d;
                for (int j = i; j < n; ++j)
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            }
            // restore symmetry of the trailing block from its lower half
            for (int i = k + 1; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            ++k;
            continue;
        }

        int r = -1, c = -1;
        for (int i = k; i < n && r < 0; ++i)
            for (int j = i + 1; j < n; ++j)
                if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) { r = i; c = j; break; }
        if (r < 0) break; // trailing block is zero

        sym_swap(a, k, r);
        if (c == k) c = r;
        if (c != k + 1) sym_swap(a, k + 1, c);
        // Off-diagonal pivot [[0,b],[b,0]]: one positive and one negative
        // inertia contribution, then a Schur complement on the rest.
        const Rat b = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k + 1)];
        ++pos;
        ++neg;
        for (int i = k + 2; i < n; ++i) {
            const Rat p = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            const Rat q = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k + 1)];
            if (p == 0 && q == 0) continue;
            for (int j = i; j < n; ++j) {
                const Rat pj = a[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                const Rat qj = a[static_cast<std::size_t>(j)][static_cast<std::size_t>(k + 1)];
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= (p * qj + q * pj) / b;
            }
        }
        for (int i = k + 2; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        k += 2;
    }
    return {pos, neg};
}

std::vector<int> select_basis(const std::vector<std::vector<long>>& vectors) {
    std::vector<int> chosen;
    std::vector<std::vector<Rat>> echelon;
    std::vector<int> pivot_col;
    for (int idx = 0; idx < static_cast<int>(vectors.size()); ++idx) {
        const auto& vin = vectors[static_cast<std::size_t>(idx)];
        std::vector<Rat> w(vin.size());
        for (std::size_t j = 0; j < vin.size(); ++j) w[j] = Rat(vin[j]);
        for (std::size_t e = 0; e < echelon.size(); ++e) {
            int pc = pivot_col[e];
            if (w[static_cast<std::size_t>(pc)] == 0) continue;
            const Rat f = w[static_cast<std::size_t>(pc)];
            for (std::size_t j = 0; j < w.size(); ++j)
                w[j] -= f * echelon[e][j];
        }
        int pc = -1;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (w[j] != 0) { pc = static_cast<int>(j); break; }
        if (pc < 0) continue;
        const Rat p = w[static_cast<std::size_t>(pc)];
        for (auto& x : w) x /= p;
        chosen.push_back(idx);
        echelon.push_back(std::move(w));
        pivot_col.push_back(pc);
    }
    return chosen;
}

std::optional<std::vector<Rat>> solve_coordinates(const std::vector<Rat>& v,
                                                  const std::vector<std::vector<Rat>>& basis) {
    const int k = static_cast<int>(basis.size());
    const int n = static_cast<int>(v.size());
    for (const auto& b : basis)
        if (static_cast<int>(b.size()) != n)
            throw std::invalid_argument("solve_coordinates: dimension mismatch");

    // Augmented system with the basis vectors as columns.
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(k + 1)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(i)];
    }

    int r = 0;
    for (int c = 0; c < k; ++c) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) { piv = i; break; }
        if (piv < 0) throw std::invalid_argument("solve_coordinates: basis is linearly dependent");
        std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(r)]);
        for (int i = r + 1; i < n; ++i) {
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] == 0) continue;
            const Rat f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] / a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            for (int j = c; j <= k; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        }
        ++r;
    }
    for (int i = r; i < n; ++i)
        if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) return std::nullopt;

    std::vector<Rat> x(static_cast<std::size_t>(k));
    for (int c = k - 1; c >= 0; --c) {
        Rat s = a[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
        for (int j = c + 1; j < k; ++j)
            s -= a[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(c)] = s / a[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    }
    return x;
}

} // namespace strata
