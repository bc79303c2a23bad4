#ifndef STRATACONES_MATRIX_HPP
#define STRATACONES_MATRIX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "stratacones/rational.hpp"

namespace strata {

// Dense matrix of exact rationals. At the sizes handled here (at most a few
// hundred rows) dense storage is simpler and fast enough; there is no sparse
// mode on purpose.
struct RatMatrix {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}

    [[nodiscard]] Rat& at(int r, int c) { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
    [[nodiscard]] const Rat& at(int r, int c) const { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }

    static RatMatrix from_long(const std::vector<std::vector<long>>& rows_in);
    [[nodiscard]] bool symmetric() const;
};

// Exact rank via fraction-free (Bareiss) elimination on a denominator-cleared
// integer copy. Fraction-free updates keep every intermediate entry an exact
// minor of the input, which bounds coefficient growth far better than naive
// rational elimination.
[[nodiscard]] long rank(const RatMatrix& m);

// (positives, negatives) of an exact congruence diagonalization. Symmetric
// pivoting; when the remaining diagonal is all zero but the block is not,
// an off-diagonal 2x2 block contributes one pivot of each sign. Requires a
// symmetric input. positives + negatives == rank.
[[nodiscard]] std::pair<long, long> signature(const RatMatrix& m);

// Indices of a maximal linearly independent subset of the given integer
// vectors, greedy in input order (first independent vector wins).
[[nodiscard]] std::vector<int> select_basis(const std::vector<std::vector<long>>& vectors);

// Exact coefficients with sum(coeffs[i] * basis[i]) == v, or nullopt when v
// is not in the span. Throws if the claimed basis is linearly dependent.
[[nodiscard]] std::optional<std::vector<Rat>> solve_coordinates(
    const std::vector<Rat>& v, const std::vector<std::vector<Rat>>& basis);

} // namespace strata

#endif
