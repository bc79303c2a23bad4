#ifndef STRATACONES_LABELS_HPP
#define STRATACONES_LABELS_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace strata {

// A set of marking labels out of {1..7}, stored as a bitmask
// (label v <-> bit v-1). Cheap to copy, order by mask.
struct LabelSet {
    std::uint32_t m = 0;

    static constexpr LabelSet mask(std::uint32_t bits) { return LabelSet{bits}; }

    static constexpr LabelSet single(int label) {
        return LabelSet{1u << (label - 1)};
    }

    static LabelSet of(std::initializer_list<int> labels) {
        LabelSet s;
        for (int v : labels) {
            if (v < 1 || v > 7) throw std::invalid_argument("label out of range 1..7");
            s.m |= 1u << (v - 1);
        }
        return s;
    }

    [[nodiscard]] constexpr bool contains(int label) const {
        return (m >> (label - 1)) & 1u;
    }
    [[nodiscard]] constexpr int size() const { return std::popcount(m); }
    [[nodiscard]] constexpr bool empty() const { return m == 0; }

    [[nodiscard]] constexpr bool subset_of(LabelSet o) const { return (m & ~o.m) == 0; }
    [[nodiscard]] constexpr bool disjoint(LabelSet o) const { return (m & o.m) == 0; }

    [[nodiscard]] constexpr LabelSet complement(LabelSet universe) const {
        return LabelSet{universe.m & ~m};
    }

    [[nodiscard]] int min_label() const {
        if (m == 0) throw std::logic_error("min_label of empty set");
        return std::countr_zero(m) + 1;
    }

    [[nodiscard]] std::vector<int> labels() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v = 1; v <= 7; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }

    [[nodiscard]] std::string str() const {
        std::string out;
        for (int v = 1; v <= 7; ++v)
            if (contains(v)) out += static_cast<char>('0' + v);
        return out.empty() ? std::string("-") : out;
    }

    friend constexpr LabelSet operator|(LabelSet a, LabelSet b) { return LabelSet{a.m | b.m}; }
    friend constexpr LabelSet operator&(LabelSet a, LabelSet b) { return LabelSet{a.m & b.m}; }
    friend constexpr LabelSet operator-(LabelSet a, LabelSet b) { return LabelSet{a.m & ~b.m}; }
    friend constexpr bool operator==(LabelSet a, LabelSet b) { return a.m == b.m; }
    friend constexpr auto operator<=>(LabelSet a, LabelSet b) { return a.m <=> b.m; }
};

inline constexpr LabelSet kAllSeven = LabelSet{0x7f};

// Keel's ** relation between two sides of boundary partitions: one of the
// four containments among a, b and their complements must hold.
[[nodiscard]] constexpr bool star(LabelSet a, LabelSet b, LabelSet universe = kAllSeven) {
    return a.subset_of(b) || b.subset_of(a) || a.disjoint(b) || (a | b) == universe;
}

} // namespace strata

#endif
