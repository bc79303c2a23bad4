#ifndef STRATACONES_PERM_HPP
#define STRATACONES_PERM_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stratacones/labels.hpp"

namespace strata {

// Permutation of {1..7} stored as an image array; img[0] is unused.
// Composition is right-to-left: (a * b)(x) = a(b(x)).
struct Perm {
    std::array<std::uint8_t, 8> img{};

    static Perm identity() {
        Perm p;
        for (int v = 0; v <= 7; ++v) p.img[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(v);
        return p;
    }

    static Perm from_images(const std::array<int, 7>& images);

    [[nodiscard]] int operator()(int v) const { return img[static_cast<std::size_t>(v)]; }

    [[nodiscard]] Perm inverse() const {
        Perm r = identity();
        for (int v = 1; v <= 7; ++v) r.img[img[static_cast<std::size_t>(v)]] = static_cast<std::uint8_t>(v);
        return r;
    }

    friend Perm operator*(const Perm& a, const Perm& b) {
        Perm r = identity();
        for (int v = 1; v <= 7; ++v)
            r.img[static_cast<std::size_t>(v)] = a.img[b.img[static_cast<std::size_t>(v)]];
        return r;
    }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
    friend auto operator<=>(const Perm& a, const Perm& b) { return a.img <=> b.img; }
};

[[nodiscard]] LabelSet act(const Perm& p, LabelSet s);

// Cycle notation, e.g. "(36)(45)" or "id". Parsed only at program
// boundaries (CLI arguments, test tables); the listed cycles compose
// right-to-left, which is harmless for disjoint cycles.
[[nodiscard]] Perm parse_cycles(const std::string& word);
[[nodiscard]] std::string cycle_string(const Perm& p);

// All 5040 elements of S7 in a fixed deterministic order.
[[nodiscard]] const std::vector<Perm>& all_s7();

[[nodiscard]] std::vector<Perm> subgroup_closure(const std::vector<Perm>& generators);

// Orbit of a seed under the full S7 action. The action callback must be a
// genuine group action on the seed's value space. Orbit keeps first-seen
// order; stabilizer_order * orbit size = 5040.
template <class T, class ActFn>
std::pair<std::vector<T>, long> orbit_with_stabilizer(const T& seed, ActFn&& action) {
    std::vector<T> orbit;
    long stab = 0;
    for (const Perm& p : all_s7()) {
        T image = action(p, seed);
        if (image == seed) ++stab;
        bool seen = false;
        for (const T& o : orbit)
            if (o == image) { seen = true; break; }
        if (!seen) orbit.push_back(std::move(image));
    }
    return {std::move(orbit), stab};
}

} // namespace strata

#endif
