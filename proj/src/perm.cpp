#include "stratacones/perm.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace strata {

Perm Perm::from_images(const std::array<int, 7>& images) {
    Perm p = identity();
    std::array<bool, 8> seen{};
    for (int v = 1; v <= 7; ++v) {
        int w = images[static_cast<std::size_t>(v - 1)];
        if (w < 1 || w > 7 || seen[static_cast<std::size_t>(w)])
            throw std::invalid_argument("not a permutation of 1..7");
        seen[static_cast<std::size_t>(w)] = true;
        p.img[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(w);
    }
    return p;
}

LabelSet act(const Perm& p, LabelSet s) {
    LabelSet out;
    for (int v = 1; v <= 7; ++v)
        if (s.contains(v)) out.m |= 1u << (p(v) - 1);
    return out;
}

Perm parse_cycles(const std::string& word) {
    if (word == "id" || word == "()" || word.empty()) return Perm::identity();
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    while (i < word.size()) {
        if (word[i] == ' ') { ++i; continue; }
        if (word[i] != '(') throw std::invalid_argument("cycle notation: expected '('");
        ++i;
        std::vector<int> cyc;
        while (i < word.size() && word[i] != ')') {
            char c = word[i];
            if (c >= '1' && c <= '7') {
                cyc.push_back(c - '0');
            } else if (c != ' ' && c != ',') {
                throw std::invalid_argument("cycle notation: bad character");
            }
            ++i;
        }
        if (i == word.size()) throw std::invalid_argument("cycle notation: missing ')'");
        ++i;
        if (cyc.size() < 2) throw std::invalid_argument("cycle notation: cycle too short");
        std::set<int> uniq(cyc.begin(), cyc.end());
        if (uniq.size() != cyc.size()) throw std::invalid_argument("cycle notation: repeated label in cycle");
        cycles.push_back(std::move(cyc));
    }
    // Composes right-to-left: in "(12)(23)" the cycle (23) acts first.
    Perm p = Perm::identity();
    for (const auto& cyc : cycles) {
        Perm c = Perm::identity();
        for (std::size_t k = 0; k < cyc.size(); ++k)
            c.img[static_cast<std::size_t>(cyc[k])] =
                static_cast<std::uint8_t>(cyc[(k + 1) % cyc.size()]);
        p = p * c;
    }
    return p;
}

std::string cycle_string(const Perm& p) {
    std::array<bool, 8> done{};
    std::string out;
    for (int v = 1; v <= 7; ++v) {
        if (done[static_cast<std::size_t>(v)] || p(v) == v) continue;
        out += '(';
        int w = v;
        do {
            done[static_cast<std::size_t>(w)] = true;
            out += static_cast<char>('0' + w);
            w = p(w);
        } while (w != v);
        out += ')';
    }
    return out.empty() ? std::string("id") : out;
}

const std::vector<Perm>& all_s7() {
    static const std::vector<Perm> table = [] {
        std::vector<Perm> out;
        out.reserve(5040);
        std::array<int, 7> images = {1, 2, 3, 4, 5, 6, 7};
        do {
            out.push_back(Perm::from_images(images));
        } while (std::next_permutation(images.begin(), images.end()));
        return out;
    }();
    return table;
}

std::vector<Perm> subgroup_closure(const std::vector<Perm>& generators) {
    std::set<Perm> seen;
    std::vector<Perm> frontier = {Perm::identity()};
    seen.insert(Perm::identity());
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& p : frontier)
            for (const Perm& g : generators) {
                Perm q = g * p;
                if (seen.insert(q).second) next.push_back(q);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

} // namespace strata
