#include "stratacones/classes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace strata {

bool CycleClass::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](long c) { return c == 0; });
}

bool classes_equal_criterion(const Stratum& s, const Stratum& t) {
    if (s == t) return true;
    const Stratum a = s.size_normalized();
    const Stratum b = t.size_normalized();
    const auto ta = a.type();
    const auto tb = b.type();
    if (ta != std::array<int, 3>{2, 1, 4} || tb != std::array<int, 3>{2, 1, 4}) return false;
    return a.K == b.K;
}

namespace {

struct ClassTables {
    std::vector<Stratum> reps;
    std::vector<int> class_of; // stratum index -> rep index
};

const ClassTables& class_tables() {
    static const ClassTables tables = [] {
        ClassTables t;
        const auto& strata = enumerate_strata();
        t.class_of.assign(strata.size(), -1);
        // Representatives are discovered in enumeration order; within a
        // class the first stratum seen is the smallest, so it is the rep.
        std::map<std::pair<std::uint32_t, std::uint32_t>, int> seen_214;
        for (std::size_t i = 0; i < strata.size(); ++i) {
            const Stratum sn = strata[i].size_normalized();
            if (sn.type() == std::array<int, 3>{2, 1, 4}) {
                const auto key = std::make_pair(sn.K.m, std::uint32_t{0});
                auto it = seen_214.find(key);
                if (it != seen_214.end()) {
                    t.class_of[i] = it->second;
                    continue;
                }
                const int rep = static_cast<int>(t.reps.size());
                seen_214.emplace(key, rep);
                t.class_of[i] = rep;
                t.reps.push_back(strata[i]);
            } else {
                t.class_of[i] = static_cast<int>(t.reps.size());
                t.reps.push_back(strata[i]);
            }
        }
        return t;
    }();
    return tables;
}

} // namespace

const std::vector<Stratum>& enumerate_class_reps() { return class_tables().reps; }

int class_index(const Stratum& s) {
    return class_tables().class_of[static_cast<std::size_t>(stratum_index(s))];
}

CycleClass stratum_class(const Stratum& s) {
    const auto& reps = enumerate_class_reps();
    CycleClass c;
    c.coords.resize(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
        c.coords[i] = pair(s, reps[i]);
    c.origin = std::map<Stratum, long>{{s, 1}};
    return c;
}

CycleClass combination_class(const std::map<Stratum, long>& terms) {
    const auto& reps = enumerate_class_reps();
    CycleClass c;
    c.coords.assign(reps.size(), 0);
    for (const auto& [s, coeff] : terms) {
        if (coeff == 0) continue;
        for (std::size_t i = 0; i < reps.size(); ++i)
            c.coords[i] += coeff * pair(s, reps[i]);
    }
    c.origin = terms;
    return c;
}

std::optional<Rat> proportional(const CycleClass& u, const CycleClass& v) {
    if (u.coords.size() != v.coords.size())
        throw std::invalid_argument("proportional: dimension mismatch");
    if (u.is_zero()) return Rat(0);
    if (v.is_zero()) return std::nullopt;
    Rat r;
    bool have_r = false;
    for (std::size_t i = 0; i < v.coords.size(); ++i) {
        if (v.coords[i] == 0) {
            if (u.coords[i] != 0) return std::nullopt;
            continue;
        }
        const Rat ri = Rat(u.coords[i]) / Rat(v.coords[i]);
        if (!have_r) {
            r = ri;
            have_r = true;
        } else if (r != ri) {
            return std::nullopt;
        }
    }
    return r;
}

CycleClass act(const Perm& g, const CycleClass& v) {
    const auto& reps = enumerate_class_reps();
    if (v.coords.size() != reps.size())
        throw std::invalid_argument("act: coords length mismatch");
    const Perm ginv = g.inverse();
    CycleClass out;
    out.coords.resize(reps.size());
    for (std::size_t r = 0; r < reps.size(); ++r)
        out.coords[r] = v.coords[static_cast<std::size_t>(class_index(act(ginv, reps[r])))];
    if (v.origin) {
        std::map<Stratum, long> o;
        for (const auto& [s, c] : *v.origin) o[act(g, s)] += c;
        out.origin = std::move(o);
    }
    return out;
}

std::vector<int> class_permutation(const Perm& g) {
    const auto& reps = enumerate_class_reps();
    std::vector<int> p(reps.size());
    for (std::size_t r = 0; r < reps.size(); ++r)
        p[r] = class_index(act(g, reps[r]));
    return p;
}

} // namespace strata
