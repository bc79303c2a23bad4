#include "stratacones/boundary.hpp"

#include <map>
#include <stdexcept>

namespace strata {

DivisorClass DivisorClass::of_side(LabelSet side) {
    int n = side.size();
    if (n < 2 || n > 5)
        throw std::invalid_argument("divisor side must have 2..5 labels, got " + side.str());
    if (!side.contains(1)) side = side.complement(kAllSeven);
    return DivisorClass{side};
}

bool star(DivisorClass a, DivisorClass b) { return star(a.rep, b.rep); }

const std::vector<DivisorClass>& enumerate_divisors() {
    static const std::vector<DivisorClass> table = [] {
        std::vector<DivisorClass> out;
        for (std::uint32_t m = 0; m < 128; ++m) {
            LabelSet s{m};
            if (!s.contains(1)) continue;
            int n = s.size();
            if (n < 2 || n > 5) continue;
            out.push_back(DivisorClass{s});
        }
        return out;
    }();
    return table;
}

Stratum Stratum::make(LabelSet i, LabelSet j, LabelSet k) {
    if ((i & j).m || (i & k).m || (j & k).m || (i | j | k) != kAllSeven)
        throw std::invalid_argument("stratum parts must partition the label set");
    if (i.size() < 2 || i.size() > 4 || k.size() < 2 || k.size() > 4 || j.empty())
        throw std::invalid_argument("stratum part sizes out of range");
    if (i.m > k.m) std::swap(i, k);
    return Stratum{i, j, k};
}

Stratum Stratum::from_sides(LabelSet side1, LabelSet side2) {
    if (!side1.disjoint(side2))
        throw std::invalid_argument("stratum sides must be disjoint");
    return make(side1, (side1 | side2).complement(kAllSeven), side2);
}

Stratum Stratum::size_normalized() const {
    if (I.size() > K.size()) return Stratum{K, J, I};
    return *this;
}

std::array<int, 3> Stratum::type() const {
    Stratum n = size_normalized();
    return {n.I.size(), n.J.size(), n.K.size()};
}

const std::vector<Stratum>& enumerate_strata() {
    static const std::vector<Stratum> table = [] {
        std::vector<Stratum> out;
        for (std::uint32_t im = 0; im < 128; ++im) {
            LabelSet i{im};
            int ni = i.size();
            if (ni < 2 || ni > 4) continue;
            for (std::uint32_t km = im + 1; km < 128; ++km) {
                LabelSet k{km};
                if (!i.disjoint(k)) continue;
                int nk = k.size();
                if (nk < 2 || nk > 4) continue;
                LabelSet j = (i | k).complement(kAllSeven);
                if (j.empty() || j.size() > 3) continue;
                out.push_back(Stratum{i, j, k});
            }
        }
        return out;
    }();
    return table;
}

int stratum_index(const Stratum& s) {
    static const std::map<std::pair<std::uint32_t, std::uint32_t>, int> index = [] {
        std::map<std::pair<std::uint32_t, std::uint32_t>, int> out;
        const auto& all = enumerate_strata();
        for (int i = 0; i < static_cast<int>(all.size()); ++i)
            out[{all[static_cast<std::size_t>(i)].I.m, all[static_cast<std::size_t>(i)].K.m}] = i;
        return out;
    }();
    auto it = index.find({s.I.m, s.K.m});
    if (it == index.end()) throw std::invalid_argument("unknown stratum");
    return it->second;
}

DivisorClass act(const Perm& p, DivisorClass d) {
    return DivisorClass::of_side(act(p, d.rep));
}

Stratum act(const Perm& p, const Stratum& s) {
    return Stratum::make(act(p, s.I), act(p, s.J), act(p, s.K));
}

} // namespace strata
