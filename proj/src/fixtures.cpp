#include "stratacones/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include "stratacones/json_io.hpp"

namespace strata {

namespace {

std::vector<std::array<long, 3>> builtin_coords(const std::string& name) {
    // Four lines x=0, y=0, z=0, x+y+z=0; the six pairwise intersection
    // points labeled to realize gamma0, then one diagonal point for h1-h3.
    const std::vector<std::array<long, 3>> six = {
        {0, 0, 1}, {1, -1, 0}, {1, 0, 0}, {0, 1, -1}, {0, 1, 0}, {1, 0, -1},
    };
    if (name == "gamma0") return six;
    auto with = [&](std::array<long, 3> p7) {
        auto v = six;
        v.push_back(p7);
        return v;
    };
    if (name == "h1") return with({1, -1, -1});
    if (name == "h2") return with({1, -1, 1});
    if (name == "h3") return with({1, 1, -1});
    if (name == "fano")
        return {{0, 0, 1}, {1, 1, 0}, {1, 0, 0}, {0, 1, 1}, {0, 1, 0}, {1, 0, 1}, {1, 1, 1}};
    throw std::invalid_argument("unknown fixture: " + name);
}

std::pair<Field, std::vector<PlanePoint>> builtin_points(const std::string& name) {
    const Field f = name == "fano" ? Field::prime(2) : Field::rationals();
    std::vector<PlanePoint> pts;
    for (const auto& c : builtin_coords(name))
        pts.push_back(PlanePoint::make(f, Rat(c[0]), Rat(c[1]), Rat(c[2])));
    return {f, pts};
}

} // namespace

std::vector<std::string> fixture_names() { return {"gamma0", "h1", "h2", "h3", "fano"}; }

std::pair<Field, std::vector<PlanePoint>> fixture_points(const std::string& name) {
    if (const char* dir = std::getenv("STRATA_CONES_FIXTURES")) {
        const std::string path = std::string(dir) + "/" + name + ".json";
        std::ifstream in(path);
        if (in) {
            nlohmann::json j;
            in >> j;
            return labeled_points_from_json(j);
        }
    }
    return builtin_points(name);
}

PointConfig fixture_config(const std::string& name) {
    const auto [f, pts] = fixture_points(name);
    if (pts.size() != 7)
        throw std::invalid_argument("fixture " + name + " is not a 7-point configuration");
    std::vector<std::array<Rat, 3>> coords;
    for (const auto& p : pts) coords.push_back({Rat(p.c[0]), Rat(p.c[1]), Rat(p.c[2])});
    return PointConfig::make(f, coords);
}

Hypertree gamma0_hypertree() {
    Hypertree t;
    t.ground = LabelSet::of({1, 2, 3, 4, 5, 6});
    t.parts = {LabelSet::of({1, 4, 5}), LabelSet::of({1, 3, 6}), LabelSet::of({2, 3, 5}),
               LabelSet::of({2, 4, 6})};
    return t;
}

ClassifyResult classify_special_surfaces(int characteristic) {
    if (characteristic != 0 && characteristic != 2)
        throw std::invalid_argument("classification fixtures exist for characteristic 0 and 2 only");

    const PointConfig seed = fixture_config(characteristic == 0 ? "h1" : "fano");
    if (special_labels(seed).size() < 3)
        throw std::logic_error("classification seed is not a special hypertree surface");
    const CycleClass seed_class = surface_class(seed);

    if (characteristic == 0) {
        const CycleClass c2 = surface_class(fixture_config("h2"));
        const CycleClass c3 = surface_class(fixture_config("h3"));
        if (act(parse_cycles("(36)(45)"), seed_class) != c2)
            throw std::logic_error("h2 is not ((36)(45)) * h1");
        if (act(parse_cycles("(35)(56)(26)(24)(15)(67)"), c2) != c3)
            throw std::logic_error("h3 is not ((35)(56)(26)(24)(15)(67)) * h2");
    }

    ClassifyResult result;
    const auto [orbit, stab_order] = orbit_with_stabilizer(
        seed_class, [](const Perm& g, const CycleClass& v) { return act(g, v); });
    result.orbit_size = static_cast<long>(orbit.size());
    result.stabilizer_order = stab_order;
    for (const Perm& g : all_s7())
        if (act(g, seed_class) == seed_class) result.stabilizer.push_back(g);
    if (static_cast<long>(result.stabilizer.size()) != stab_order)
        throw std::logic_error("stabilizer scan disagrees with orbit count");

    if (characteristic == 0) {
        const std::vector<std::string> g1 = {"id",         "(34)(65)",   "(47)(16)",
                                             "(37)(15)",   "(156)(473)", "(165)(374)"};
        const std::vector<std::string> g2 = {"id", "(12)(56)", "(25)(16)", "(26)(15)"};
        std::vector<Perm> named;
        for (const auto& s : g1) named.push_back(parse_cycles(s));
        for (const auto& s : g2) named.push_back(parse_cycles(s));
        for (const Perm& g : named)
            if (act(g, seed_class) != seed_class)
                throw std::logic_error("named stabilizer element does not fix the class");
        if (static_cast<long>(subgroup_closure(named).size()) != stab_order)
            throw std::logic_error("closure of the named subgroups is not the full stabilizer");
    }
    return result;
}

} // namespace strata
