// Python bindings for the main operations: enumeration counts, exact
// intersection numbers, class vectors, embedded-surface classes, lifts,
// cone membership with certificates, and the surface classification.
// Rationals cross the boundary as strings, class vectors as lists of ints.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "stratacones/boundary.hpp"
#include "stratacones/classes.hpp"
#include "stratacones/cone.hpp"
#include "stratacones/fixtures.hpp"
#include "stratacones/intersect.hpp"
#include "stratacones/lifts.hpp"
#include "stratacones/matrix.hpp"
#include "stratacones/perm.hpp"
#include "stratacones/plane.hpp"

namespace py = pybind11;
using namespace strata;

namespace {

using StratumSpec = std::array<std::vector<int>, 3>;

LabelSet labels_of(const std::vector<int>& v) {
    LabelSet s;
    for (int x : v) {
        if (x < 1 || x > 7) throw std::invalid_argument("label out of range 1..7");
        s = s | LabelSet::single(x);
    }
    return s;
}

Stratum stratum_of(const StratumSpec& spec) {
    return Stratum::make(labels_of(spec[0]), labels_of(spec[1]), labels_of(spec[2]));
}

CycleClass class_of(const std::vector<long>& coords) {
    if (coords.size() != enumerate_class_reps().size())
        throw std::invalid_argument("class vector must have 420 coordinates");
    CycleClass v;
    v.coords = coords;
    return v;
}

py::dict membership_dict(const CycleClass& target, const ConeSpec& cone) {
    const MembershipResult res = membership(target, cone);
    py::dict out;
    out["member"] = res.member();
    if (res.member()) {
        py::dict coeffs;
        for (const auto& [g, c] : *res.coefficients)
            coeffs[py::int_(g)] = c.get_str();
        out["coefficients"] = coeffs;
    } else {
        py::list functional;
        for (const Rat& x : res.certificate->functional) functional.append(x.get_str());
        out["certificate"] = functional;
        out["verified"] = verify_certificate(target, cone, *res.certificate);
    }
    return out;
}

const ConeSpec& named_cone(const std::string& name) {
    if (name == "v2") return ConeSpec::v2();
    if (name == "v2kv") return ConeSpec::v2kv();
    throw std::invalid_argument("unknown cone: " + name);
}

} // namespace

PYBIND11_MODULE(_stratacones, m) {
    m.doc() = "exact intersection calculus and cone certification for boundary 2-strata";

    m.def("divisor_count", [] { return enumerate_divisors().size(); },
          "Number of boundary divisor classes (56).");
    m.def("stratum_count", [] { return enumerate_strata().size(); },
          "Number of boundary 2-strata (490).");
    m.def("class_count", [] { return enumerate_class_reps().size(); },
          "Number of numerical classes of strata (420).");
    m.def("kv_lift_count", [] { return enumerate_kv_lifts().size(); },
          "Number of lifted divisor classes (315).");
    m.def("fixture_names", [] { return fixture_names(); },
          "Names of the built-in point configurations.");

    m.def(
        "class_reps",
        [] {
            std::vector<StratumSpec> out;
            for (const Stratum& s : enumerate_class_reps())
                out.push_back({s.I.labels(), s.J.labels(), s.K.labels()});
            return out;
        },
        "The 420 class representatives as (I, J, K) label triples.");

    m.def(
        "pair",
        [](const StratumSpec& s, const StratumSpec& t) {
            return pair(stratum_of(s), stratum_of(t));
        },
        py::arg("s"), py::arg("t"),
        "Exact intersection number of two boundary 2-strata given as (I, J, K) triples.");

    m.def(
        "self_intersection",
        [](const StratumSpec& s) { return self_intersection_oracle(stratum_of(s)); },
        py::arg("s"), "Self-intersection via the independent relation-substitution route.");

    m.def(
        "stratum_class",
        [](const StratumSpec& s) { return stratum_class(stratum_of(s)).coords; },
        py::arg("s"), "420-coordinate numerical class vector of a stratum.");

    m.def(
        "act",
        [](const std::string& cycles, const std::vector<long>& coords) {
            return act(parse_cycles(cycles), class_of(coords)).coords;
        },
        py::arg("cycles"), py::arg("coords"),
        "Relabeling action on a class vector; the permutation is given in cycle notation.");

    m.def(
        "surface_class",
        [](const std::string& fixture) {
            return surface_class(fixture_config(fixture)).coords;
        },
        py::arg("fixture"), "Class vector of the embedded blown-up plane for a built-in fixture.");

    m.def(
        "line_arrangement",
        [](const std::string& fixture) {
            std::vector<std::vector<int>> out;
            for (const IncidenceLine& l : line_arrangement(fixture_config(fixture)))
                out.push_back(l.members.labels());
            return out;
        },
        py::arg("fixture"), "Maximal collinear label sets of a built-in fixture.");

    m.def(
        "special_labels",
        [](const std::string& fixture) {
            return special_labels(fixture_config(fixture)).labels();
        },
        py::arg("fixture"),
        "Labels whose deletion leaves a planar realization of an irreducible hypertree.");

    m.def(
        "kv_lift_class",
        [](int a, int b, int mm, int i, int j) {
            if (a == b) throw std::invalid_argument("lift needs two distinct labels");
            const LabelSet ground = kAllSeven - LabelSet::single(std::max(a, b));
            const KVDivisor kv = KVDivisor::of_matching(ground, mm, std::min(a, b), i, j);
            return kv_lift(a, b, kv).coords;
        },
        py::arg("a"), py::arg("b"), py::arg("m"), py::arg("i"), py::arg("j"),
        "Class vector of the lift into D_ab of the KV divisor with matching {m,attach},{i,j}.");

    m.def(
        "membership",
        [](const std::vector<long>& coords, const std::string& cone) {
            return membership_dict(class_of(coords), named_cone(cone));
        },
        py::arg("coords"), py::arg("cone"),
        "Exact membership of a class vector in a named cone (v2 or v2kv); "
        "non-members carry a verified Farkas certificate.");

    m.def(
        "custom_membership",
        [](const std::vector<long>& coords, const std::vector<std::vector<long>>& generators) {
            std::vector<CycleClass> gens;
            gens.reserve(generators.size());
            for (const auto& g : generators) gens.push_back(class_of(g));
            const ConeSpec cone = ConeSpec::custom("custom", std::move(gens));
            return membership_dict(class_of(coords), cone);
        },
        py::arg("coords"), py::arg("generators"),
        "Exact membership of a class vector in the cone spanned by the given class vectors.");

    m.def(
        "classify",
        [](int characteristic) {
            const ClassifyResult r = classify_special_surfaces(characteristic);
            return py::make_tuple(r.orbit_size, r.stabilizer_order);
        },
        py::arg("characteristic"),
        "Orbit size and stabilizer order of the special surface class (characteristic 0 or 2).");

    m.def(
        "gram_rank",
        [](bool reps_only) {
            const auto& list = reps_only ? enumerate_class_reps() : enumerate_strata();
            return rank(RatMatrix::from_long(gram_matrix(list)));
        },
        py::arg("reps_only") = false, "Rank of the intersection Gram matrix (127).");
}
