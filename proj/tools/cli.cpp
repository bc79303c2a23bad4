// Command line front end. Every subcommand prints one run report as JSON:
// {"command", "inputs_digest", "outputs", "timing_ms"}. Exit codes: 0 ok,
// 2 invalid input (bad arguments, malformed files, unsupported fixtures),
// 3 violated internal invariant, 1 anything else.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stratacones/boundary.hpp"
#include "stratacones/classes.hpp"
#include "stratacones/cone.hpp"
#include "stratacones/fixtures.hpp"
#include "stratacones/intersect.hpp"
#include "stratacones/json_io.hpp"
#include "stratacones/lifts.hpp"
#include "stratacones/matrix.hpp"
#include "stratacones/parallel.hpp"
#include "stratacones/perm.hpp"
#include "stratacones/plane.hpp"

using nlohmann::json;
using namespace strata;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::string stratum_str(const Stratum& s) {
    return "s_{" + s.I.str() + "," + s.J.str() + "," + s.K.str() + "}";
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

int digit_label(char c, const std::string& spec) {
    if (c < '1' || c > '7') throw std::invalid_argument("bad label in target spec: " + spec);
    return c - '0';
}

// Target for cone queries: a fixture name ("h1" or "fixture:h1"), a lift
// spec "kv:AB:M:IJ" (lift into D_AB of the KV divisor with matching
// {M,attach},{I,J}), or a path to a class-vector JSON file.
CycleClass resolve_target(const std::string& spec, json& echo) {
    std::string name = spec;
    if (name.rfind("fixture:", 0) == 0) name = name.substr(8);
    const auto& known = fixture_names();
    if (std::find(known.begin(), known.end(), name) != known.end()) {
        echo = json{{"fixture", name}};
        return surface_class(fixture_config(name));
    }
    if (spec.rfind("kv:", 0) == 0) {
        std::vector<std::string> tok;
        std::stringstream ss(spec);
        for (std::string part; std::getline(ss, part, ':');) tok.push_back(part);
        if (tok.size() != 4 || tok[1].size() != 2 || tok[2].size() != 1 || tok[3].size() != 2)
            throw std::invalid_argument("lift target must look like kv:67:5:12, got " + spec);
        const int a = digit_label(tok[1][0], spec), b = digit_label(tok[1][1], spec);
        const int m = digit_label(tok[2][0], spec);
        const int i = digit_label(tok[3][0], spec), j = digit_label(tok[3][1], spec);
        if (a == b) throw std::invalid_argument("lift target needs two distinct labels: " + spec);
        const LabelSet ground = kAllSeven - LabelSet::single(std::max(a, b));
        const KVDivisor kv = KVDivisor::of_matching(ground, m, std::min(a, b), i, j);
        echo = json{{"kv_lift", {{"a", a}, {"b", b}, {"m", m}, {"i", i}, {"j", j}}}};
        return kv_lift(a, b, kv);
    }
    echo = json{{"class_file", spec}};
    return cycle_class_from_json(load_json_file(spec));
}

// The 210 embedded-surface classes: S7-orbit of the first stock surface.
std::vector<CycleClass> surface_orbit() {
    const CycleClass seed = surface_class(fixture_config("h1"));
    auto [orbit, stab] = orbit_with_stabilizer(
        seed, [](const Perm& p, const CycleClass& v) { return act(p, v); });
    if (orbit.size() != 210 || stab != 24)
        throw std::logic_error("surface orbit invariant violated");
    return orbit;
}

ConeSpec resolve_cone(const std::string& name) {
    if (name == "v2") return ConeSpec::v2();
    if (name == "v2kv") return ConeSpec::v2kv();
    if (name == "v2kvct") return ConeSpec::v2kvct(surface_orbit());
    throw std::invalid_argument("unknown cone: " + name);
}

json run_enumerate() {
    std::map<std::string, long> census;
    for (const Stratum& s : enumerate_strata()) {
        const auto t = s.type();
        census[std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2])]++;
    }
    long lifts_per_divisor = static_cast<long>(
        enumerate_kv(kAllSeven - LabelSet::single(7)).size());
    return json{{"divisors", enumerate_divisors().size()},
                {"strata", enumerate_strata().size()},
                {"classes", enumerate_class_reps().size()},
                {"type_census", census},
                {"kv_per_six_set", lifts_per_divisor},
                {"kv_lifts", enumerate_kv_lifts().size()}};
}

json run_gram(bool reps_only, int threads) {
    const std::vector<Stratum>& list = reps_only ? enumerate_class_reps() : enumerate_strata();
    std::vector<std::vector<long>> gram;
    if (threads <= 1) {
        gram = gram_matrix(list);
    } else {
        const std::size_t n = list.size();
        gram.assign(n, std::vector<long>(n, 0));
        parallel_for(n, threads, [&](std::size_t r) {
            for (std::size_t c = 0; c < n; ++c)
                gram[r][c] = pair(list[r], list[c]);
        });
    }
    const RatMatrix m = RatMatrix::from_long(gram);
    const long rk = rank(m);
    const auto sig = signature(m);
    return json{{"generators", list.size()},
                {"basis", reps_only ? "class-representatives" : "all-strata"},
                {"rank", rk},
                {"signature", {sig.first, sig.second}}};
}

json run_surface(const std::string& fixture, const std::string& points_file) {
    PointConfig config = points_file.empty()
                             ? fixture_config(fixture)
                             : point_config_from_json(load_json_file(points_file));
    json lines = json::array();
    for (const IncidenceLine& l : line_arrangement(config)) lines.push_back(l.members.str());
    return json{{"field_characteristic", config.field.characteristic},
                {"lines", lines},
                {"on_common_conic", on_common_conic(config)},
                {"special_labels", special_labels(config).str()},
                {"class", cycle_class_to_json(surface_class(config))}};
}

json run_cone(const std::string& cone_name, const std::string& target_spec, json& inputs) {
    json echo;
    const CycleClass target = resolve_target(target_spec, echo);
    inputs["target"] = echo;
    const ConeSpec cone = resolve_cone(cone_name);
    const MembershipResult res = membership(target, cone);
    json out{{"cone", cone.name},
             {"generators", cone.generators.size()},
             {"member", res.member()}};
    if (res.member()) {
        json coeffs = json::object();
        for (const auto& [g, c] : *res.coefficients) coeffs[std::to_string(g)] = rat_to_json(c);
        out["coefficients"] = coeffs;
    } else {
        out["certificate"] = certificate_to_json(*res.certificate);
        out["certificate_verified"] = verify_certificate(target, cone, *res.certificate);
    }
    return out;
}

json run_classify(int characteristic) {
    const ClassifyResult r = classify_special_surfaces(characteristic);
    json stab = json::array();
    for (const Perm& p : r.stabilizer) stab.push_back(cycle_string(p));
    return json{{"characteristic", characteristic},
                {"orbit_size", r.orbit_size},
                {"stabilizer_order", r.stabilizer_order},
                {"stabilizer", stab}};
}

json run_kv_lifts(long limit) {
    json out = json::array();
    for (const KVLift& lift : enumerate_kv_lifts()) {
        if (limit >= 0 && static_cast<long>(out.size()) >= limit) break;
        json terms = json::object();
        for (const auto& [s, c] : kv_lift_terms(lift)) terms[stratum_str(s)] = c;
        out.push_back(json{{"a", lift.a},
                           {"b", lift.b},
                           {"m", lift.m},
                           {"i", lift.i},
                           {"j", lift.j},
                           {"kv_ground", lift.kv.ground.str()},
                           {"terms", terms}});
    }
    return json{{"count", enumerate_kv_lifts().size()}, {"lifts", out}};
}

json run_selfcheck() {
    long checks = 0;
    const auto expect = [&checks](bool ok, const char* what) {
        if (!ok) throw std::logic_error(std::string("selfcheck failed: ") + what);
        ++checks;
    };
    expect(enumerate_divisors().size() == 56, "divisor count");
    expect(enumerate_strata().size() == 490, "stratum count");
    expect(enumerate_class_reps().size() == 420, "class count");
    expect(enumerate_kv_lifts().size() == 315, "lift count");

    const auto S = [](std::initializer_list<int> I, std::initializer_list<int> J,
                      std::initializer_list<int> K) {
        return Stratum::make(LabelSet::of(I), LabelSet::of(J), LabelSet::of(K));
    };
    expect(pair(S({1, 2}, {3}, {4, 5, 6, 7}), S({1, 2}, {3}, {4, 5, 6, 7})) == 0, "(2,1,4) self");
    expect(pair(S({1, 2, 3}, {4}, {5, 6, 7}), S({1, 2, 3}, {4}, {5, 6, 7})) == 1, "(3,1,3) self");
    expect(pair(S({1, 2}, {3, 4}, {5, 6, 7}), S({1, 2}, {3, 4}, {5, 6, 7})) == 1, "(2,2,3) self");
    expect(pair(S({1, 2}, {3, 4, 5}, {6, 7}), S({1, 2}, {3, 4, 5}, {6, 7})) == 2, "(2,3,2) self");

    const CycleClass a = stratum_class(enumerate_class_reps()[0]);
    const CycleClass b = stratum_class(enumerate_class_reps()[1]);
    CycleClass target = a;
    for (std::size_t k = 0; k < target.coords.size(); ++k)
        target.coords[k] += 2 * b.coords[k];
    target.origin.reset();
    const ConeSpec small = ConeSpec::custom("selfcheck", {a, b});
    const MembershipResult inside = membership(target, small);
    expect(inside.member(), "small cone membership");

    CycleClass neg = a;
    for (long& x : neg.coords) x = -x;
    neg.origin.reset();
    const MembershipResult outside = membership(neg, small);
    expect(!outside.member() && outside.certificate.has_value() &&
               verify_certificate(neg, small, *outside.certificate),
           "small cone certificate");
    const FarkasCertificate round =
        certificate_from_json(certificate_to_json(*outside.certificate));
    expect(round.functional == outside.certificate->functional, "certificate round trip");
    return json{{"checks", checks}, {"ok", true}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact intersection calculus and cone certification for boundary 2-strata"};
    app.require_subcommand(1);
    // Let --json-out appear after the subcommand as well as before it.
    app.fallthrough();
    std::string json_out;
    app.add_option("--json-out", json_out, "write the run report to this file");

    auto* cmd_enum = app.add_subcommand("enumerate", "object counts and the stratum type census");

    auto* cmd_gram = app.add_subcommand("gram", "intersection Gram matrix rank and signature");
    bool gram_reps = false;
    int threads = 1;
    cmd_gram->add_flag("--reps", gram_reps, "use the 420 class representatives (default: all 490 strata)");
    cmd_gram->add_option("--threads", threads, "worker threads for matrix assembly")
        ->check(CLI::Range(1, 64));

    auto* cmd_surface = app.add_subcommand("surface", "embedded-surface class of a 7-point plane configuration");
    std::string fixture = "h1", points_file;
    cmd_surface->add_option("--fixture", fixture, "built-in configuration name");
    cmd_surface->add_option("--points", points_file, "JSON file with field and 7 points");

    auto* cmd_cone = app.add_subcommand("cone", "exact membership test with Farkas certificate");
    std::string cone_name = "v2", target_spec;
    cmd_cone->add_option("--cone", cone_name, "v2 | v2kv | v2kvct");
    cmd_cone->add_option("--target", target_spec, "fixture name, kv:AB:M:IJ lift spec, or class-vector file")
        ->required();

    auto* cmd_classify = app.add_subcommand("classify", "orbit and stabilizer of the special surface classes");
    int characteristic = 0;
    cmd_classify->add_option("--characteristic", characteristic, "0 or 2")
        ->check(CLI::IsMember({0, 2}));

    auto* cmd_lifts = app.add_subcommand("kv-lifts", "the 315 lifted divisor classes and their stratum terms");
    long limit = -1;
    cmd_lifts->add_option("--limit", limit, "print at most this many lifts");

    auto* cmd_check = app.add_subcommand("selfcheck", "fast internal consistency check");

    CLI11_PARSE(app, argc, argv);

    Timer timer;
    std::string command;
    json inputs = json::object(), outputs;
    try {
        if (*cmd_enum) {
            command = "enumerate";
            outputs = run_enumerate();
        } else if (*cmd_gram) {
            command = "gram";
            inputs = json{{"reps", gram_reps}, {"threads", threads}};
            outputs = run_gram(gram_reps, threads);
        } else if (*cmd_surface) {
            command = "surface";
            inputs = points_file.empty() ? json{{"fixture", fixture}}
                                         : json{{"points_file", points_file}};
            outputs = run_surface(fixture, points_file);
        } else if (*cmd_cone) {
            command = "cone";
            inputs = json{{"cone", cone_name}};
            outputs = run_cone(cone_name, target_spec, inputs);
        } else if (*cmd_classify) {
            command = "classify";
            inputs = json{{"characteristic", characteristic}};
            outputs = run_classify(characteristic);
        } else if (*cmd_lifts) {
            command = "kv-lifts";
            inputs = json{{"limit", limit}};
            outputs = run_kv_lifts(limit);
        } else if (*cmd_check) {
            command = "selfcheck";
            outputs = run_selfcheck();
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return 2;
    } catch (const json::exception& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return 2;
    } catch (const std::logic_error& e) {
        std::fprintf(stderr, "internal invariant violated: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }

    inputs["command"] = command;
    const json report = run_report(command, inputs, std::move(outputs), timer.ms());
    std::printf("%s\n", report.dump(2).c_str());
    if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out) {
            std::fprintf(stderr, "cannot write %s\n", json_out.c_str());
            return 1;
        }
        out << report.dump(2) << "\n";
    }
    return 0;
}
