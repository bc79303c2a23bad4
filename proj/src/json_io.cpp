#include "stratacones/json_io.hpp"

#include <cstdint>
#include <cstdio>
#include <stdexcept>

namespace strata {

nlohmann::json rat_to_json(const Rat& r) {
    if (r.get_den() == 1) {
        const Int& num = r.get_num();
        // JSON numbers are exact for |n| < 2^53; keep bigger values textual.
        if (num.fits_slong_p()) {
            const long v = num.get_si();
            if (v < (1L << 53) && v > -(1L << 53)) return nlohmann::json(v);
        }
    }
    return nlohmann::json(rat_string(r));
}

Rat rat_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw std::invalid_argument("expected an integer or an \"a/b\" string");
}

nlohmann::json point_config_to_json(const PointConfig& c) {
    nlohmann::json j;
    j["field"] = {{"char", c.field.characteristic}};
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : c.points) {
        nlohmann::json trip = nlohmann::json::array();
        for (const auto& x : p.c) trip.push_back(rat_to_json(Rat(x)));
        pts.push_back(trip);
    }
    j["points"] = pts;
    return j;
}

std::pair<Field, std::vector<PlanePoint>> labeled_points_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("points"))
        throw std::invalid_argument("point file must have \"field\" and \"points\"");
    const auto& jf = j.at("field");
    if (!jf.is_object() || !jf.contains("char") || !jf.at("char").is_number_integer())
        throw std::invalid_argument("\"field\" must be {\"char\": 0 or prime}");
    const int ch = jf.at("char").get<int>();
    const Field f = ch == 0 ? Field::rationals() : Field::prime(ch);
    const auto& jp = j.at("points");
    if (!jp.is_array() || jp.size() < 2)
        throw std::invalid_argument("\"points\" must be an array of at least 2 triples");
    std::vector<PlanePoint> pts;
    for (const auto& trip : jp) {
        if (!trip.is_array() || trip.size() != 3)
            throw std::invalid_argument("each point must be a triple [x, y, z]");
        pts.push_back(PlanePoint::make(f, rat_from_json(trip[0]), rat_from_json(trip[1]),
                                       rat_from_json(trip[2])));
    }
    return {f, pts};
}

PointConfig point_config_from_json(const nlohmann::json& j) {
    const auto [f, pts] = labeled_points_from_json(j);
    std::vector<std::array<Rat, 3>> coords;
    for (const auto& p : pts)
        coords.push_back({Rat(p.c[0]), Rat(p.c[1]), Rat(p.c[2])});
    return PointConfig::make(f, coords);
}

nlohmann::json cycle_class_to_json(const CycleClass& v) {
    nlohmann::json j;
    j["coords"] = v.coords;
    return j;
}

CycleClass cycle_class_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("coords") || !j.at("coords").is_array())
        throw std::invalid_argument("class vector must be {\"coords\": [...]}");
    CycleClass v;
    for (const auto& x : j.at("coords")) {
        if (!x.is_number_integer())
            throw std::invalid_argument("class coordinates must be integers");
        v.coords.push_back(x.get<long>());
    }
    if (v.coords.size() != enumerate_class_reps().size())
        throw std::invalid_argument("class vector must have 420 coordinates");
    return v;
}

nlohmann::json certificate_to_json(const FarkasCertificate& cert) {
    nlohmann::json j;
    nlohmann::json f = nlohmann::json::array();
    for (const auto& x : cert.functional) f.push_back(rat_string(x));
    j["functional"] = f;
    j["cone"] = cert.cone;
    return j;
}

FarkasCertificate certificate_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("functional") || !j.at("functional").is_array())
        throw std::invalid_argument("certificate must be {\"functional\": [...], \"cone\": name}");
    FarkasCertificate cert;
    for (const auto& x : j.at("functional")) {
        if (!x.is_string()) throw std::invalid_argument("certificate entries must be rational strings");
        cert.functional.push_back(parse_rat(x.get<std::string>()));
    }
    cert.cone = j.value("cone", std::string{});
    return cert;
}

std::string inputs_digest(const nlohmann::json& inputs) {
    const std::string dump = inputs.dump();
    std::uint64_t hash = 1469598103934665603ull;
    for (const unsigned char c : dump) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return std::string(buf);
}

nlohmann::json run_report(const std::string& command, const nlohmann::json& inputs,
                          nlohmann::json outputs, long timing_ms) {
    nlohmann::json j;
    j["command"] = command;
    j["inputs_digest"] = inputs_digest(inputs);
    j["outputs"] = std::move(outputs);
    j["timing_ms"] = timing_ms;
    return j;
}

} // namespace strata
