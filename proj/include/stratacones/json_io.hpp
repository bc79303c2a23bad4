#ifndef STRATACONES_JSON_IO_HPP
#define STRATACONES_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "stratacones/classes.hpp"
#include "stratacones/cone.hpp"
#include "stratacones/plane.hpp"

namespace strata {

// Rationals serialize as plain JSON integers when they fit exactly, and as
// "a/b" strings otherwise; both forms parse back.
nlohmann::json rat_to_json(const Rat& r);
Rat rat_from_json(const nlohmann::json& j);

// {"field": {"char": 0|p}, "points": [[x,y,z] x 7]}
nlohmann::json point_config_to_json(const PointConfig& c);
PointConfig point_config_from_json(const nlohmann::json& j);

// Generic labeled point list of any size >= 2, same schema as PointConfig.
std::pair<Field, std::vector<PlanePoint>> labeled_points_from_json(const nlohmann::json& j);

// {"coords": [420 ints]}
nlohmann::json cycle_class_to_json(const CycleClass& v);
CycleClass cycle_class_from_json(const nlohmann::json& j);

// {"functional": ["a/b" x 420], "cone": name}
nlohmann::json certificate_to_json(const FarkasCertificate& cert);
FarkasCertificate certificate_from_json(const nlohmann::json& j);

// FNV-1a 64-bit digest of the canonical dump, as 16 hex digits.
std::string inputs_digest(const nlohmann::json& inputs);

// {"command", "inputs_digest", "outputs", "timing_ms"}
nlohmann::json run_report(const std::string& command, const nlohmann::json& inputs,
                          nlohmann::json outputs, long timing_ms);

} // namespace strata

#endif // STRATACONES_JSON_IO_HPP
