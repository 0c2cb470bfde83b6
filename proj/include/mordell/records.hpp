#pragma once

#include <json.hpp>

#include "mordell/family.hpp"
#include "mordell/heights.hpp"

namespace mordell {

/// Structured record of a family instance. Integers are decimal strings.
nlohmann::json to_json(const FamilyInstance& instance);
FamilyInstance instance_from_json(const nlohmann::json& record);

/// Fields heights[3], gram[3][3], regulator, regulator_error, independent,
/// plus the digit count and per-entry error bounds. Values carry
/// `report.digits` significant digits; error bounds are rounded up.
nlohmann::json to_json(const HeightReport& report);
HeightReport height_report_from_json(const nlohmann::json& record);

nlohmann::json to_json(const TorsionGroup& group, const MordellCurve& curve);

}  // namespace mordell
