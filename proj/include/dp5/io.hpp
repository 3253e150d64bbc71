#pragma once

#include <string>

#include <json.hpp>

#include "dp5/constants.hpp"
#include "dp5/enumerator.hpp"
#include "dp5/heights.hpp"
#include "dp5/types.hpp"

namespace dp5 {

// Integers go out as JSON numbers when they fit in 64 bits, otherwise as decimal strings.
nlohmann::json integer_to_json(const Integer& x);
Integer integer_from_json(const nlohmann::json& j);

// {"id": "p1", "forms": [[c11,c22,c33,c12,c13,c23], ...]}
nlohmann::json height_set_to_json(const HeightSet& ps);
// Accepts the object above or a bare array of rows; built-in ids may omit forms.
HeightSet height_set_from_json(const nlohmann::json& j);
HeightSet load_height_set(const std::string& path);

// [a1,a2,a3,a4,a12,a13,a14,a23,a24,a34]
nlohmann::json cox_tuple_to_json(const CoxTuple& a);
CoxTuple cox_tuple_from_json(const nlohmann::json& j);

// Intervals as [lo, hi] decimal strings rounded outward at `digits` places.
nlohmann::json interval_to_json(const Interval& x, unsigned digits);
nlohmann::json constant_report_to_json(const ConstantReport& r, unsigned digits = 30);

}  // namespace dp5
