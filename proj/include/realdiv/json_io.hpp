#pragma once

#include <json.hpp>

#include "realdiv/bergman.hpp"
#include "realdiv/bounds.hpp"
#include "realdiv/curves.hpp"
#include "realdiv/jacobian.hpp"
#include "realdiv/periods.hpp"
#include "realdiv/torus_sim.hpp"

namespace realdiv {

inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json to_json(const RealHyperellipticCurve& curve);
RealHyperellipticCurve curve_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QuadratureSpec& spec);
nlohmann::json to_json(const ComessattiPeriods& periods);
nlohmann::json to_json(const RealJacobianReport& report);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const TorusPolyline& line);
nlohmann::json to_json(const CoverBracket& bracket);

}  // namespace realdiv
