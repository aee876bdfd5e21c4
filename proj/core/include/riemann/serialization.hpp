#pragma once

// JSON conversions for the report types (nlohmann::json, found by ADL).

#include <nlohmann/json.hpp>

#include "riemann/branch.hpp"
#include "riemann/explicit_formula.hpp"
#include "riemann/types.hpp"
#include "riemann/zero_finder.hpp"
#include "riemann/zero_list.hpp"

namespace riemann {
void to_json(nlohmann::json& j, const QuadratureConfig& v);
void from_json(const nlohmann::json& j, QuadratureConfig& v);
void to_json(nlohmann::json& j, const ZeroList& v);
void from_json(const nlohmann::json& j, ZeroList& v);
}  // namespace riemann

namespace riemann::formula {
void to_json(nlohmann::json& j, const FormulaBreakdown& v);
void from_json(const nlohmann::json& j, FormulaBreakdown& v);
void to_json(nlohmann::json& j, const IdentityReport& v);
void from_json(const nlohmann::json& j, IdentityReport& v);
}  // namespace riemann::formula

namespace riemann::zeros {
void to_json(nlohmann::json& j, const ZeroCountReport& v);
void from_json(const nlohmann::json& j, ZeroCountReport& v);
}  // namespace riemann::zeros

namespace riemann::branch {
void to_json(nlohmann::json& j, const JumpMeasurement& v);
void from_json(const nlohmann::json& j, JumpMeasurement& v);
void to_json(nlohmann::json& j, const RogueJumps& v);
void from_json(const nlohmann::json& j, RogueJumps& v);
}  // namespace riemann::branch
